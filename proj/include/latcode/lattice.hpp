// Construction-A lattices and nested lattice pairs.
//
// A Construction-A lattice is beta * (C + pZ^n) for a linear code C over F_p.
// Closest-point quantization enumerates the p^k cosets of beta*p*Z^n: for each
// codeword c the best candidate is beta*(c + p*round((x/beta - c)/p)); ties
// are broken toward the candidate from the lexicographically smallest message
// vector, and coordinate rounding resolves halves away from zero.
//
// A nested pair combines a fine code C with a coarse shaping lattice. In
// hypercube mode the coarse lattice is beta*p*Z^n and the fine lattice is
// beta*Lambda_A(C). In general mode the coarse lattice is beta*Lambda_A(C_c)
// with integer basis M, and the fine lattice is (beta/p)*M^T*Lambda_A(C),
// quantized by searching over the p^k coset shifts of the coarse quantizer.
// The quotient fine/coarse has exactly p^k cosets, labeled by F_p^k through
// the information set of C's systematic generator.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "latcode/errors.hpp"
#include "latcode/galois.hpp"
#include "latcode/linear_code.hpp"
#include "latcode/rng.hpp"

namespace latcode {

using Vec = std::vector<double>;
using Label = std::vector<std::uint32_t>;

inline constexpr std::size_t kMaxDim = 256;
inline constexpr double kLatticeTol = 1e-6;

class ConstructionALattice {
 public:
  ConstructionALattice(LinearCode code, double scale)
      : code_(std::move(code)),
        beta_(scale),
        n_(code_.n()),
        p_(code_.field().p()) {
    require(code_.field().is_prime_field(), ErrorCode::BadParams,
            "Construction A requires a code over a prime field");
    require(scale > 0, ErrorCode::BadParams, "scale must be positive");
    require(n_ <= kMaxDim, ErrorCode::TooLarge, "dimension above limit");
    q_ = code_.codeword_count();
    if (q_ <= kEnumerationGuard && q_ * n_ <= 16'000'000) {
      cw_.resize(q_ * n_);
      std::vector<Sym> msg(code_.dim()), word(n_);
      for (std::uint64_t j = 0; j < q_; ++j) {
        msg = code_.message_from_index(j);
        code_.encode_into(msg, word);
        for (std::size_t i = 0; i < n_; ++i) {
          cw_[j * n_ + i] = std::int32_t(word[i]);
        }
      }
    }
  }

  const LinearCode& code() const { return code_; }
  std::size_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  double scale() const { return beta_; }
  std::uint64_t coset_count() const { return q_; }

  // Writes the closest lattice point to out; returns the squared distance.
  double closest_into(const double* x, double* out) const {
    require(!cw_.empty(), ErrorCode::TooLarge,
            "coset enumeration guard exceeded");
    const double bp = beta_ * p_;
    double cand[kMaxDim];
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t j = 0; j < q_; ++j) {
      const std::int32_t* c = cw_.data() + j * n_;
      double d2 = 0.0;
      for (std::size_t i = 0; i < n_; ++i) {
        const double base = beta_ * c[i];
        const double z = std::round((x[i] - base) / bp);
        cand[i] = base + bp * z;
        const double diff = x[i] - cand[i];
        d2 += diff * diff;
      }
      if (d2 < best) {
        best = d2;
        for (std::size_t i = 0; i < n_; ++i) out[i] = cand[i];
      }
    }
    return best;
  }

  Vec closest_point(std::span<const double> x) const {
    require(x.size() == n_, ErrorCode::LengthMismatch, "point dimension");
    Vec out(n_);
    closest_into(x.data(), out.data());
    return out;
  }

  void mod_into(const double* x, double* out) const {
    double q[kMaxDim];
    closest_into(x, q);
    for (std::size_t i = 0; i < n_; ++i) out[i] = x[i] - q[i];
  }

  // The mod-lattice operation x - Q(x); the result lies in the Voronoi region.
  Vec mod(std::span<const double> x) const {
    require(x.size() == n_, ErrorCode::LengthMismatch, "point dimension");
    Vec out(n_);
    mod_into(x.data(), out.data());
    return out;
  }

  bool contains(std::span<const double> x, double tol = kLatticeTol) const {
    double m[kMaxDim];
    mod_into(x.data(), m);
    for (std::size_t i = 0; i < n_; ++i) {
      if (std::abs(m[i]) > tol) return false;
    }
    return true;
  }

 private:
  LinearCode code_;
  double beta_;
  std::size_t n_;
  std::uint32_t p_;
  std::uint64_t q_;
  std::vector<std::int32_t> cw_;  // lifted codewords, row per coset
};

class NestedLatticePair {
 public:
  static NestedLatticePair hypercube(LinearCode fine_code, double beta) {
    FieldPtr f = fine_code.field_ptr();
    const std::size_t n = fine_code.n();
    LinearCode zero_code(f, FieldMatrix(0, n));
    return NestedLatticePair(std::move(fine_code), std::move(zero_code), beta,
                             /*hyper=*/true);
  }

  static NestedLatticePair general(LinearCode fine_code, LinearCode coarse_code,
                                   double beta) {
    return NestedLatticePair(std::move(fine_code), std::move(coarse_code), beta,
                             /*hyper=*/false);
  }

  std::size_t n() const { return n_; }
  std::uint32_t p() const { return p_; }
  std::size_t label_dim() const { return fine_.dim(); }
  std::uint64_t label_count() const { return q_fine_; }
  double beta() const { return beta_; }
  bool hypercube_mode() const { return hyper_; }
  const LinearCode& fine_code() const { return fine_; }
  const ConstructionALattice& coarse() const { return coarse_; }

  double fine_closest_into(const double* x, double* out) const {
    double shifted[kMaxDim];
    double qc[kMaxDim];
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t j = 0; j < q_fine_; ++j) {
      const double* y = reps_.data() + j * n_;
      for (std::size_t i = 0; i < n_; ++i) shifted[i] = x[i] - y[i];
      const double d2 = coarse_.closest_into(shifted, qc);
      if (d2 < best) {
        best = d2;
        for (std::size_t i = 0; i < n_; ++i) out[i] = y[i] + qc[i];
      }
    }
    return best;
  }

  Vec fine_closest(std::span<const double> x) const {
    require(x.size() == n_, ErrorCode::LengthMismatch, "point dimension");
    Vec out(n_);
    fine_closest_into(x.data(), out.data());
    return out;
  }

  void fine_mod_into(const double* x, double* out) const {
    double q[kMaxDim];
    fine_closest_into(x, q);
    for (std::size_t i = 0; i < n_; ++i) out[i] = x[i] - q[i];
  }

  Vec fine_mod(std::span<const double> x) const {
    require(x.size() == n_, ErrorCode::LengthMismatch, "point dimension");
    Vec out(n_);
    fine_mod_into(x.data(), out.data());
    return out;
  }

  void coarse_mod_into(const double* x, double* out) const {
    coarse_.mod_into(x, out);
  }

  Vec coarse_mod(std::span<const double> x) const { return coarse_.mod(x); }

  // Coset representative of a label in (fine lattice) intersect V(coarse).
  void label_to_coset_into(std::span<const std::uint32_t> label,
                           double* out) const {
    require(label.size() == fine_.dim(), ErrorCode::LengthMismatch,
            "label length");
    Sym msg[kMaxDim];
    Sym word[kMaxDim];
    for (std::size_t i = 0; i < label.size(); ++i) {
      require(label[i] < p_, ErrorCode::BadParams, "label entry out of range");
      msg[i] = label[i];
    }
    fine_.encode_into({msg, label.size()}, {word, n_});
    double y[kMaxDim];
    lift_codeword(word, y);
    coarse_.mod_into(y, out);
  }

  Vec label_to_coset(const Label& label) const {
    Vec out(n_);
    label_to_coset_into(label, out.data());
    return out;
  }

  // Inverse of label_to_coset modulo the coarse lattice. The argument must be
  // a fine-lattice point within tolerance.
  void coset_to_label_into(const double* y, std::uint32_t* out,
                           double tol = kLatticeTol) const {
    std::int64_t wi[kMaxDim];
    for (std::size_t i = 0; i < n_; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n_; ++j) acc += unscale_[i * n_ + j] * y[j];
      const double r = std::round(acc);
      require(std::abs(acc - r) <= tol, ErrorCode::NotLatticePoint,
              "point is not on the fine lattice");
      wi[i] = std::int64_t(r);
    }
    Sym residue[kMaxDim];
    for (std::size_t i = 0; i < n_; ++i) {
      std::int64_t m = wi[i] % std::int64_t(p_);
      if (m < 0) m += p_;
      residue[i] = Sym(m);
    }
    const auto& info = fine_.information_set();
    Sym msg[kMaxDim];
    for (std::size_t l = 0; l < fine_.dim(); ++l) msg[l] = residue[info[l]];
    Sym word[kMaxDim];
    fine_.encode_into({msg, fine_.dim()}, {word, n_});
    for (std::size_t i = 0; i < n_; ++i) {
      require(word[i] == residue[i], ErrorCode::NotLatticePoint,
              "residue is not a codeword of the fine code");
    }
    for (std::size_t l = 0; l < fine_.dim(); ++l) out[l] = msg[l];
  }

  Label coset_to_label(std::span<const double> y,
                       double tol = kLatticeTol) const {
    require(y.size() == n_, ErrorCode::LengthMismatch, "point dimension");
    Label out(fine_.dim());
    coset_to_label_into(y.data(), out.data(), tol);
    return out;
  }

  // Uniform sample over the Voronoi region of the coarse lattice: a uniform
  // point of the fundamental parallelepiped, reduced mod the lattice.
  void dither_into(CounterRng& rng, double* out) const {
    double u[kMaxDim];
    for (std::size_t i = 0; i < n_; ++i) u[i] = 0.0;
    for (std::size_t l = 0; l < n_; ++l) {
      const double c = rng.next_double();
      for (std::size_t i = 0; i < n_; ++i) u[i] += c * basis_[l * n_ + i];
    }
    coarse_.mod_into(u, out);
  }

  Vec dither(CounterRng& rng) const {
    Vec out(n_);
    dither_into(rng, out.data());
    return out;
  }

  // Exact beta*p*sqrt(n)/2 in hypercube mode; a sampled estimate otherwise.
  double covering_radius() const { return cover_radius_; }
  bool covering_radius_exact() const { return hyper_; }

  // Coarse basis vectors, one per row (n x n, row-major).
  const std::vector<double>& coarse_basis() const { return basis_; }

 private:
  NestedLatticePair(LinearCode fine_code, LinearCode coarse_code, double beta,
                    bool hyper)
      : fine_(std::move(fine_code)),
        coarse_(std::move(coarse_code), beta),
        hyper_(hyper),
        beta_(beta),
        n_(fine_.n()),
        p_(fine_.field().p()) {
    require(fine_.field().is_prime_field(), ErrorCode::BadParams,
            "fine code must live over a prime field");
    require(coarse_.code().field().p() == p_ && coarse_.n() == n_,
            ErrorCode::BadParams, "fine/coarse parameter mismatch");
    require(fine_.dim() >= 1, ErrorCode::BadParams, "fine code needs k >= 1");

    q_fine_ = fine_.codeword_count();
    require(q_fine_ <= kEnumerationGuard && q_fine_ * n_ <= 16'000'000,
            ErrorCode::TooLarge, "coset enumeration guard exceeded");

    build_basis();
    build_reps();
    verify_nesting();
    cover_radius_ = hyper_
                        ? beta_ * p_ * std::sqrt(double(n_)) / 2.0
                        : estimate_covering_radius();
  }

  // Integer basis M of Lambda_A(C_c), rows are basis vectors: lifted rows of
  // the systematic generator plus p*e_j for non-information columns.
  void build_basis() {
    const LinearCode& cc = coarse_.code();
    std::vector<double> m(n_ * n_, 0.0);
    std::vector<bool> is_info(n_, false);
    for (std::size_t r = 0; r < cc.dim(); ++r) {
      const std::size_t col = cc.information_set()[r];
      is_info[col] = true;
      for (std::size_t i = 0; i < n_; ++i) {
        m[r * n_ + i] = double(cc.systematic_generator().at(r, i));
      }
    }
    std::size_t row = cc.dim();
    for (std::size_t j = 0; j < n_; ++j) {
      if (is_info[j]) continue;
      m[row * n_ + j] = double(p_);
      ++row;
    }

    basis_.assign(n_ * n_, 0.0);
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t i = 0; i < n_; ++i) basis_[r * n_ + i] = beta_ * m[r * n_ + i];
    }

    // unscale = (p/beta) * inverse(M^T), used to invert the codeword lift.
    std::vector<double> a(n_ * n_);  // M^T
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) a[i * n_ + j] = m[j * n_ + i];
    }
    unscale_ = invert(a, n_);
    for (double& v : unscale_) v *= double(p_) / beta_;
    m_rows_ = std::move(m);
  }

  // y_j = (beta/p) * M^T * c_j; in hypercube mode this is just beta * c_j.
  void build_reps() {
    reps_.assign(q_fine_ * n_, 0.0);
    std::vector<Sym> msg(fine_.dim()), word(n_);
    for (std::uint64_t j = 0; j < q_fine_; ++j) {
      msg = fine_.message_from_index(j);
      fine_.encode_into(msg, word);
      Sym w[kMaxDim];
      for (std::size_t i = 0; i < n_; ++i) w[i] = word[i];
      lift_codeword(w, reps_.data() + j * n_);
    }
  }

  void lift_codeword(const Sym* word, double* out) const {
    if (hyper_) {
      for (std::size_t i = 0; i < n_; ++i) out[i] = beta_ * double(word[i]);
      return;
    }
    const double s = beta_ / double(p_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = 0.0;
    for (std::size_t r = 0; r < n_; ++r) {
      const double c = double(word[r]);
      if (c == 0.0) continue;
      for (std::size_t i = 0; i < n_; ++i) out[i] += s * c * m_rows_[r * n_ + i];
    }
  }

  void verify_nesting() {
    // Each coarse basis vector must quantize to itself on the fine lattice.
    double q[kMaxDim];
    for (std::size_t r = 0; r < n_; ++r) {
      const double* b = basis_.data() + r * n_;
      fine_closest_into(b, q);
      for (std::size_t i = 0; i < n_; ++i) {
        require(std::abs(q[i] - b[i]) <= kLatticeTol, ErrorCode::NestingViolation,
                "coarse basis vector not fixed by the fine quantizer");
      }
    }
    // Label round trip on a sample of the label space.
    const std::uint64_t sample = std::min<std::uint64_t>(q_fine_, 64);
    std::uint32_t back[kMaxDim];
    double rep[kMaxDim];
    for (std::uint64_t j = 0; j < sample; ++j) {
      const std::uint64_t idx = j * (q_fine_ / sample ? q_fine_ / sample : 1);
      std::vector<Sym> msg = fine_.message_from_index(idx % q_fine_);
      Label lab(msg.begin(), msg.end());
      label_to_coset_into(lab, rep);
      coset_to_label_into(rep, back);
      for (std::size_t l = 0; l < fine_.dim(); ++l) {
        require(back[l] == lab[l], ErrorCode::NestingViolation,
                "coset labeling failed to round-trip");
      }
    }
  }

  double estimate_covering_radius() const {
    CounterRng rng(0x636f766572u);  // fixed stream: estimate is reproducible
    double u[kMaxDim], v[kMaxDim];
    double best = 0.0;
    for (int s = 0; s < 100'000; ++s) {
      for (std::size_t i = 0; i < n_; ++i) u[i] = 0.0;
      for (std::size_t l = 0; l < n_; ++l) {
        const double c = rng.next_double();
        for (std::size_t i = 0; i < n_; ++i) u[i] += c * basis_[l * n_ + i];
      }
      coarse_.mod_into(u, v);
      double r2 = 0.0;
      for (std::size_t i = 0; i < n_; ++i) r2 += v[i] * v[i];
      if (r2 > best) best = r2;
    }
    return std::sqrt(best);
  }

  static std::vector<double> invert(std::vector<double> a, std::size_t n) {
    std::vector<double> inv(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < n; ++r) {
        if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
      }
      require(std::abs(a[piv * n + c]) > 1e-12, ErrorCode::BadParams,
              "singular lattice basis");
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) {
          std::swap(a[piv * n + j], a[c * n + j]);
          std::swap(inv[piv * n + j], inv[c * n + j]);
        }
      }
      const double s = 1.0 / a[c * n + c];
      for (std::size_t j = 0; j < n; ++j) {
        a[c * n + j] *= s;
        inv[c * n + j] *= s;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c) continue;
        const double t = a[r * n + c];
        if (t == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          a[r * n + j] -= t * a[c * n + j];
          inv[r * n + j] -= t * inv[c * n + j];
        }
      }
    }
    return inv;
  }

  LinearCode fine_;
  ConstructionALattice coarse_;
  bool hyper_;
  double beta_;
  std::size_t n_;
  std::uint32_t p_;
  std::uint64_t q_fine_ = 0;
  double cover_radius_ = 0.0;
  std::vector<double> reps_;     // unreduced coset lifts, row per label index
  std::vector<double> basis_;    // coarse basis rows (already scaled by beta)
  std::vector<double> m_rows_;   // integer basis of Lambda_A(C_c), unscaled
  std::vector<double> unscale_;  // (p/beta) * (M^T)^{-1}
};

}  // namespace latcode
