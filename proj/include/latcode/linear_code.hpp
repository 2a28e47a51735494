// (n, k) linear block codes over a finite field.
//
// Encoding goes through the systematic (reduced row echelon) form of the
// generator, so message symbols appear verbatim at the recorded information
// set of coordinates. Random codes need not have an invertible left block,
// hence the column-pivoted reduction.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "latcode/errors.hpp"
#include "latcode/fmatrix.hpp"
#include "latcode/galois.hpp"
#include "latcode/rng.hpp"

namespace latcode {

inline constexpr std::uint64_t kEnumerationGuard = 1'000'000;

class LinearCode {
 public:
  LinearCode(FieldPtr field, FieldMatrix generator)
      : field_(std::move(field)),
        n_(generator.cols),
        k_(generator.rows),
        gen_(std::move(generator)) {
    sys_ = gen_;
    info_set_ = rref_inplace(*field_, sys_);
    require(info_set_.size() == k_, ErrorCode::RankDeficient,
            "generator rank " + std::to_string(info_set_.size()) +
                " < k = " + std::to_string(k_));
  }

  // Generator entries i.i.d. uniform, redrawn until full rank.
  static LinearCode random(FieldPtr field, std::size_t n, std::size_t k,
                           CounterRng& rng) {
    require(k <= n, ErrorCode::BadParams, "k must not exceed n");
    for (;;) {
      FieldMatrix g(k, n);
      for (Sym& s : g.a) s = Sym(rng.next_below(field->order()));
      if (rank(*field, g) == k) return LinearCode(field, std::move(g));
    }
  }

  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return k_; }
  const FieldMatrix& generator() const { return gen_; }
  const FieldMatrix& systematic_generator() const { return sys_; }
  const std::vector<std::size_t>& information_set() const { return info_set_; }

  std::uint64_t codeword_count() const {
    std::uint64_t c = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      if (c > kEnumerationGuard) return c;
      c *= field_->order();
    }
    return c;
  }

  void encode_into(std::span<const Sym> msg, std::span<Sym> out) const {
    vec_mat_mul(*field_, msg, sys_, out);
  }

  std::vector<Sym> encode(std::span<const Sym> msg) const {
    std::vector<Sym> out(n_);
    encode_into(msg, out);
    return out;
  }

  // Message with lexicographic rank idx (first coordinate most significant).
  std::vector<Sym> message_from_index(std::uint64_t idx) const {
    std::vector<Sym> m(k_);
    const std::uint64_t q = field_->order();
    for (std::size_t i = k_; i-- > 0;) {
      m[i] = Sym(idx % q);
      idx /= q;
    }
    return m;
  }

 private:
  FieldPtr field_;
  std::size_t n_;
  std::size_t k_;
  FieldMatrix gen_;
  FieldMatrix sys_;
  std::vector<std::size_t> info_set_;
};

// Minimum Hamming weight over all nonzero codewords of any encoder, by full
// enumeration. Test-oracle quality, guarded against oversized codebooks.
template <class EncodeFn>
std::uint32_t min_distance_bruteforce(const Field& field, std::size_t dim,
                                      std::size_t n, EncodeFn&& encode) {
  require(dim >= 1, ErrorCode::BadParams, "zero-dimensional code");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    count *= field.order();
    require(count <= kEnumerationGuard, ErrorCode::TooLarge,
            "codebook too large to enumerate");
  }
  std::uint32_t best = std::uint32_t(n) + 1;
  std::vector<Sym> msg(dim), cw(n);
  for (std::uint64_t idx = 1; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::size_t i = dim; i-- > 0;) {
      msg[i] = Sym(v % field.order());
      v /= field.order();
    }
    encode(msg, cw);
    std::uint32_t w = 0;
    for (Sym s : cw) w += s != 0;
    if (w < best) best = w;
  }
  return best;
}

inline std::uint32_t min_distance_bruteforce(const LinearCode& code) {
  return min_distance_bruteforce(
      code.field(), code.dim(), code.n(),
      [&](std::span<const Sym> m, std::span<Sym> out) {
        code.encode_into(m, out);
      });
}

}  // namespace latcode
