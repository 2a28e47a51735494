// Reed-Solomon codes over F_{p^k} in the evaluation convention.
//
// A message of K symbols is the coefficient vector of a polynomial of degree
// below K, evaluated at N distinct nonzero points (consecutive powers of the
// smallest primitive element). Bounded-distance decoding corrects up to
// floor((N-K)/2) symbol errors via the key equation, solved with a partial
// extended Euclidean run on the interpolated received word (Gao's algorithm).
// Everything is O(N^2) field operations.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "latcode/errors.hpp"
#include "latcode/galois.hpp"

namespace latcode {

namespace poly {

// Dense coefficients, X^0 first; the empty vector is the zero polynomial.
using P = std::vector<Sym>;

inline void trim(P& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const P& a) { return int(a.size()) - 1; }

inline Sym eval(const Field& f, const P& a, Sym x) {
  Sym acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
  return acc;
}

inline P mul(const Field& f, const P& a, const P& b) {
  if (a.empty() || b.empty()) return {};
  P out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return out;
}

inline P sub(const Field& f, P a, const P& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

// Quotient and remainder of a by b (b nonzero).
inline std::pair<P, P> divmod(const Field& f, P a, const P& b) {
  const int db = deg(b);
  require(db >= 0, ErrorCode::DivisionByZero, "polynomial division by zero");
  const Sym lead_inv = f.inv(b.back());
  P q;
  trim(a);
  if (deg(a) >= db) q.assign(a.size() - b.size() + 1, 0);
  while (deg(a) >= db) {
    const std::size_t shift = a.size() - b.size();
    const Sym c = f.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    }
    trim(a);
  }
  return {std::move(q), std::move(a)};
}

inline P derivative(const Field& f, const P& a) {
  P out;
  for (std::size_t i = 1; i < a.size(); ++i) {
    out.push_back(f.mul(a[i], f.from_int(std::int64_t(i))));
  }
  trim(out);
  return out;
}

}  // namespace poly

struct RsDecoded {
  std::vector<Sym> message;
  std::uint32_t corrected = 0;
};

class RsCode {
 public:
  RsCode(FieldPtr field, std::uint32_t n, std::uint32_t k)
      : field_(std::move(field)), n_(n), k_(k) {
    require(k >= 1 && k <= n && n <= field_->order() - 1, ErrorCode::BadParams,
            "need 1 <= K <= N <= q-1");
    const Sym alpha = field_->primitive_element();
    eval_points_.resize(n);
    Sym cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      eval_points_[i] = cur;
      cur = field_->mul(cur, alpha);
    }
    // locator(z) = prod (z - x_i), plus the barycentric weights
    // w_i = 1 / locator'(x_i) used by the interpolation step.
    locator_ = {1};
    for (Sym x : eval_points_) {
      locator_ = poly::mul(*field_, locator_, {field_->neg(x), 1});
    }
    const poly::P dloc = poly::derivative(*field_, locator_);
    weights_.resize(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      weights_[i] = field_->inv(poly::eval(*field_, dloc, eval_points_[i]));
    }
  }

  const Field& field() const { return *field_; }
  FieldPtr field_ptr() const { return field_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t dim() const { return k_; }
  std::uint32_t min_distance() const { return n_ - k_ + 1; }
  std::uint32_t correctable() const { return (n_ - k_) / 2; }
  const std::vector<Sym>& eval_points() const { return eval_points_; }

  void encode_into(std::span<const Sym> msg, std::span<Sym> out) const {
    require(msg.size() == k_ && out.size() == n_, ErrorCode::LengthMismatch,
            "message/codeword length mismatch");
    for (std::uint32_t i = 0; i < n_; ++i) {
      Sym acc = 0;
      for (std::size_t j = msg.size(); j-- > 0;) {
        acc = field_->add(field_->mul(acc, eval_points_[i]), msg[j]);
      }
      out[i] = acc;
    }
  }

  std::vector<Sym> encode(std::span<const Sym> msg) const {
    std::vector<Sym> out(n_);
    encode_into(msg, out);
    return out;
  }

  // Bounded-distance decoding. Returns the unique message whose codeword lies
  // within Hamming distance floor((N-K)/2) of the received word, or nothing.
  std::optional<RsDecoded> decode(std::span<const Sym> received) const {
    require(received.size() == n_, ErrorCode::LengthMismatch,
            "received word length mismatch");
    const Field& f = *field_;

    // Interpolate the received word through the evaluation points.
    poly::P g1;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (received[i] == 0) continue;
      // locator / (z - x_i) by synthetic division, scaled by r_i * w_i.
      const Sym scale = f.mul(received[i], weights_[i]);
      Sym carry = locator_.back();  // leading 1
      if (g1.size() < n_) g1.resize(n_, 0);
      for (std::size_t d = n_; d-- > 0;) {
        g1[d] = f.add(g1[d], f.mul(scale, carry));
        carry = f.add(locator_[d], f.mul(carry, eval_points_[i]));
      }
    }
    poly::trim(g1);

    // Partial extended Euclid on (locator, g1) down to degree < (N+K)/2.
    poly::P r0 = locator_, r1 = g1;
    poly::P v0, v1 = {1};
    while (2 * poly::deg(r1) >= int(n_ + k_)) {
      auto [q, rem] = poly::divmod(f, r0, r1);
      r0 = std::move(r1);
      r1 = std::move(rem);
      poly::P vn = poly::sub(f, v0, poly::mul(f, q, v1));
      v0 = std::move(v1);
      v1 = std::move(vn);
    }
    if (v1.empty()) return std::nullopt;
    auto [fpoly, rem] = poly::divmod(f, r1, v1);
    if (!rem.empty() || poly::deg(fpoly) >= int(k_)) return std::nullopt;

    RsDecoded out;
    out.message.assign(k_, 0);
    for (std::size_t i = 0; i < fpoly.size(); ++i) out.message[i] = fpoly[i];

    // The radius contract is enforced by re-encoding.
    std::vector<Sym> cw(n_);
    encode_into(out.message, cw);
    std::uint32_t dist = 0;
    for (std::uint32_t i = 0; i < n_; ++i) dist += cw[i] != received[i];
    if (dist > correctable()) return std::nullopt;
    out.corrected = dist;
    return out;
  }

 private:
  FieldPtr field_;
  std::uint32_t n_;
  std::uint32_t k_;
  std::vector<Sym> eval_points_;
  poly::P locator_;
  std::vector<Sym> weights_;
};

}  // namespace latcode
