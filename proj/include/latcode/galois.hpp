// Exact arithmetic over prime fields F_p and extension fields F_{p^k}.
//
// Elements are stored as their base-p digit value: a symbol s encodes the
// polynomial sum_i c_i X^i with c_i = (s / p^i) mod p. Under this encoding
// the coefficient-vector map F_p^k -> F_{p^k} is an additive group
// isomorphism, which the lattice coset labeling relies on.
//
// The extension modulus is the monic irreducible polynomial of degree k whose
// non-leading coefficient vector has the smallest base-p digit value, so two
// fields built with the same (p, k) are interchangeable. Fields with at most
// 2^16 elements get log/antilog tables; larger fields (up to 2^32 elements)
// fall back to direct polynomial arithmetic.
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "latcode/errors.hpp"

namespace latcode {

using Sym = std::uint32_t;

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = 1ull << 32;
  static constexpr std::uint64_t kMaxTableOrder = 1ull << 16;

  // F_p. The degenerate k=1 extension collapses to this.
  explicit Field(std::uint32_t p) : Field(p, 1) {}

  // F_{p^k} with the deterministically chosen modulus.
  Field(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
    require(is_prime(p), ErrorCode::NotPrime,
            "p = " + std::to_string(p) + " is not prime");
    require(p < (1u << 16), ErrorCode::TooLarge, "p must be below 2^16");
    require(k >= 1, ErrorCode::BadParams, "extension degree must be >= 1");
    q_ = 1;
    pow_p_.assign(k + 1, 1);
    for (std::uint32_t i = 0; i < k; ++i) {
      require(q_ <= kMaxOrder / p, ErrorCode::TooLarge, "p^k exceeds 2^32");
      q_ *= p;
      pow_p_[i + 1] = q_;
    }
    modulus_ = find_modulus();
    find_generator();
    if (q_ <= kMaxTableOrder) build_tables();
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }

  // Monic modulus polynomial, coefficient of X^0 first (length k+1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Sym zero() const { return 0; }
  Sym one() const { return 1; }

  Sym add(Sym a, Sym b) const {
    if (k_ == 1) {
      std::uint64_t s = std::uint64_t(a) + b;
      return Sym(s >= p_ ? s - p_ : s);
    }
    Sym out = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint64_t d = digit(a, i) + digit(b, i);
      if (d >= p_) d -= p_;
      out += Sym(d * pow_p_[i]);
    }
    return out;
  }

  Sym neg(Sym a) const {
    if (k_ == 1) return a == 0 ? 0 : Sym(p_ - a);
    Sym out = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint64_t d = digit(a, i);
      if (d) d = p_ - d;
      out += Sym(d * pow_p_[i]);
    }
    return out;
  }

  Sym sub(Sym a, Sym b) const { return add(a, neg(b)); }

  Sym mul(Sym a, Sym b) const {
    if (a == 0 || b == 0) return 0;
    if (!exp_.empty()) {
      std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
      if (s >= q_ - 1) s -= q_ - 1;
      return exp_[s];
    }
    return mul_poly(a, b);
  }

  Sym inv(Sym a) const {
    require(a != 0, ErrorCode::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) {
      std::uint32_t l = log_[a];
      return l == 0 ? 1 : exp_[q_ - 1 - l];
    }
    return pow(a, q_ - 2);
  }

  Sym div(Sym a, Sym b) const { return mul(a, inv(b)); }

  Sym pow(Sym a, std::uint64_t e) const {
    Sym r = 1;
    Sym base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  // Embeds an integer as a constant (prime-subfield element).
  Sym from_int(std::int64_t v) const {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    return Sym(m);
  }

  std::uint32_t digit(Sym s, std::uint32_t i) const {
    return std::uint32_t((s / pow_p_[i]) % p_);
  }

  // Coefficient vector (length k, X^0 first) -> symbol. Additive isomorphism.
  Sym vec_to_symbol(std::span<const std::uint32_t> v) const {
    require(v.size() == k_, ErrorCode::LengthMismatch,
            "expected vector of length " + std::to_string(k_));
    Sym out = 0;
    for (std::uint32_t i = 0; i < k_; ++i) {
      require(v[i] < p_, ErrorCode::BadParams, "coefficient out of range");
      out += Sym(std::uint64_t(v[i]) * pow_p_[i]);
    }
    return out;
  }

  std::vector<std::uint32_t> symbol_to_vec(Sym s) const {
    std::vector<std::uint32_t> v(k_);
    for (std::uint32_t i = 0; i < k_; ++i) v[i] = digit(s, i);
    return v;
  }

  // Little-endian base-p digit string, e.g. "3,1" for X+3 in F_25.
  std::string to_digit_string(Sym s) const {
    std::string out;
    for (std::uint32_t i = 0; i < k_; ++i) {
      if (i) out += ',';
      out += std::to_string(digit(s, i));
    }
    return out;
  }

  // Element of multiplicative order q-1 with the smallest digit value.
  Sym primitive_element() const {
    if (generator_ == 0) {
      fail(ErrorCode::BadParams, "no primitive element in trivial group");
    }
    return generator_;
  }

  bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

 private:
  using Poly = std::vector<std::uint32_t>;  // dense coefficients, X^0 first

  // Polynomial remainder of a by monic b over F_p (b's top coefficient is 1).
  static void poly_mod_inplace(Poly& a, const Poly& b, std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      std::uint32_t lead = a.back();
      if (lead != 0) {
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i < db; ++i) {
          std::uint64_t t = std::uint64_t(lead) * b[i] % p;
          std::uint64_t cur = a[shift + i];
          a[shift + i] = std::uint32_t((cur + p - t) % p);
        }
      }
      a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }

  Poly symbol_to_poly(Sym s) const {
    Poly v(k_);
    for (std::uint32_t i = 0; i < k_; ++i) v[i] = digit(s, i);
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  }

  Sym mul_poly(Sym a, Sym b) const {
    // Schoolbook product followed by reduction modulo the field polynomial.
    std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
      std::uint64_t da = digit(a, i);
      if (!da) continue;
      for (std::uint32_t j = 0; j < k_; ++j) {
        std::uint64_t db = digit(b, j);
        if (db) prod[i + j] = (prod[i + j] + da * db) % p_;
      }
    }
    for (std::size_t d = prod.size(); d-- > k_;) {
      std::uint64_t c = prod[d];
      if (!c) continue;
      prod[d] = 0;
      // X^d = X^(d-k) * X^k, X^k = -(m_0 + ... + m_{k-1} X^{k-1}).
      for (std::uint32_t j = 0; j < k_; ++j) {
        if (!modulus_[j]) continue;
        std::uint64_t t = c * (p_ - modulus_[j]) % p_;
        prod[d - k_ + j] = (prod[d - k_ + j] + t) % p_;
      }
    }
    Sym out = 0;
    for (std::uint32_t i = 0; i < k_; ++i) out += Sym(prod[i] * pow_p_[i]);
    return out;
  }

  bool is_irreducible(const Poly& f) const {
    // Trial division by every monic polynomial of degree 1..k/2.
    for (std::uint32_t d = 1; 2 * d <= k_; ++d) {
      for (std::uint64_t v = 0; v < pow_p_[d]; ++v) {
        Poly g(d + 1);
        for (std::uint32_t i = 0; i < d; ++i) g[i] = std::uint32_t((v / pow_p_[i]) % p_);
        g[d] = 1;
        Poly r = f;
        poly_mod_inplace(r, g, p_);
        if (r.empty()) return false;
      }
    }
    return true;
  }

  Poly find_modulus() const {
    if (k_ == 1) return {0, 1};  // X, never used for reduction
    for (std::uint64_t v = 0; v < q_; ++v) {
      Poly f(k_ + 1);
      for (std::uint32_t i = 0; i < k_; ++i) f[i] = std::uint32_t((v / pow_p_[i]) % p_);
      f[k_] = 1;
      if (is_irreducible(f)) return f;
    }
    fail(ErrorCode::NoIrreducible, "no irreducible polynomial found");
  }

  void find_generator() {
    // Factor the group order, then scan for the smallest generator.
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t m = q_ - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        prime_factors.push_back(d);
        while (m % d == 0) m /= d;
      }
    }
    if (m > 1) prime_factors.push_back(m);

    for (Sym g = 1; g < q_; ++g) {
      bool primitive = q_ > 2 ? g > 1 : g == 1;
      for (std::uint64_t f : prime_factors) {
        if (pow_no_table(g, (q_ - 1) / f) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator_ = g;
        break;
      }
    }
  }

  void build_tables() {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Sym cur = 1;
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = cur;
      log_[cur] = std::uint32_t(i);
      cur = k_ == 1 ? Sym(std::uint64_t(cur) * generator_ % p_)
                    : mul_poly(cur, generator_);
    }
  }

  Sym pow_no_table(Sym a, std::uint64_t e) const {
    Sym r = 1;
    Sym base = a;
    while (e) {
      if (e & 1) {
        r = k_ == 1 ? Sym(std::uint64_t(r) * base % p_) : mul_poly(r, base);
      }
      base = k_ == 1 ? Sym(std::uint64_t(base) * base % p_) : mul_poly(base, base);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint64_t q_;
  std::vector<std::uint64_t> pow_p_;
  Poly modulus_;
  std::vector<Sym> exp_;
  std::vector<std::uint32_t> log_;
  Sym generator_ = 0;
};

using FieldPtr = std::shared_ptr<const Field>;

inline FieldPtr make_prime_field(std::uint32_t p) {
  return std::make_shared<Field>(p);
}

inline FieldPtr make_ext_field(std::uint32_t p, std::uint32_t k) {
  return std::make_shared<Field>(p, k);
}

}  // namespace latcode
