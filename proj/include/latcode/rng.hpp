// Counter-addressable pseudo-random generator.
//
// Every draw is a pure function of (seed, stream, counter), so a Monte Carlo
// trial can regenerate its exact randomness regardless of execution order or
// worker count. The core is the splitmix64 finalizer over a keyed counter.
#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace latcode {

namespace detail {
inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}
}  // namespace detail

// Derives a child seed from a parent seed and a path of identifiers.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t key = detail::mix64(seed + detail::kGolden);
  for (std::uint64_t id : path) {
    key = detail::mix64(key ^ (id + detail::kGolden));
  }
  return key;
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(detail::mix64(detail::mix64(seed + detail::kGolden) ^
                           (stream + detail::kGolden))) {}

  static CounterRng at(std::uint64_t seed,
                       std::initializer_list<std::uint64_t> path) {
    CounterRng r(0);
    r.key_ = derive_seed(seed, path);
    return r;
  }

  std::uint64_t next_u64() {
    counter_ += detail::kGolden;
    return detail::mix64(key_ ^ counter_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n). Bias is O(n/2^64), negligible at desk scale.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  // Standard normal via the Box-Muller transform; consumes two words.
  double next_gaussian() {
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0,1]
    double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;        // [0,1)
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace latcode
