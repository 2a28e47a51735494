// AWGN point-to-point channel and the L-source Gaussian MAC.
//
// Noise comes from the counter-addressable generator, so a trial's
// realization depends only on (seed, stream, counter) and never on execution
// order. Gaussians are Box-Muller over that stream.
#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "latcode/errors.hpp"
#include "latcode/rng.hpp"

namespace latcode {

struct ChannelSpec {
  double sigma2 = 0.0;
  std::vector<double> h{1.0};  // length L, point-to-point when L = 1
};

inline double sigma2_from_snr_db(double power, double snr_db) {
  return power / std::pow(10.0, snr_db / 10.0);
}

inline void awgn_into(std::span<const double> x, double sigma2,
                      CounterRng& rng, std::span<double> out) {
  require(out.size() == x.size(), ErrorCode::LengthMismatch, "output size");
  require(sigma2 >= 0.0, ErrorCode::BadParams, "negative noise variance");
  if (sigma2 == 0.0) {
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i];
    return;
  }
  const double s = std::sqrt(sigma2);
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = x[i] + s * rng.next_gaussian();
  }
}

inline std::vector<double> awgn(std::span<const double> x, double sigma2,
                                CounterRng& rng) {
  std::vector<double> out(x.size());
  awgn_into(x, sigma2, rng, out);
  return out;
}

// w = sum_l h_l u_l + z
inline std::vector<double> gaussian_mac(
    std::span<const std::vector<double>> inputs, std::span<const double> h,
    double sigma2, CounterRng& rng) {
  require(!inputs.empty() && inputs.size() == h.size(),
          ErrorCode::LengthMismatch, "one coefficient per input");
  const std::size_t n = inputs[0].size();
  for (const auto& u : inputs) {
    require(u.size() == n, ErrorCode::LengthMismatch, "input length mismatch");
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t l = 0; l < inputs.size(); ++l) {
    for (std::size_t i = 0; i < n; ++i) out[i] += h[l] * inputs[l][i];
  }
  if (sigma2 > 0.0) {
    const double s = std::sqrt(sigma2);
    for (std::size_t i = 0; i < n; ++i) out[i] += s * rng.next_gaussian();
  }
  return out;
}

}  // namespace latcode
