// Dithered mod-lattice codec on a nested Construction-A pair.
//
// Encoding sends u = [x - t] mod coarse for the coset representative x of the
// label and a dither t uniform over the coarse Voronoi region, so the output
// always satisfies the per-dimension power bound r_cov^2 / n <= P. Decoding
// scales by the MMSE coefficient alpha = P/(P+sigma^2) (overridable), adds
// the dither back, reduces mod coarse, and quantizes to the fine lattice:
// label([Q_fine(alpha*w + t mod coarse)] mod coarse).
#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "latcode/channel.hpp"
#include "latcode/errors.hpp"
#include "latcode/lattice.hpp"
#include "latcode/rng.hpp"
#include "latcode/stats.hpp"

namespace latcode {

class LatticeCodec {
 public:
  LatticeCodec(NestedLatticePair pair, double power, double sigma2,
               std::optional<double> alpha_override = {})
      : pair_(std::move(pair)), power_(power), sigma2_(sigma2) {
    require(power > 0.0, ErrorCode::BadParams, "power must be positive");
    require(sigma2 >= 0.0, ErrorCode::BadParams, "negative noise variance");
    const double rcov = pair_.covering_radius();
    const double peak = rcov * rcov / double(pair_.n());
    require(peak <= power * (1.0 + 1e-9), ErrorCode::PowerViolation,
            "covering radius " + std::to_string(rcov) +
                " exceeds the power budget");
    if (alpha_override) {
      require(*alpha_override > 0.0 && *alpha_override <= 1.0,
              ErrorCode::BadParams, "alpha must lie in (0, 1]");
      alpha_ = *alpha_override;
    } else {
      alpha_ = power_ / (power_ + sigma2_);
    }
  }

  // Codec at the pair's maximum admissible power, with sigma^2 from the SNR.
  static LatticeCodec at_snr(NestedLatticePair pair, double snr_db,
                             std::optional<double> alpha_override = {}) {
    const double rcov = pair.covering_radius();
    const double power = rcov * rcov / double(pair.n());
    return LatticeCodec(std::move(pair), power,
                        sigma2_from_snr_db(power, snr_db), alpha_override);
  }

  const NestedLatticePair& pair() const { return pair_; }
  double power() const { return power_; }
  double sigma2() const { return sigma2_; }
  double alpha() const { return alpha_; }
  double snr_db() const {
    return 10.0 * std::log10(power_ / (sigma2_ > 0 ? sigma2_ : 1e-300));
  }

  // (1/n) log2 of the codebook size = (k/n) log2 p.
  double rate_bits_per_dim() const {
    return double(pair_.label_dim()) / double(pair_.n()) *
           std::log2(double(pair_.p()));
  }

  void encode_into(std::span<const std::uint32_t> label, const double* dither,
                   double* out) const {
    double x[kMaxDim];
    pair_.label_to_coset_into(label, x);
    for (std::size_t i = 0; i < pair_.n(); ++i) x[i] -= dither[i];
    pair_.coarse_mod_into(x, out);
  }

  Vec encode(const Label& label, std::span<const double> dither) const {
    require(dither.size() == pair_.n(), ErrorCode::LengthMismatch,
            "dither dimension");
    double q[kMaxDim];
    const double tol = kLatticeTol * pair_.beta();
    pair_.coarse().closest_into(dither.data(), q);
    for (std::size_t i = 0; i < pair_.n(); ++i) {
      require(std::abs(q[i]) <= tol, ErrorCode::DitherOutOfRegion,
              "dither lies outside the coarse Voronoi region");
    }
    Vec out(pair_.n());
    encode_into(label, dither.data(), out.data());
    return out;
  }

  void decode_into(const double* w, const double* dither,
                   std::uint32_t* label_out) const {
    double y[kMaxDim], q[kMaxDim], r[kMaxDim];
    for (std::size_t i = 0; i < pair_.n(); ++i) {
      y[i] = alpha_ * w[i] + dither[i];
    }
    pair_.coarse_mod_into(y, r);
    pair_.fine_closest_into(r, q);
    pair_.coarse_mod_into(q, r);
    pair_.coset_to_label_into(r, label_out);
  }

  Label decode(std::span<const double> w, std::span<const double> dither) const {
    require(w.size() == pair_.n() && dither.size() == pair_.n(),
            ErrorCode::LengthMismatch, "received word dimension");
    Label out(pair_.label_dim());
    decode_into(w.data(), dither.data(), out.data());
    return out;
  }

 private:
  NestedLatticePair pair_;
  double power_;
  double sigma2_;
  double alpha_ = 1.0;
};

struct ErrorRateEstimate {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double p_hat = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  std::uint64_t seed = 0;
};

namespace detail {
// Stream roles within a trial; keeps trial randomness reproducible.
inline constexpr std::uint64_t kStreamLabel = 0;
inline constexpr std::uint64_t kStreamDither = 1;
inline constexpr std::uint64_t kStreamNoise = 2;
}  // namespace detail

// Monte Carlo estimate of the symbol (coset label) error rate. Trials map to
// fixed rng streams, so the result is identical for any worker count.
inline ErrorRateEstimate estimate_error_rate(const LatticeCodec& codec,
                                             std::uint64_t trials,
                                             std::uint64_t seed,
                                             unsigned threads = 1) {
  require(trials >= 1, ErrorCode::BadParams, "need at least one trial");
  const NestedLatticePair& pair = codec.pair();
  const std::size_t n = pair.n();
  const std::size_t k = pair.label_dim();
  const std::uint32_t p = pair.p();

  auto run_range = [&](std::uint64_t lo, std::uint64_t hi) -> std::uint64_t {
    std::uint64_t errs = 0;
    std::vector<std::uint32_t> label(k), got(k);
    std::vector<double> t(n), u(n), w(n);
    for (std::uint64_t trial = lo; trial < hi; ++trial) {
      auto lab_rng = CounterRng::at(seed, {trial, detail::kStreamLabel});
      auto dit_rng = CounterRng::at(seed, {trial, detail::kStreamDither});
      auto noise_rng = CounterRng::at(seed, {trial, detail::kStreamNoise});
      for (std::size_t i = 0; i < k; ++i) {
        label[i] = std::uint32_t(lab_rng.next_below(p));
      }
      pair.dither_into(dit_rng, t.data());
      codec.encode_into(label, t.data(), u.data());
      awgn_into(u, codec.sigma2(), noise_rng, w);
      codec.decode_into(w.data(), t.data(), got.data());
      if (got != label) ++errs;
    }
    return errs;
  };

  std::uint64_t errors = 0;
  if (threads <= 1) {
    errors = run_range(0, trials);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::uint64_t> partial(threads, 0);
    const std::uint64_t chunk = (trials + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = std::min<std::uint64_t>(t * chunk, trials);
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, trials);
      pool.emplace_back([&, t, lo, hi] { partial[t] = run_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (std::uint64_t e : partial) errors += e;
  }

  const BinomialEstimate b = wilson_interval(errors, trials);
  return ErrorRateEstimate{trials, errors, b.p_hat, b.ci_lo, b.ci_hi, seed};
}

}  // namespace latcode
