#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "latcode/channel.hpp"

using namespace latcode;

TEST_CASE("zero variance passes the input through", "[channel]") {
  CounterRng rng(1);
  std::vector<double> x{1.0, -2.0, 3.5};
  REQUIRE(awgn(x, 0.0, rng) == x);
}

TEST_CASE("noise variance matches sigma2 within 1%", "[channel]") {
  CounterRng rng(2);
  const double sigma2 = 2.7;
  std::vector<double> x(1000, 0.0);
  double s2 = 0.0;
  const int reps = 1000;  // 10^6 samples total
  for (int r = 0; r < reps; ++r) {
    auto y = awgn(x, sigma2, rng);
    for (double v : y) s2 += v * v;
  }
  s2 /= double(reps) * 1000.0;
  REQUIRE(std::abs(s2 - sigma2) / sigma2 < 0.01);
}

TEST_CASE("noise is a pure function of seed and indices", "[channel]") {
  std::vector<double> x{0.0, 0.0, 0.0, 0.0};
  auto a = CounterRng::at(7, {5, 2});
  auto b = CounterRng::at(7, {5, 2});
  REQUIRE(awgn(x, 1.0, a) == awgn(x, 1.0, b));
  auto c = CounterRng::at(7, {6, 2});
  REQUIRE(awgn(x, 1.0, a) != awgn(x, 1.0, c));
}

TEST_CASE("single-input MAC reduces to the point-to-point channel",
          "[channel]") {
  std::vector<std::vector<double>> u{{1.0, 2.0}};
  std::vector<double> h{1.0};
  auto a = CounterRng::at(3, {0});
  auto b = CounterRng::at(3, {0});
  auto y = gaussian_mac(u, h, 0.5, a);
  auto z = awgn(u[0], 0.5, b);
  REQUIRE(y == z);
}

TEST_CASE("opposite coefficients cancel identical inputs", "[channel]") {
  std::vector<std::vector<double>> u{{1.0, -4.0, 2.0}, {1.0, -4.0, 2.0}};
  std::vector<double> h{1.0, -1.0};
  CounterRng rng(4);
  auto y = gaussian_mac(u, h, 0.0, rng);
  for (double v : y) REQUIRE(v == 0.0);
}

TEST_CASE("MAC is linear in each input for a fixed noise draw", "[channel]") {
  CounterRng rng(9);
  std::vector<double> h{0.7, -1.3};
  for (int t = 0; t < 200; ++t) {
    std::vector<double> u1(4), u2(4), d(4);
    for (int i = 0; i < 4; ++i) {
      u1[i] = rng.next_double() * 4 - 2;
      u2[i] = rng.next_double() * 4 - 2;
      d[i] = rng.next_double() * 4 - 2;
    }
    auto za = CounterRng::at(11, {std::uint64_t(t)});
    auto zb = CounterRng::at(11, {std::uint64_t(t)});
    std::vector<std::vector<double>> in1{u1, u2};
    std::vector<double> u1d(4);
    for (int i = 0; i < 4; ++i) u1d[i] = u1[i] + d[i];
    std::vector<std::vector<double>> in2{u1d, u2};
    auto y1 = gaussian_mac(in1, h, 1.0, za);
    auto y2 = gaussian_mac(in2, h, 1.0, zb);
    for (int i = 0; i < 4; ++i) {
      REQUIRE(y2[i] - y1[i] == Catch::Approx(h[0] * d[i]).margin(1e-12));
    }
  }
}

TEST_CASE("MAC validates input lengths", "[channel]") {
  CounterRng rng(1);
  std::vector<std::vector<double>> u{{1.0, 2.0}, {1.0}};
  std::vector<double> h{1.0, 1.0};
  REQUIRE_THROWS_AS(gaussian_mac(u, h, 0.0, rng), Error);
}

TEST_CASE("pooled samples pass moment sanity checks", "[channel]") {
  CounterRng rng(6);
  const int n = 1000000;
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.next_gaussian();
    s1 += g;
    s2 += g * g;
    s3 += g * g * g;
    s4 += g * g * g * g;
  }
  const double mean = s1 / n;
  const double var = s2 / n - mean * mean;
  const double skew = (s3 / n - 3 * mean * var - mean * mean * mean) /
                      std::pow(var, 1.5);
  const double kurt = (s4 / n) / (var * var);
  REQUIRE(std::abs(mean) < 0.005);
  REQUIRE(std::abs(var - 1.0) < 0.01);
  REQUIRE(std::abs(skew) < 0.02);
  REQUIRE(std::abs(kurt - 3.0) < 0.05);
}

TEST_CASE("snr conversion", "[channel]") {
  REQUIRE(sigma2_from_snr_db(10.0, 10.0) == Catch::Approx(1.0));
  REQUIRE(sigma2_from_snr_db(4.0, 0.0) == Catch::Approx(4.0));
}
