#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "latcode/rng.hpp"
#include "latcode/stats.hpp"

using namespace latcode;

TEST_CASE("same seed and stream reproduce the sequence", "[rng]") {
  CounterRng a(42, 7), b(42, 7);
  for (int i = 0; i < 100; ++i) REQUIRE(a.next_u64() == b.next_u64());
}

TEST_CASE("distinct streams decorrelate", "[rng]") {
  CounterRng a(42, 1), b(42, 2);
  int same = 0;
  for (int i = 0; i < 64; ++i) same += a.next_u64() == b.next_u64();
  REQUIRE(same == 0);
}

TEST_CASE("path derivation is stable and order-sensitive", "[rng]") {
  auto a = CounterRng::at(9, {1, 2, 3});
  auto b = CounterRng::at(9, {1, 2, 3});
  auto c = CounterRng::at(9, {3, 2, 1});
  REQUIRE(a.next_u64() == b.next_u64());
  REQUIRE(a.next_u64() != c.next_u64());
}

TEST_CASE("uniform doubles look uniform", "[rng]") {
  CounterRng r(123);
  double sum = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    double u = r.next_double();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  REQUIRE(std::abs(sum / n - 0.5) < 0.005);
}

TEST_CASE("gaussian moments", "[rng]") {
  CounterRng r(5);
  const int n = 200000;
  double s1 = 0, s2 = 0;
  for (int i = 0; i < n; ++i) {
    double g = r.next_gaussian();
    s1 += g;
    s2 += g * g;
  }
  REQUIRE(std::abs(s1 / n) < 0.01);
  REQUIRE(std::abs(s2 / n - 1.0) < 0.02);
}

TEST_CASE("wilson interval basics", "[rng][stats]") {
  auto e = wilson_interval(0, 1000);
  REQUIRE(e.p_hat == 0.0);
  REQUIRE(e.ci_lo == 0.0);
  REQUIRE(e.ci_hi > 0.0);
  REQUIRE(e.ci_hi < 0.01);

  auto m = wilson_interval(50, 1000);
  REQUIRE(m.ci_lo < 0.05);
  REQUIRE(m.ci_hi > 0.05);
  REQUIRE(m.ci_hi - m.ci_lo < 0.03);
}

TEST_CASE("least squares recovers an exact line", "[rng][stats]") {
  std::vector<double> x{1, 2, 3, 4}, y;
  for (double v : x) y.push_back(-2.5 * v + 4.0);
  auto fit = least_squares(x, y);
  REQUIRE(fit.slope == Catch::Approx(-2.5).margin(1e-12));
  REQUIRE(fit.intercept == Catch::Approx(4.0).margin(1e-12));
}
