#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "latcode/linear_code.hpp"
#include "latcode/reed_solomon.hpp"
#include "latcode/rng.hpp"

using namespace latcode;

TEST_CASE("(6,2) code over F_7 uses powers of the primitive 3", "[reed_solomon]") {
  RsCode rs(make_prime_field(7), 6, 2);
  REQUIRE(rs.eval_points() == std::vector<Sym>{1, 3, 2, 6, 4, 5});
  REQUIRE(rs.min_distance() == 5);
  REQUIRE(rs.correctable() == 2);
}

TEST_CASE("brute-force distance confirms MDS at small scale", "[reed_solomon]") {
  RsCode rs(make_prime_field(7), 6, 2);
  auto d = min_distance_bruteforce(
      rs.field(), rs.dim(), rs.n(),
      [&](std::span<const Sym> m, std::span<Sym> out) { rs.encode_into(m, out); });
  REQUIRE(d == 5);

  RsCode rs2(make_ext_field(2, 3), 7, 3);
  auto d2 = min_distance_bruteforce(
      rs2.field(), rs2.dim(), rs2.n(),
      [&](std::span<const Sym> m, std::span<Sym> out) { rs2.encode_into(m, out); });
  REQUIRE(d2 == 5);
}

TEST_CASE("worked encoding of 1+X over F_7", "[reed_solomon]") {
  RsCode rs(make_prime_field(7), 6, 2);
  std::vector<Sym> m{1, 1};
  REQUIRE(rs.encode(m) == std::vector<Sym>{2, 4, 3, 0, 5, 6});
  std::vector<Sym> zero{0, 0};
  REQUIRE(rs.encode(zero) == std::vector<Sym>{0, 0, 0, 0, 0, 0});
}

TEST_CASE("full-length code over F_25", "[reed_solomon]") {
  RsCode rs(make_ext_field(5, 2), 24, 12);
  REQUIRE(rs.min_distance() == 13);
  std::set<Sym> pts(rs.eval_points().begin(), rs.eval_points().end());
  REQUIRE(pts.size() == 24);
  REQUIRE(pts.count(0) == 0);
}

TEST_CASE("K = N degenerates to interpolation", "[reed_solomon]") {
  RsCode rs(make_prime_field(7), 4, 4);
  REQUIRE(rs.min_distance() == 1);
  REQUIRE(rs.correctable() == 0);
  std::vector<Sym> m{3, 1, 4, 1};
  auto dec = rs.decode(rs.encode(m));
  REQUIRE(dec.has_value());
  REQUIRE(dec->message == m);
  REQUIRE(dec->corrected == 0);
}

TEST_CASE("parameter validation", "[reed_solomon]") {
  REQUIRE_THROWS_AS(RsCode(make_prime_field(7), 7, 2), Error);   // N > q-1
  REQUIRE_THROWS_AS(RsCode(make_prime_field(7), 4, 0), Error);   // K < 1
  REQUIRE_THROWS_AS(RsCode(make_prime_field(7), 2, 4), Error);   // K > N
}

TEST_CASE("encoding is linear", "[reed_solomon]") {
  auto fp = make_ext_field(3, 2);
  RsCode rs(fp, 8, 3);
  CounterRng rng(2);
  for (int i = 0; i < 500; ++i) {
    std::vector<Sym> m1(3), m2(3), ms(3);
    for (int j = 0; j < 3; ++j) {
      m1[j] = Sym(rng.next_below(9));
      m2[j] = Sym(rng.next_below(9));
      ms[j] = fp->add(m1[j], m2[j]);
    }
    auto c1 = rs.encode(m1), c2 = rs.encode(m2), cs = rs.encode(ms);
    for (int j = 0; j < 8; ++j) REQUIRE(cs[j] == fp->add(c1[j], c2[j]));
  }
}

// Exhaustive over all codewords and all corruption patterns of weight <= 2.
TEST_CASE("(6,2) over F_7 corrects every pattern within the radius",
          "[reed_solomon]") {
  auto f = make_prime_field(7);
  RsCode rs(f, 6, 2);
  for (Sym a = 0; a < 7; ++a) {
    for (Sym b = 0; b < 7; ++b) {
      std::vector<Sym> m{a, b};
      auto cw = rs.encode(m);

      auto check = [&](std::vector<Sym> r, std::uint32_t weight) {
        auto dec = rs.decode(r);
        REQUIRE(dec.has_value());
        REQUIRE(dec->message == m);
        REQUIRE(dec->corrected == weight);
      };
      check(cw, 0);
      for (int i = 0; i < 6; ++i) {
        for (Sym e = 1; e < 7; ++e) {
          auto r = cw;
          r[i] = f->add(r[i], e);
          check(r, 1);
        }
      }
      for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
          for (Sym e1 = 1; e1 < 7; ++e1) {
            for (Sym e2 = 1; e2 < 7; ++e2) {
              auto r = cw;
              r[i] = f->add(r[i], e1);
              r[j] = f->add(r[j], e2);
              check(r, 2);
            }
          }
        }
      }
    }
  }
}

// Beyond the radius the decoder either fails or returns a codeword within
// the radius of the received word; it never silently violates the contract.
TEST_CASE("weight-3 corruption honors the radius contract", "[reed_solomon]") {
  auto f = make_prime_field(7);
  RsCode rs(f, 6, 2);
  CounterRng rng(31);
  for (int trial = 0; trial < 3000; ++trial) {
    std::vector<Sym> m{Sym(rng.next_below(7)), Sym(rng.next_below(7))};
    auto r = rs.encode(m);
    int pos[3];
    pos[0] = int(rng.next_below(6));
    do { pos[1] = int(rng.next_below(6)); } while (pos[1] == pos[0]);
    do { pos[2] = int(rng.next_below(6)); } while (pos[2] == pos[0] || pos[2] == pos[1]);
    for (int i = 0; i < 3; ++i) {
      r[pos[i]] = f->add(r[pos[i]], Sym(1 + rng.next_below(6)));
    }
    auto dec = rs.decode(r);
    if (dec.has_value()) {
      auto cw = rs.encode(dec->message);
      std::uint32_t dist = 0;
      for (int i = 0; i < 6; ++i) dist += cw[i] != r[i];
      REQUIRE(dist <= rs.correctable());
      REQUIRE(dist == dec->corrected);
    }
  }
}

TEST_CASE("random words never decode outside the radius", "[reed_solomon]") {
  auto f = make_ext_field(2, 4);
  RsCode rs(f, 15, 7);
  CounterRng rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Sym> r(15);
    for (auto& s : r) s = Sym(rng.next_below(16));
    auto dec = rs.decode(r);
    if (dec.has_value()) {
      auto cw = rs.encode(dec->message);
      std::uint32_t dist = 0;
      for (int i = 0; i < 15; ++i) dist += cw[i] != r[i];
      REQUIRE(dist <= rs.correctable());
    }
  }
}

TEST_CASE("random errors up to the radius round-trip at larger size",
          "[reed_solomon]") {
  auto f = make_ext_field(2, 8);
  RsCode rs(f, 255, 223);
  CounterRng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Sym> m(223);
    for (auto& s : m) s = Sym(rng.next_below(256));
    auto r = rs.encode(m);
    std::set<int> pos;
    while (pos.size() < rs.correctable()) pos.insert(int(rng.next_below(255)));
    for (int i : pos) r[i] = f->add(r[i], Sym(1 + rng.next_below(255)));
    auto dec = rs.decode(r);
    REQUIRE(dec.has_value());
    REQUIRE(dec->message == m);
    REQUIRE(dec->corrected == rs.correctable());
  }
}
