// Expander codes on regular bipartite graphs with a Reed-Solomon local code.
//
// Codewords are indexed by the edges of a Delta-regular bipartite graph; a
// word belongs to the code iff its restriction to every vertex's (globally
// ordered) incidence list is a codeword of the local code. Decoding runs
// alternating rounds of independent bounded-distance local decoding over the
// left and right vertex sides until a round changes nothing. Graphs are
// sampled as unions of random perfect matchings and accepted once the
// measured second-largest adjacency eigenvalue meets the target.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "latcode/errors.hpp"
#include "latcode/fmatrix.hpp"
#include "latcode/reed_solomon.hpp"
#include "latcode/rng.hpp"

namespace latcode {

struct BipartiteGraph {
  std::uint32_t delta = 0;
  std::uint32_t m = 0;  // vertices per side; edge count is m * delta
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // global order
  std::vector<std::vector<std::uint32_t>> incidence_a;  // edge ids, ascending
  std::vector<std::vector<std::uint32_t>> incidence_b;

  std::uint32_t edge_count() const { return std::uint32_t(edges.size()); }

  void rebuild_incidence() {
    incidence_a.assign(m, {});
    incidence_b.assign(m, {});
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
      incidence_a[edges[e].first].push_back(e);
      incidence_b[edges[e].second].push_back(e);
    }
    for (auto& v : incidence_a) std::sort(v.begin(), v.end());
    for (auto& v : incidence_b) std::sort(v.begin(), v.end());
    for (const auto& v : incidence_a) {
      require(v.size() == delta, ErrorCode::BadParams, "left degree mismatch");
    }
    for (const auto& v : incidence_b) {
      require(v.size() == delta, ErrorCode::BadParams, "right degree mismatch");
    }
  }
};

inline BipartiteGraph complete_bipartite(std::uint32_t delta) {
  BipartiteGraph g;
  g.delta = delta;
  g.m = delta;
  for (std::uint32_t a = 0; a < delta; ++a) {
    for (std::uint32_t b = 0; b < delta; ++b) g.edges.emplace_back(a, b);
  }
  g.rebuild_incidence();
  return g;
}

// Second-largest eigenvalue of the full (2m)x(2m) symmetric adjacency matrix.
inline double second_eigenvalue(const BipartiteGraph& g) {
  const std::size_t m = g.m;
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(2 * m, 2 * m);
  for (const auto& [a, b] : g.edges) {
    adj(a, m + b) = 1.0;
    adj(m + b, a) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adj,
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(2 * m - 2);
}

// Union of delta random perfect matchings, resampled until the measured
// second eigenvalue meets the target (default 2*sqrt(delta-1) + 0.1).
// Matchings that would create a multi-edge are redrawn.
inline BipartiteGraph random_regular_bipartite(
    std::uint32_t delta, std::uint32_t m, CounterRng& rng,
    std::optional<double> lambda_target = {}) {
  require(delta >= 3, ErrorCode::BadParams, "degree must be at least 3");
  require(m >= delta, ErrorCode::BadParams, "need at least delta vertices");
  const double target =
      lambda_target ? *lambda_target : 2.0 * std::sqrt(double(delta) - 1.0) + 0.1;

  for (int attempt = 0; attempt < 100; ++attempt) {
    BipartiteGraph g;
    g.delta = delta;
    g.m = m;
    std::vector<std::uint8_t> used(std::size_t(m) * m, 0);
    std::vector<std::uint32_t> perm(m);
    bool ok = true;
    for (std::uint32_t d = 0; d < delta && ok; ++d) {
      bool placed = false;
      for (int retry = 0; retry < 200000; ++retry) {
        for (std::uint32_t i = 0; i < m; ++i) perm[i] = i;
        for (std::uint32_t i = m; i-- > 1;) {
          std::swap(perm[i], perm[rng.next_below(i + 1)]);
        }
        bool clash = false;
        for (std::uint32_t i = 0; i < m; ++i) {
          if (used[std::size_t(i) * m + perm[i]]) {
            clash = true;
            break;
          }
        }
        if (!clash) {
          for (std::uint32_t i = 0; i < m; ++i) {
            used[std::size_t(i) * m + perm[i]] = 1;
            g.edges.emplace_back(i, perm[i]);
          }
          placed = true;
          break;
        }
      }
      ok = placed;
    }
    if (!ok) continue;
    g.rebuild_incidence();
    if (second_eigenvalue(g) <= target) return g;
  }
  fail(ErrorCode::SamplingExhausted,
       "no graph met the eigenvalue target in 100 attempts");
}

class ExpanderCode {
 public:
  ExpanderCode(BipartiteGraph graph, RsCode local)
      : graph_(std::move(graph)),
        local_(std::move(local)),
        lambda_(second_eigenvalue(graph_)) {
    const Field& f = local_.field();
    require(local_.n() == graph_.delta, ErrorCode::BadParams,
            "local blocklength must equal the graph degree");
    require(f.order() > graph_.delta, ErrorCode::BadParams,
            "field too small for the local code");
    const std::uint32_t n_out = graph_.edge_count();
    const std::uint32_t checks = graph_.delta - local_.dim();

    // Local parity checks: a basis of the dual of the local code.
    FieldMatrix local_gen(local_.dim(), local_.n());
    {
      std::vector<Sym> unit(local_.dim(), 0), row(local_.n());
      for (std::uint32_t r = 0; r < local_.dim(); ++r) {
        unit.assign(local_.dim(), 0);
        unit[r] = 1;
        local_.encode_into(unit, row);
        for (std::uint32_t c = 0; c < local_.n(); ++c) local_gen.at(r, c) = row[c];
      }
    }
    local_checks_ = null_space_basis(f, local_gen);

    // One block of parity rows per vertex, scattered through its edges.
    FieldMatrix stacked(std::size_t(2) * graph_.m * checks, n_out);
    std::size_t row = 0;
    auto add_vertex_rows = [&](const std::vector<std::uint32_t>& inc) {
      for (std::uint32_t j = 0; j < checks; ++j, ++row) {
        for (std::uint32_t i = 0; i < graph_.delta; ++i) {
          stacked.at(row, inc[i]) = local_checks_.at(j, i);
        }
      }
    };
    for (const auto& inc : graph_.incidence_a) add_vertex_rows(inc);
    for (const auto& inc : graph_.incidence_b) add_vertex_rows(inc);

    generator_ = null_space_basis(f, std::move(stacked));
    // Each basis row carries a 1 at its own free column and 0 at the others',
    // so those columns recover the message directly.
    message_cols_.resize(generator_.rows);
    for (std::size_t r = 0; r < generator_.rows; ++r) {
      for (std::size_t c = 0; c < generator_.cols; ++c) {
        if (generator_.at(r, c) != 0) {
          bool unit_col = true;
          for (std::size_t r2 = 0; r2 < generator_.rows; ++r2) {
            if (r2 != r && generator_.at(r2, c) != 0) {
              unit_col = false;
              break;
            }
          }
          if (unit_col && generator_.at(r, c) == 1) {
            message_cols_[r] = c;
            break;
          }
        }
      }
    }

    const std::int64_t bound =
        std::int64_t(n_out) - std::int64_t(2) * graph_.m * checks;
    require(std::int64_t(generator_.rows) >= bound,
            ErrorCode::DimensionBoundViolation,
            "dimension fell below the rank bound");
  }

  const BipartiteGraph& graph() const { return graph_; }
  const RsCode& local() const { return local_; }
  const Field& field() const { return local_.field(); }
  double lambda() const { return lambda_; }
  std::uint32_t n_out() const { return graph_.edge_count(); }
  std::uint32_t dimension() const { return std::uint32_t(generator_.rows); }
  const FieldMatrix& generator() const { return generator_; }

  std::vector<Sym> encode(std::span<const Sym> msg) const {
    require(msg.size() == generator_.rows, ErrorCode::LengthMismatch,
            "message length must equal the code dimension");
    std::vector<Sym> out(n_out());
    vec_mat_mul(field(), msg, generator_, out);
    return out;
  }

  std::vector<Sym> extract_message(std::span<const Sym> codeword) const {
    require(codeword.size() == n_out(), ErrorCode::LengthMismatch,
            "codeword length");
    std::vector<Sym> msg(generator_.rows);
    for (std::size_t r = 0; r < generator_.rows; ++r) {
      msg[r] = codeword[message_cols_[r]];
    }
    return msg;
  }

  bool local_word_ok(std::span<const Sym> word,
                     const std::vector<std::uint32_t>& inc) const {
    const Field& f = field();
    for (std::size_t j = 0; j < local_checks_.rows; ++j) {
      Sym acc = 0;
      for (std::uint32_t i = 0; i < graph_.delta; ++i) {
        acc = f.add(acc, f.mul(local_checks_.at(j, i), word[inc[i]]));
      }
      if (acc != 0) return false;
    }
    return true;
  }

  bool is_codeword(std::span<const Sym> word) const {
    if (word.size() != n_out()) return false;
    for (const auto& inc : graph_.incidence_a) {
      if (!local_word_ok(word, inc)) return false;
    }
    for (const auto& inc : graph_.incidence_b) {
      if (!local_word_ok(word, inc)) return false;
    }
    return true;
  }

  std::uint32_t unsatisfied_count(std::span<const Sym> word, bool side_a) const {
    const auto& side = side_a ? graph_.incidence_a : graph_.incidence_b;
    std::uint32_t bad = 0;
    for (const auto& inc : side) bad += !local_word_ok(word, inc);
    return bad;
  }

  // One decoding pass over a side: each vertex's local word is replaced by
  // the bounded-distance decode when one exists, left unchanged otherwise.
  // Returns whether anything changed.
  bool zemor_round(std::vector<Sym>& word, bool side_a) const {
    const auto& side = side_a ? graph_.incidence_a : graph_.incidence_b;
    bool changed = false;
    std::vector<Sym> lw(graph_.delta), cw(graph_.delta);
    for (const auto& inc : side) {
      for (std::uint32_t i = 0; i < graph_.delta; ++i) lw[i] = word[inc[i]];
      auto dec = local_.decode(lw);
      if (!dec || dec->corrected == 0) continue;
      local_.encode_into(dec->message, cw);
      for (std::uint32_t i = 0; i < graph_.delta; ++i) word[inc[i]] = cw[i];
      changed = true;
    }
    return changed;
  }

  std::uint32_t default_rounds() const {
    const double lg = std::log2(double(std::max<std::uint32_t>(n_out(), 2)));
    return 2 * (std::uint32_t(std::ceil(lg)) + 2);  // full A/B sweeps
  }

  // Alternating side passes (A on odd rounds) until quiescence or the round
  // budget runs out. Best effort: callers check is_codeword on the result.
  std::vector<Sym> zemor_decode(std::span<const Sym> received,
                                std::optional<std::uint32_t> max_rounds = {}) const {
    require(received.size() == n_out(), ErrorCode::LengthMismatch,
            "received word length");
    std::vector<Sym> word(received.begin(), received.end());
    const std::uint32_t rounds = max_rounds ? *max_rounds : default_rounds();
    for (std::uint32_t r = 0; r < rounds; ++r) {
      const bool changed = zemor_round(word, /*side_a=*/r % 2 == 0);
      if (!changed) break;
    }
    return word;
  }

 private:
  BipartiteGraph graph_;
  RsCode local_;
  double lambda_;
  FieldMatrix local_checks_;
  FieldMatrix generator_;
  std::vector<std::size_t> message_cols_;
};

}  // namespace latcode
