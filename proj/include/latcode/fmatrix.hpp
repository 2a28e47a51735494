// Dense matrices over a finite field: row reduction, rank, null spaces.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "latcode/errors.hpp"
#include "latcode/galois.hpp"

namespace latcode {

struct FieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Sym> a;  // row-major

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  Sym& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  Sym at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  std::span<const Sym> row(std::size_t r) const {
    return {a.data() + r * cols, cols};
  }
};

// Reduced row echelon form with column pivoting. Returns the pivot columns
// in order; the rank is pivots.size().
inline std::vector<std::size_t> rref_inplace(const Field& f, FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pr = r;
    while (pr < m.rows && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows) continue;
    if (pr != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    }
    const Sym s = f.inv(m.at(r, c));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Sym t = m.at(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(const Field& f, FieldMatrix m) {
  return rref_inplace(f, m).size();
}

// Basis of the right null space {x : M x = 0}, one basis vector per row.
inline FieldMatrix null_space_basis(const Field& f, FieldMatrix m) {
  const std::vector<std::size_t> pivots = rref_inplace(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  FieldMatrix basis(m.cols - pivots.size(), m.cols);
  std::size_t bi = 0;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    basis.at(bi, c) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis.at(bi, pivots[r]) = f.neg(m.at(r, c));
    }
    ++bi;
  }
  return basis;
}

// Row vector times matrix: out = v * M.
inline void vec_mat_mul(const Field& f, std::span<const Sym> v,
                        const FieldMatrix& m, std::span<Sym> out) {
  require(v.size() == m.rows && out.size() == m.cols, ErrorCode::LengthMismatch,
          "vector/matrix size mismatch");
  for (std::size_t c = 0; c < m.cols; ++c) out[c] = 0;
  for (std::size_t r = 0; r < m.rows; ++r) {
    const Sym s = v[r];
    if (s == 0) continue;
    for (std::size_t c = 0; c < m.cols; ++c) {
      out[c] = f.add(out[c], f.mul(s, m.at(r, c)));
    }
  }
}

}  // namespace latcode
