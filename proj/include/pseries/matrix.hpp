#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>

#include "rational.hpp"

namespace pseries {

struct IntMat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Int(0)) {}

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMat from_rows(const std::vector<IVec>& rws) {
    int r = static_cast<int>(rws.size());
    int c = r ? static_cast<int>(rws[0].size()) : 0;
    IntMat m(r, c);
    for (int i = 0; i < r; ++i) {
      require(static_cast<int>(rws[i].size()) == c, "ragged matrix rows");
      for (int j = 0; j < c; ++j) m.at(i, j) = rws[i][j];
    }
    return m;
  }

  static IntMat from_columns(const std::vector<IVec>& cls) {
    int c = static_cast<int>(cls.size());
    int r = c ? static_cast<int>(cls[0].size()) : 0;
    IntMat m(r, c);
    for (int j = 0; j < c; ++j) {
      require(static_cast<int>(cls[j].size()) == r, "ragged matrix columns");
      for (int i = 0; i < r; ++i) m.at(i, j) = cls[j][i];
    }
    return m;
  }

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const IntMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  IntMat mul(const IntMat& o) const {
    require(cols == o.rows, "matrix product shape mismatch");
    IntMat m(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const Int& x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols; ++j) m.at(i, j) += x * o.at(k, j);
      }
    return m;
  }

  IVec apply(const IVec& v) const {
    require(static_cast<int>(v.size()) == cols, "matrix apply shape mismatch");
    IVec r(rows, Int(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  IVec column(int j) const {
    IVec c(rows);
    for (int i = 0; i < rows; ++i) c[i] = at(i, j);
    return c;
  }

  IntMat transpose() const {
    IntMat m(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  // Fraction-free Bareiss determinant.
  Int det() const {
    require(rows == cols, "determinant of a non-square matrix");
    int n = rows;
    if (n == 0) return 1;
    IntMat m(*this);
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (m.at(k, k) == 0) {
        int p = -1;
        for (int i = k + 1; i < n; ++i)
          if (m.at(i, k) != 0) {
            p = i;
            break;
          }
        if (p < 0) return 0;
        for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) {
          m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        }
      prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
  }
};

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
  IntMat U;  // rows x rows
  IntMat V;  // cols x cols
  IntMat D;  // rows x cols
  IVec diag;
  int rank = 0;
};

inline SmithForm smith_normal_form(const IntMat& A) {
  SmithForm s;
  const int m = A.rows, n = A.cols;
  s.U = IntMat::identity(m);
  s.V = IntMat::identity(n);
  s.D = A;
  IntMat& D = s.D;
  IntMat& U = s.U;
  IntMat& V = s.V;

  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(D.at(i, c), D.at(j, c));
    for (int c = 0; c < m; ++c) std::swap(U.at(i, c), U.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(D.at(r, i), D.at(r, j));
    for (int r = 0; r < n; ++r) std::swap(V.at(r, i), V.at(r, j));
  };
  auto row_sub = [&](int i, int j, const Int& q) {  // R_i -= q R_j
    if (q == 0) return;
    for (int c = 0; c < n; ++c) D.at(i, c) -= q * D.at(j, c);
    for (int c = 0; c < m; ++c) U.at(i, c) -= q * U.at(j, c);
  };
  auto col_sub = [&](int i, int j, const Int& q) {  // C_i -= q C_j
    if (q == 0) return;
    for (int r = 0; r < m; ++r) D.at(r, i) -= q * D.at(r, j);
    for (int r = 0; r < n; ++r) V.at(r, i) -= q * V.at(r, j);
  };
  auto negate_row = [&](int i) {
    for (int c = 0; c < n; ++c) D.at(i, c) = -D.at(i, c);
    for (int c = 0; c < m; ++c) U.at(i, c) = -U.at(i, c);
  };

  const int steps = std::min(m, n);
  for (int t = 0; t < steps; ++t) {
    // Pivot: smallest nonzero absolute value in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j) {
        if (D.at(i, j) == 0) continue;
        if (pi < 0 || abs(D.at(i, j)) < abs(D.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        while (D.at(i, t) != 0) {
          Int q = D.at(i, t) / D.at(t, t);
          row_sub(i, t, q);
          if (D.at(i, t) != 0) {
            swap_rows(i, t);
            clean = false;
          }
        }
      }
      for (int j = t + 1; j < n; ++j) {
        while (D.at(t, j) != 0) {
          Int q = D.at(t, j) / D.at(t, t);
          col_sub(j, t, q);
          if (D.at(t, j) != 0) {
            swap_cols(j, t);
            clean = false;
          }
        }
      }
      if (!clean) continue;
      // Divisibility sweep: pivot must divide every remaining entry.
      bool divides = true;
      for (int i = t + 1; i < m && divides; ++i)
        for (int j = t + 1; j < n && divides; ++j)
          if (D.at(i, j) % D.at(t, t) != 0) {
            row_sub(t, i, Int(-1));  // R_t += R_i
            divides = false;
          }
      if (divides) break;
    }
    if (D.at(t, t) < 0) negate_row(t);
  }

  s.diag.assign(static_cast<size_t>(steps), Int(0));
  for (int t = 0; t < steps; ++t) {
    s.diag[t] = D.at(t, t);
    if (s.diag[t] != 0) s.rank = t + 1;
  }
  return s;
}

// Membership, element orders, and mod-2 reduction for Z^m modulo the column
// lattice of a relation matrix.
struct LatticeSolver {
  int m = 0;
  SmithForm snf;
  std::vector<int> even_positions;  // rows with even nonzero invariant factor

  LatticeSolver() = default;
  explicit LatticeSolver(const IntMat& relations) : m(relations.rows) {
    snf = smith_normal_form(relations);
    for (int i = 0; i < snf.rank; ++i)
      if (snf.diag[i] % 2 == 0) even_positions.push_back(i);
  }

  Int factor_at(int row) const {
    return row < static_cast<int>(snf.diag.size()) ? snf.diag[row] : Int(0);
  }

  bool contains(const IVec& v) const {
    require(static_cast<int>(v.size()) == m, "lattice membership shape mismatch");
    IVec y = snf.U.apply(v);
    for (int i = 0; i < m; ++i) {
      Int d = factor_at(i);
      if (d == 0) {
        if (y[i] != 0) return false;
      } else if (y[i] % d != 0) {
        return false;
      }
    }
    return true;
  }

  // Order of v modulo the lattice; 0 encodes infinite order.
  Int order_mod(const IVec& v) const {
    require(static_cast<int>(v.size()) == m, "lattice order shape mismatch");
    IVec y = snf.U.apply(v);
    Int ord = 1;
    for (int i = 0; i < m; ++i) {
      Int d = factor_at(i);
      if (d == 0) {
        if (y[i] != 0) return 0;
        continue;
      }
      Int r = y[i] % d;
      if (r < 0) r += d;
      Int o = d / gcd(d, r == 0 ? d : r);
      ord = lcm(ord, o);
    }
    return ord;
  }

  // F2 coordinates of an order-dividing-2 element, one bit per even invariant
  // factor; injective on the 2-torsion subgroup.
  std::vector<std::uint8_t> mod2_bits(const IVec& v) const {
    IVec y = snf.U.apply(v);
    std::vector<std::uint8_t> bits;
    bits.reserve(even_positions.size());
    for (int i : even_positions) {
      Int d = snf.diag[i];
      Int r = y[i] % d;
      if (r < 0) r += d;
      bits.push_back(r == d / 2 ? 1 : 0);
    }
    return bits;
  }
};

// Exact rational linear solve A x = b (Gaussian elimination); empty optional
// when inconsistent. A given as rows; underdetermined systems return one
// solution with free variables set to zero.
inline std::optional<Weight> solve_rational(std::vector<Weight> A, Weight b) {
  const int m = static_cast<int>(A.size());
  const int n = m ? static_cast<int>(A[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < m; ++c) {
    int p = -1;
    for (int i = r; i < m; ++i)
      if (A[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    Rat inv = A[r][c];
    for (int j = c; j < n; ++j) A[r][j] /= inv;
    b[r] /= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (int j = c; j < n; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < m; ++i)
    if (b[i] != 0) return std::nullopt;
  Weight x(n, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

}  // namespace pseries
