#pragma once

// Dense exact matrices over Q and fraction-based Gaussian elimination.
// Everything downstream (cohomology, Hodge data, obstruction classes) reduces
// to solve_exact / kernel / rank on matrices produced here.

#include <cassert>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace cinfty {

// Sparse vector over an indexed basis. Used both for ambient algebra elements
// and for coordinate vectors on cohomology bases.
struct SparseVec {
  std::map<int, Scalar> coef;

  bool zero() const { return coef.empty(); }

  void add(int idx, const Scalar& c) {
    if (is_zero(c)) return;
    auto it = coef.find(idx);
    if (it == coef.end()) {
      coef.emplace(idx, c);
    } else {
      it->second += c;
      if (is_zero(it->second)) coef.erase(it);
    }
  }

  void add(const SparseVec& other, const Scalar& scale = Scalar(1)) {
    if (is_zero(scale)) return;
    for (const auto& [i, c] : other.coef) add(i, c * scale);
  }

  SparseVec scaled(const Scalar& s) const {
    SparseVec r;
    if (is_zero(s)) return r;
    for (const auto& [i, c] : coef) r.coef.emplace(i, c * s);
    return r;
  }

  Scalar at(int idx) const {
    auto it = coef.find(idx);
    return it == coef.end() ? Scalar(0) : it->second;
  }

  friend SparseVec operator+(SparseVec a, const SparseVec& b) {
    a.add(b);
    return a;
  }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) {
    a.add(b, Scalar(-1));
    return a;
  }
  friend SparseVec operator*(const Scalar& s, const SparseVec& v) { return v.scaled(s); }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.coef == b.coef; }
};

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), Scalar(0)) {}

  Scalar& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Mat transposed() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    assert(int(v.size()) == cols);
    std::vector<Scalar> r(rows, Scalar(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (!is_zero(at(i, j)) && !is_zero(v[j])) r[i] += at(i, j) * v[j];
    return r;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    assert(x.cols == y.rows);
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (is_zero(x.at(i, k))) continue;
        for (int j = 0; j < y.cols; ++j)
          if (!is_zero(y.at(k, j))) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }

  friend Mat operator+(const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
  }

  friend Mat operator-(const Mat& x, const Mat& y) {
    assert(x.rows == y.rows && x.cols == y.cols);
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
  }

  bool is_zero_matrix() const {
    for (const auto& q : a)
      if (!is_zero(q)) return false;
    return true;
  }
};

// Reduced row echelon form in place; returns pivot column per reduced row.
// Pivot rows are chosen by smallest limb count (partial pivoting on operand
// size, not magnitude: any nonzero pivot is exact).
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int best = -1;
    size_t best_w = 0;
    for (int i = row; i < m.rows; ++i) {
      if (is_zero(m.at(i, col))) continue;
      size_t w = pivot_weight(m.at(i, col));
      if (best < 0 || w < best_w) {
        best = i;
        best_w = w;
      }
    }
    if (best < 0) continue;
    if (best != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(best, j));
    Scalar inv = 1 / m.at(row, col);
    for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || is_zero(m.at(i, col))) continue;
      Scalar f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Mat m) { return int(rref(m).size()); }

struct SolveResult {
  std::optional<std::vector<Scalar>> particular;  // empty optional: inconsistent
  std::vector<std::vector<Scalar>> kernel;        // basis of the null space
};

// Exact solve A x = b. The particular solution puts zeros on free variables,
// which keeps every witness downstream deterministic.
inline SolveResult solve_exact(const Mat& A, const std::vector<Scalar>& b) {
  if (int(b.size()) != A.rows) throw std::invalid_argument("solve_exact: shape mismatch");
  Mat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  // Eliminate only on the first A.cols columns.
  std::vector<int> pivots;
  {
    int row = 0;
    for (int col = 0; col < A.cols && row < aug.rows; ++col) {
      int best = -1;
      size_t best_w = 0;
      for (int i = row; i < aug.rows; ++i) {
        if (is_zero(aug.at(i, col))) continue;
        size_t w = pivot_weight(aug.at(i, col));
        if (best < 0 || w < best_w) {
          best = i;
          best_w = w;
        }
      }
      if (best < 0) continue;
      if (best != row)
        for (int j = 0; j < aug.cols; ++j) std::swap(aug.at(row, j), aug.at(best, j));
      Scalar inv = 1 / aug.at(row, col);
      for (int j = col; j < aug.cols; ++j) aug.at(row, j) *= inv;
      for (int i = 0; i < aug.rows; ++i) {
        if (i == row || is_zero(aug.at(i, col))) continue;
        Scalar f = aug.at(i, col);
        for (int j = col; j < aug.cols; ++j) aug.at(i, j) -= f * aug.at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
  }
  SolveResult res;
  // Kernel basis: one vector per free column.
  std::vector<int> pivot_of_col(A.cols, -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivot_of_col[pivots[r]] = int(r);
  for (int col = 0; col < A.cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Scalar> v(A.cols, Scalar(0));
    v[col] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -aug.at(int(r), col);
    res.kernel.push_back(std::move(v));
  }
  // Consistency: a nonzero entry in b's column below the pivot rows.
  for (int i = int(pivots.size()); i < aug.rows; ++i)
    if (!is_zero(aug.at(i, A.cols))) return res;
  std::vector<Scalar> x(A.cols, Scalar(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), A.cols);
  res.particular = std::move(x);
  return res;
}

inline std::vector<std::vector<Scalar>> kernel_basis(const Mat& A) {
  return solve_exact(A, std::vector<Scalar>(A.rows, Scalar(0))).kernel;
}

// Row-space membership oracle: stores an RREF basis of a span.
struct Subspace {
  int dim_ambient = 0;
  Mat basis;  // RREF, one row per basis vector
  std::vector<int> pivots;

  explicit Subspace(int ambient) : dim_ambient(ambient), basis(0, ambient) {}

  static Subspace span(int ambient, const std::vector<std::vector<Scalar>>& vecs) {
    Mat m(int(vecs.size()), ambient);
    for (size_t i = 0; i < vecs.size(); ++i)
      for (int j = 0; j < ambient; ++j) m.at(int(i), j) = vecs[i][j];
    std::vector<int> piv = rref(m);
    Subspace s(ambient);
    s.basis = Mat(int(piv.size()), ambient);
    for (size_t i = 0; i < piv.size(); ++i)
      for (int j = 0; j < ambient; ++j) s.basis.at(int(i), j) = m.at(int(i), j);
    s.pivots = piv;
    return s;
  }

  int dim() const { return basis.rows; }

  bool contains(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = v;
    for (int r = 0; r < basis.rows; ++r) {
      const Scalar& c = w[pivots[r]];
      if (is_zero(c)) continue;
      Scalar f = c;
      for (int j = 0; j < dim_ambient; ++j) w[j] -= f * basis.at(r, j);
    }
    for (const auto& q : w)
      if (!is_zero(q)) return false;
    return true;
  }

  // Residue of v modulo the span (v reduced against the RREF rows).
  std::vector<Scalar> reduce(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = v;
    for (int r = 0; r < basis.rows; ++r) {
      const Scalar& c = w[pivots[r]];
      if (is_zero(c)) continue;
      Scalar f = c;
      for (int j = 0; j < dim_ambient; ++j) w[j] -= f * basis.at(r, j);
    }
    return w;
  }
};

}  // namespace cinfty
