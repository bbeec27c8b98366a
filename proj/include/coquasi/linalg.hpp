// Dense exact linear algebra over Scalar: matrices, row reduction, kernels,
// affine solves and subspace coordinates.
#pragma once

#include "coquasi/scalar.hpp"

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coquasi {

using Vec = std::vector<Scalar>;

inline Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n)); }
inline Vec unit_vec(int n, int i) {
  Vec v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = Scalar(1);
  return v;
}
inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}
inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Vec operator*(const Scalar& s, Vec a) {
  for (auto& x : a) x = s * x;
  return a;
}
inline void axpy(Vec& y, const Scalar& s, const Vec& x) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += s * x[i];
}

// Kronecker product of coordinate vectors: index i*|b| + j
inline Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }
  static Matrix from_columns(int rows, const std::vector<Vec>& cols) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols_; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec column(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(int c, const Vec& v) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  Vec row(int r) const {
    Vec v(cols_);
    for (int c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
  }

  Vec apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    Vec y(rows_);
    for (int c = 0; c < cols_; ++c) {
      if (x[c].is_zero()) continue;
      for (int r = 0; r < rows_; ++r) {
        const Scalar& a = (*this)(r, c);
        if (!a.is_zero()) y[r] += a * x[c];
      }
    }
    return y;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: size mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Scalar& x = a(i, k);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Scalar& y = b(k, j);
          if (!y.is_zero()) m(i, j) += x * y;
        }
      }
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  const std::vector<Scalar>& data() const { return data_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

// Kronecker product of matrices (maps A⊗B)
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

struct Echelon {
  Matrix reduced;           // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

inline Echelon row_reduce(Matrix m) {
  Echelon e;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    Scalar inv = m(r, c).inverse();
    for (int k = c; k < m.cols(); ++k)
      if (!m(r, k).is_zero()) m(r, k) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar f = m(i, c);
      for (int k = c; k < m.cols(); ++k)
        if (!m(r, k).is_zero()) m(i, k) -= f * m(r, k);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline int rank(const Matrix& m) { return static_cast<int>(row_reduce(m).pivots.size()); }

// basis of {x : m x = 0}, one vector per free column, in column order
inline std::vector<Vec> nullspace(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(static_cast<int>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

struct AffineSolution {
  Vec particular;               // free variables set to zero
  std::vector<Vec> directions;  // nullspace basis
};

inline std::optional<AffineSolution> solve_affine(const Matrix& a, const Vec& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  AffineSolution s;
  s.particular = zero_vec(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) s.particular[e.pivots[r]] = e.reduced(static_cast<int>(r), a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  for (int f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(a.cols());
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(static_cast<int>(r), f);
    s.directions.push_back(std::move(v));
  }
  return s;
}

inline std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  auto s = solve_affine(a, b);
  if (!s) return std::nullopt;
  return s->particular;
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Scalar(1);
  }
  Echelon e = row_reduce(aug);
  if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

// A subspace of k^n with a fixed basis; coordinates are computed through a
// left inverse on a set of pivot rows and then verified.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, const std::vector<Vec>& spanning) : ambient_(ambient) {
    // extract an independent subset, keeping the input order
    if (!spanning.empty()) {
      Matrix m = Matrix::from_columns(ambient, spanning);
      Echelon e = row_reduce(m);
      for (int c : e.pivots) basis_.push_back(spanning[c]);
    }
    int k = dim();
    if (k == 0) return;
    Matrix b = Matrix::from_columns(ambient, basis_);
    Echelon et = row_reduce(b.transpose());
    rows_ = et.pivots;  // k independent rows of b
    Matrix sq(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sq(i, j) = b(rows_[i], j);
    left_inv_ = *coquasi::inverse(sq);
  }

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec>& basis() const { return basis_; }
  Matrix basis_matrix() const { return Matrix::from_columns(ambient_, basis_); }

  std::optional<Vec> coordinates(const Vec& v) const {
    int k = dim();
    Vec y(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (!v[rows_[j]].is_zero() && !left_inv_(i, j).is_zero()) y[i] += left_inv_(i, j) * v[rows_[j]];
    Vec back = zero_vec(ambient_);
    for (int i = 0; i < k; ++i) axpy(back, y[i], basis_[i]);
    if (back != v) return std::nullopt;
    return y;
  }
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  Vec element(const Vec& coords) const {
    Vec out = zero_vec(ambient_);
    for (int i = 0; i < dim(); ++i) axpy(out, coords[i], basis_[i]);
    return out;
  }

 private:
  int ambient_ = 0;
  std::vector<Vec> basis_;
  std::vector<int> rows_;
  Matrix left_inv_;
};

}  // namespace coquasi
