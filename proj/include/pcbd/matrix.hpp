#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace pcbd {

// Minimal dense row-major matrix.  T is one of long long (designs, Hadamard
// matrices), rational (exact information matrices) or double (floating point
// fallbacks).
template <class T>
class mat {
 public:
  mat() : rows_(0), cols_(0) {}
  mat(int rows, int cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw error("negative matrix dimension");
  }
  mat(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) throw error("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static mat identity(int n) {
    mat m(n, n, T(0));
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static mat constant(int rows, int cols, T value) { return mat(rows, cols, value); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  T& at(int i, int j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(int i, int j) const {
    check(i, j);
    return (*this)(i, j);
  }

  mat transpose() const {
    mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class U>
  mat<U> cast() const {
    mat<U> m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = U((*this)(i, j));
    return m;
  }

  std::vector<T> row(int i) const {
    std::vector<T> r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }
  std::vector<T> col(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  friend mat operator+(const mat& a, const mat& b) {
    a.require_same_shape(b, "addition");
    mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] + b.data_[i];
    return r;
  }
  friend mat operator-(const mat& a, const mat& b) {
    a.require_same_shape(b, "subtraction");
    mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = a.data_[i] - b.data_[i];
    return r;
  }
  friend mat operator*(const mat& a, const mat& b) {
    if (a.cols_ != b.rows_) throw error("matrix product shape mismatch");
    mat r(a.rows_, b.cols_, T(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend mat operator*(const T& s, const mat& a) {
    mat r(a.rows_, a.cols_);
    for (size_t i = 0; i < a.data_.size(); ++i) r.data_[i] = s * a.data_[i];
    return r;
  }
  mat operator-() const { return T(-1) * *this; }

  friend bool operator==(const mat& a, const mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const mat& a, const mat& b) { return !(a == b); }

  // A^T A without forming the transpose.
  mat gram() const {
    mat g(cols_, cols_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const T v = (*this)(i, j);
        if (v == T(0)) continue;
        for (int k = j; k < cols_; ++k) g(j, k) += v * (*this)(i, k);
      }
    for (int j = 0; j < cols_; ++j)
      for (int k = 0; k < j; ++k) g(j, k) = g(k, j);
    return g;
  }

  friend std::ostream& operator<<(std::ostream& os, const mat& m) {
    for (int i = 0; i < m.rows_; ++i) {
      for (int j = 0; j < m.cols_; ++j) {
        if (j) os << ' ';
        os << m(i, j);
      }
      os << '\n';
    }
    return os;
  }

 private:
  void check(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw index_error("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                        ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  void require_same_shape(const mat& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw error(std::string("matrix shape mismatch in ") + what);
  }

  int rows_;
  int cols_;
  std::vector<T> data_;
};

using imat = mat<long long>;
using qmat = mat<rational>;
using dmat = mat<double>;

template <class T>
mat<T> vcat(const mat<T>& a, const mat<T>& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw error("vertical concatenation width mismatch");
  mat<T> r(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

template <class T>
mat<T> hcat(const mat<T>& a, const mat<T>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  if (a.rows() != b.rows()) throw error("horizontal concatenation height mismatch");
  mat<T> r(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

template <class T>
mat<T> kron(const mat<T>& a, const mat<T>& b) {
  mat<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          r(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return r;
}

// Column selection.  Repeated or out-of-range indices are rejected.
template <class T>
mat<T> select_columns(const mat<T>& m, const std::vector<int>& indices) {
  std::set<int> seen;
  for (int j : indices) {
    if (j < 0 || j >= m.cols())
      throw index_error("column index " + std::to_string(j) + " outside 0.." +
                        std::to_string(m.cols() - 1));
    if (!seen.insert(j).second)
      throw index_error("duplicate column index " + std::to_string(j));
  }
  mat<T> r(m.rows(), static_cast<int>(indices.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (size_t k = 0; k < indices.size(); ++k) r(i, static_cast<int>(k)) = m(i, indices[k]);
  return r;
}

template <class T>
mat<T> select_rows(const mat<T>& m, const std::vector<int>& indices) {
  for (int i : indices)
    if (i < 0 || i >= m.rows())
      throw index_error("row index " + std::to_string(i) + " outside 0.." +
                        std::to_string(m.rows() - 1));
  mat<T> r(static_cast<int>(indices.size()), m.cols());
  for (size_t k = 0; k < indices.size(); ++k)
    for (int j = 0; j < m.cols(); ++j) r(static_cast<int>(k), j) = m(indices[k], j);
  return r;
}

template <class T>
T trace(const mat<T>& m) {
  if (m.rows() != m.cols()) throw error("trace of non-square matrix");
  T t(0);
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// Exact determinant by fraction-free style Gaussian elimination over a field.
template <class T>
T det(mat<T> m) {
  if (m.rows() != m.cols()) throw error("determinant of non-square matrix");
  const int n = m.rows();
  T result(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!(m(r, c) == T(0))) {
        pivot = r;
        break;
      }
    if (pivot < 0) return T(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m(c, j), m(pivot, j));
      result = -result;
    }
    result *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == T(0)) continue;
      T f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return result;
}

// Gauss-Jordan inverse over a field; throws singular_error.
template <class T>
mat<T> inverse(mat<T> m) {
  if (m.rows() != m.cols()) throw error("inverse of non-square matrix");
  const int n = m.rows();
  mat<T> inv = mat<T>::identity(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!(m(r, c) == T(0))) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw singular_error("matrix is singular");
    if (pivot != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(c, j), m(pivot, j));
        std::swap(inv(c, j), inv(pivot, j));
      }
    T p = m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) /= p;
      inv(c, j) /= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      T f = m(r, c);
      if (f == T(0)) continue;
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence.
// Coefficients ascending in x, monic of degree n.
template <class T>
std::vector<T> char_poly(const mat<T>& m) {
  if (m.rows() != m.cols()) throw error("characteristic polynomial of non-square matrix");
  const int n = m.rows();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  mat<T> aux = mat<T>::identity(n);
  for (int k = 1; k <= n; ++k) {
    mat<T> mk = m * aux;
    T ck = trace(mk) / T(k);
    c[n - k] = T(0) - ck;
    aux = mk;
    for (int i = 0; i < n; ++i) aux(i, i) += c[n - k];
  }
  return c;
}

// Solves A x = b for square A over a field.
template <class T>
std::vector<T> solve(const mat<T>& a, const std::vector<T>& b) {
  if (a.rows() != a.cols() || static_cast<int>(b.size()) != a.rows())
    throw error("solve shape mismatch");
  mat<T> rhs(a.rows(), 1);
  for (int i = 0; i < a.rows(); ++i) rhs(i, 0) = b[i];
  mat<T> x = inverse(a) * rhs;
  std::vector<T> out(a.rows());
  for (int i = 0; i < a.rows(); ++i) out[i] = x(i, 0);
  return out;
}

}  // namespace pcbd
