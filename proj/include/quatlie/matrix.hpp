#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "quatlie/rational.hpp"

namespace quatlie {

/// Dense square matrix over an exact or floating complex scalar.
template <typename S>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = S(1);
    return m;
  }

  int size() const { return n_; }

  S& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const S& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_size(b);
    Matrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_size(b);
    Matrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
    return r;
  }
  friend Matrix operator*(const S& s, const Matrix& a) {
    Matrix r(a.n_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same_size(b);
    const int n = a.n_;
    Matrix r(n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        const S& aik = a.at(i, k);
        if (aik == S(0)) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += aik * b.at(k, j);
      }
    }
    return r;
  }
  Matrix operator-() const {
    Matrix r(n_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void require_same_size(const Matrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("Matrix: size mismatch");
  }

  int n_ = 0;
  std::vector<S> a_;
};

using ExactMatrix = Matrix<ExactComplex>;
using ComplexMatrix = Matrix<std::complex<double>>;

template <typename S>
Matrix<S> transpose(const Matrix<S>& m) {
  Matrix<S> r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r.at(i, j) = m.at(j, i);
  return r;
}

inline ExactMatrix conj_transpose(const ExactMatrix& m) {
  ExactMatrix r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r.at(i, j) = m.at(j, i).conj();
  return r;
}

inline ComplexMatrix conj_transpose(const ComplexMatrix& m) {
  ComplexMatrix r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r.at(i, j) = std::conj(m.at(j, i));
  return r;
}

template <typename S>
S trace(const Matrix<S>& m) {
  S t{};
  for (int i = 0; i < m.size(); ++i) t += m.at(i, i);
  return t;
}

inline ComplexMatrix to_complex(const ExactMatrix& m) {
  ComplexMatrix r(m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      r.at(i, j) = {m.at(i, j).re.to_double(), m.at(i, j).im.to_double()};
  return r;
}

inline double max_abs(const ComplexMatrix& m) {
  double r = 0.0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) r = std::max(r, std::abs(m.at(i, j)));
  return r;
}

inline bool is_hermitian(const ExactMatrix& m) { return m == conj_transpose(m); }
inline bool is_symmetric(const ExactMatrix& m) { return m == transpose(m); }
inline bool is_skew_symmetric(const ExactMatrix& m) { return m == -transpose(m); }

inline bool is_real(const ExactMatrix& m) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (!m.at(i, j).im.is_zero()) return false;
  return true;
}

/// Equality against scalar * identity, exact.
inline bool equals_scaled_identity(const ExactMatrix& m, const ExactComplex& s) {
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      if (m.at(i, j) != (i == j ? s : ExactComplex())) return false;
  return true;
}

template <typename S>
Matrix<S> block(const Matrix<S>& m, int row0, int col0, int size) {
  Matrix<S> r(size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) r.at(i, j) = m.at(row0 + i, col0 + j);
  return r;
}

/// diag(b, b) of double size.
template <typename S>
Matrix<S> block_diag_pair(const Matrix<S>& b) {
  const int h = b.size();
  Matrix<S> r(2 * h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      r.at(i, j) = b.at(i, j);
      r.at(h + i, h + j) = b.at(i, j);
    }
  return r;
}

/// Checks diag(X, +-X) structure: true if off-diagonal blocks vanish.
inline bool is_block_diagonal(const ExactMatrix& m) {
  const int h = m.size() / 2;
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (!m.at(i, h + j).is_zero() || !m.at(h + i, j).is_zero()) return false;
  return true;
}

/// LU determinant with partial pivoting.
std::complex<double> det(const ComplexMatrix& m);

/// Exact determinant by fraction-free-style rational elimination.
ExactComplex det_exact(ExactMatrix m);

/// Numeric rank of a rows x cols real matrix via Gaussian elimination with
/// partial pivoting; pivots below tol count as zero.
int rank_real(std::vector<std::vector<double>> rows, double tol);

}  // namespace quatlie
