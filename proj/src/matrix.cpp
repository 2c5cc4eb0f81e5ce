#include "quatlie/matrix.hpp"

#include <cmath>

namespace quatlie {

std::complex<double> det(const ComplexMatrix& m) {
  const int n = m.size();
  ComplexMatrix lu = m;
  std::complex<double> result = 1.0;
  for (int i = 0; i < n; ++i) {
    int pivot = i;
    double best = std::abs(lu.at(i, i));
    for (int r = i + 1; r < n; ++r) {
      double v = std::abs(lu.at(r, i));
      if (v > best) {
        best = v;
        pivot = r;
      }
    }
    if (best == 0.0) return 0.0;
    if (pivot != i) {
      for (int c = 0; c < n; ++c) std::swap(lu.at(i, c), lu.at(pivot, c));
      result = -result;
    }
    result *= lu.at(i, i);
    for (int r = i + 1; r < n; ++r) {
      std::complex<double> f = lu.at(r, i) / lu.at(i, i);
      for (int c = i; c < n; ++c) lu.at(r, c) -= f * lu.at(i, c);
    }
  }
  return result;
}

ExactComplex det_exact(ExactMatrix m) {
  const int n = m.size();
  ExactComplex result = ExactComplex::one();
  for (int i = 0; i < n; ++i) {
    int pivot = -1;
    for (int r = i; r < n; ++r)
      if (!m.at(r, i).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) return ExactComplex();
    if (pivot != i) {
      for (int c = 0; c < n; ++c) std::swap(m.at(i, c), m.at(pivot, c));
      result = -result;
    }
    result *= m.at(i, i);
    for (int r = i + 1; r < n; ++r) {
      if (m.at(r, i).is_zero()) continue;
      ExactComplex f = m.at(r, i) / m.at(i, i);
      for (int c = i; c < n; ++c) m.at(r, c) -= f * m.at(i, c);
    }
  }
  return result;
}

int rank_real(std::vector<std::vector<double>> rows, double tol) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  std::size_t col = 0;
  for (std::size_t r = 0; r < rows.size() && col < cols; ++col) {
    std::size_t pivot = r;
    double best = std::abs(rows[r][col]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      double v = std::abs(rows[i][col]);
      if (v > best) {
        best = v;
        pivot = i;
      }
    }
    if (best < tol) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      double f = rows[i][col] / rows[r][col];
      if (f == 0.0) continue;
      for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace quatlie
