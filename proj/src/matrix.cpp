#include "latbv/matrix.hpp"

#include <stdexcept>

namespace latbv {

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMat RatMat::transpose() const {
  RatMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RatMat::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
  if (x.cols_ != y.rows_) throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r(x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols_; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
  return r;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
  if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
    throw std::invalid_argument("RatMat: shape mismatch");
  RatMat r = x;
  for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
  return r;
}

RatMat RatMat::scaled(const Rat& c) const {
  RatMat r = *this;
  for (auto& v : r.a_) v *= c;
  return r;
}

RatMat RatMat::inverse() const {
  if (rows_ != cols_) throw std::domain_error("RatMat::inverse: not square");
  const std::size_t n = rows_;
  RatMat a = *this;
  RatMat inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) throw std::domain_error("RatMat::inverse: singular matrix");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    Rat d = a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      Rat f = a.at(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

}  // namespace latbv
