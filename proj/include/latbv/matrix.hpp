#ifndef LATBV_MATRIX_HPP
#define LATBV_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "latbv/scalar.hpp"

namespace latbv {

/// Dense matrix with exact rational entries.
class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  RatMat transpose() const;
  bool is_symmetric() const;

  friend RatMat operator*(const RatMat& x, const RatMat& y);
  friend RatMat operator+(const RatMat& x, const RatMat& y);
  friend RatMat operator-(const RatMat& x, const RatMat& y);
  RatMat scaled(const Rat& c) const;
  friend bool operator==(const RatMat& x, const RatMat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  /// Gauss–Jordan inverse; throws std::domain_error if singular.
  RatMat inverse() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

}  // namespace latbv

#endif  // LATBV_MATRIX_HPP
