#ifndef QUIVERLAB_MATRIX_HPP
#define QUIVERLAB_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace quiverlab {

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const mpz_class& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  IntMatrix transpose() const;
  IntMatrix pow(unsigned long l) const;  // square matrices only
  bool nonnegative() const;
  bool is_zero() const;

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

}  // namespace quiverlab

#endif
