#ifndef LG2_EXACT_MATRIX_HPP
#define LG2_EXACT_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lg2/rational.hpp"

namespace lg2 {

/// Small dense matrix over Q(i), row-major.
class ExactMatrix {
public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  /// Row-wise literal; all rows must have the same length.
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<GaussianRational>& diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  ExactMatrix transpose() const;
  ExactMatrix conj_transpose() const;
  GaussianRational trace() const;
  GaussianRational determinant() const;
  /// Throws std::domain_error when singular.
  ExactMatrix inverse() const;
  std::size_t rank() const;

  /// Coefficients c_0..c_n of det(lambda I - A) = sum c_k lambda^k
  /// (Faddeev-LeVerrier, exact).
  std::vector<GaussianRational> characteristic_polynomial() const;

  bool is_zero() const;
  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over Q of a small integer matrix (fraction-free elimination).
std::size_t rank_over_rationals(const IntMatrix& m);

} // namespace lg2

#endif
