#include "lg2/exact_matrix.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lg2/errors.hpp"

namespace lg2 {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
{
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw StructuralError("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = GaussianRational(1);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& diag)
{
  ExactMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i)
    m(i, i) = diag[i];
  return m;
}

namespace {

void require_same_shape(const ExactMatrix& a, const ExactMatrix& b)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw StructuralError("matrix shape mismatch");
}

} // namespace

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b)
{
  require_same_shape(a, b);
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] += b.data_[i];
  return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b)
{
  require_same_shape(a, b);
  ExactMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] -= b.data_[i];
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
{
  if (a.cols_ != b.rows_)
    throw StructuralError("matrix product dimension mismatch");
  ExactMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        out(i, j) += aik * b(k, j);
    }
  return out;
}

ExactMatrix operator*(const GaussianRational& s, const ExactMatrix& a)
{
  ExactMatrix out = a;
  for (auto& v : out.data_)
    v *= s;
  return out;
}

ExactMatrix ExactMatrix::transpose() const
{
  ExactMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = (*this)(i, j);
  return out;
}

ExactMatrix ExactMatrix::conj_transpose() const
{
  ExactMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = (*this)(i, j).conj();
  return out;
}

GaussianRational ExactMatrix::trace() const
{
  if (rows_ != cols_)
    throw StructuralError("trace of non-square matrix");
  GaussianRational t(0);
  for (std::size_t i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

GaussianRational ExactMatrix::determinant() const
{
  if (rows_ != cols_)
    throw StructuralError("determinant of non-square matrix");
  ExactMatrix m = *this;
  GaussianRational det(1);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t pivot = c;
    while (pivot < rows_ && m(pivot, c).is_zero())
      ++pivot;
    if (pivot == rows_)
      return GaussianRational(0);
    if (pivot != c) {
      for (std::size_t j = 0; j < cols_; ++j)
        std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (m(r, c).is_zero())
        continue;
      GaussianRational f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < cols_; ++j)
        m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const
{
  if (rows_ != cols_)
    throw StructuralError("inverse of non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix m = *this;
  ExactMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c).is_zero())
      ++pivot;
    if (pivot == n)
      throw std::domain_error("singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(pivot, j), m(c, j));
      std::swap(inv(pivot, j), inv(c, j));
    }
    GaussianRational p = m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c).is_zero())
        continue;
      GaussianRational f = m(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::size_t ExactMatrix::rank() const
{
  ExactMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && m(pivot, c).is_zero())
      ++pivot;
    if (pivot == rows_)
      continue;
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(m(pivot, j), m(rank, j));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m(r, c).is_zero())
        continue;
      GaussianRational f = m(r, c) / m(rank, c);
      for (std::size_t j = c; j < cols_; ++j)
        m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<GaussianRational> ExactMatrix::characteristic_polynomial() const
{
  if (rows_ != cols_)
    throw StructuralError("characteristic polynomial of non-square matrix");
  const std::size_t n = rows_;
  std::vector<GaussianRational> c(n + 1);
  c[n] = GaussianRational(1);
  ExactMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix shifted = mk + c[n - k + 1] * identity(n);
    mk = (*this) * shifted;
    c[n - k] = GaussianRational::fraction(-1, static_cast<long>(k)) * mk.trace();
  }
  return c;
}

bool ExactMatrix::is_zero() const
{
  for (const auto& v : data_)
    if (!v.is_zero())
      return false;
  return true;
}

std::string ExactMatrix::to_string() const
{
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      out << (j ? ", " : "") << (*this)(i, j).to_string();
    out << "]";
  }
  out << "]";
  return out.str();
}

ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b)
{
  return a * b - b * a;
}

std::size_t rank_over_rationals(const IntMatrix& input)
{
  if (input.empty())
    return 0;
  const std::size_t rows = input.size();
  const std::size_t cols = input.front().size();
  std::vector<std::vector<__int128>> m(rows, std::vector<__int128>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (input[i].size() != cols)
      throw StructuralError("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j)
      m[i][j] = input[i][j];
  }
  auto gcd128 = [](__int128 a, __int128 b) {
    if (a < 0)
      a = -a;
    if (b < 0)
      b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0)
        continue;
      __int128 a = m[rank][c];
      __int128 b = m[r][c];
      __int128 g = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        m[r][j] = a * m[r][j] - b * m[rank][j];
        g = gcd128(g, m[r][j]);
      }
      if (g > 1)
        for (std::size_t j = 0; j < cols; ++j)
          m[r][j] /= g;
    }
    ++rank;
  }
  return rank;
}

} // namespace lg2
