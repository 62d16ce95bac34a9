#include "cohkey/complex_matrix.hpp"

#include <cmath>
#include <string>

namespace cohkey {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> entries)
    : rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols)
    throw DimensionMismatch("initializer has " + std::to_string(data_.size()) +
                            " entries for a " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " matrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

const Complex& ComplexMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_)
    throw BadIndex("index (" + std::to_string(i) + "," + std::to_string(j) +
                   ") outside " + std::to_string(rows_) + "x" +
                   std::to_string(cols_) + " matrix");
  return data_[i * cols_ + j];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(i, j) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::column(std::size_t j) const {
  if (j >= cols_) throw BadIndex("column " + std::to_string(j) + " out of range");
  ComplexMatrix out(rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionMismatch("max_abs_diff shape mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < data_.size(); ++k)
    m = std::max(m, std::abs(data_[k] - other.data_[k]));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch("operator+= shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionMismatch("operator-= shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows())
    throw DimensionMismatch("operator* inner dimension mismatch");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i)
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Complex a = lhs(i, k);
      if (a == 0.0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
  m *= s;
  return m;
}

ComplexMatrix operator*(double s, ComplexMatrix m) {
  m *= Complex(s, 0.0);
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex f = a(i, j);
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f * b(k, l);
    }
  return out;
}

ComplexMatrix projector_onto(const ComplexMatrix& ket) {
  if (ket.cols() != 1) throw DimensionMismatch("projector_onto expects a column vector");
  ComplexMatrix out(ket.rows(), ket.rows());
  for (std::size_t i = 0; i < ket.rows(); ++i)
    for (std::size_t j = 0; j < ket.rows(); ++j)
      out(i, j) = ket(i, 0) * std::conj(ket(j, 0));
  return out;
}

}  // namespace cohkey
