#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "cohkey/errors.hpp"

namespace cohkey {

using Complex = std::complex<double>;

// Dense row-major complex matrix with value semantics: operations return new
// matrices and never mutate their inputs, so instances can be shared freely
// across threads.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::initializer_list<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  // Bounds-checked access; throws BadIndex.
  const Complex& at(std::size_t i, std::size_t j) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;
  ComplexMatrix column(std::size_t j) const;

  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  // max entrywise |(*this) - other|
  double max_abs_diff(const ComplexMatrix& other) const;
  bool is_hermitian(double tol) const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_, cols_;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(double s, ComplexMatrix m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// |v><v| for a column vector v.
ComplexMatrix projector_onto(const ComplexMatrix& ket);

}  // namespace cohkey
