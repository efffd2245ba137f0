#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace ulp {

using Complex = std::complex<double>;

/// Dense complex matrix stored row-major.
///
/// Constructing from explicit entries validates the shape and rejects NaN or
/// infinite values; element access afterwards is unchecked.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  /// Row-by-row literal, e.g. `{{1, {0, 1}}, {0, 1}}`.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Complex> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const Complex> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }

  std::span<const Complex> entries() const noexcept { return entries_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix hermitian(const ComplexMatrix& a);

/// Throws ShapeError when `a.cols() != b.rows()`.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

/// Solves (A + ridge * I) X = B for Hermitian positive semidefinite A.
///
/// Uses a Cholesky factorization. If a Cholesky pivot drops below
/// 1e-12 * ||A + ridge * I||_F the solve restarts with partially pivoted LU;
/// an LU pivot below machine-precision scale raises SingularityError carrying
/// the pivot magnitude.
ComplexMatrix solve_hermitian(const ComplexMatrix& a, const ComplexMatrix& b,
                              double ridge);

/// Throws ShapeError for non-square input.
Complex trace(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// Euclidean norm of every row.
std::vector<double> row_norms(const ComplexMatrix& a);

/// A + s * I for square A.
ComplexMatrix add_scaled_identity(const ComplexMatrix& a, double s);

/// Moore-Penrose inverse of a full-rank matrix via the Gram-matrix solve.
///
/// Tall or square input uses (A^H A)^{-1} A^H, wide input A^H (A A^H)^{-1}.
/// Rank deficiency surfaces as SingularityError.
ComplexMatrix pseudo_inverse(const ComplexMatrix& a);

/// [A B]; row counts must agree.
ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b);

/// [A; B]; column counts must agree.
ComplexMatrix vstack(const ComplexMatrix& a, const ComplexMatrix& b);

/// Columns [first, first + count) of A.
ComplexMatrix column_block(const ComplexMatrix& a, std::size_t first, std::size_t count);

}  // namespace ulp
