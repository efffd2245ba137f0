#include "ulp/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "ulp/errors.hpp"

namespace ulp {
namespace {

constexpr double kCholeskyPivotTolerance = 1e-12;
constexpr double kLuPivotTolerance = 1e-14;

std::string shape_string(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch " + shape_string(a) + " vs " +
                     shape_string(b));
  }
}

// Lower Cholesky factor of (A + ridge I), reading only the lower triangle.
// Empty when a pivot falls below tolerance.
std::optional<ComplexMatrix> cholesky(const ComplexMatrix& a, double ridge, double tol) {
  const std::size_t n = a.rows();
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real() + ridge;
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > tol)) return std::nullopt;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return l;
}

ComplexMatrix cholesky_solve(const ComplexMatrix& l, ComplexMatrix x) {
  const std::size_t n = l.rows();
  const std::size_t m = x.cols();
  // L Y = B
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const Complex lik = l(i, k);
      for (std::size_t c = 0; c < m; ++c) x(i, c) -= lik * x(k, c);
    }
    const double inv = 1.0 / l(i, i).real();
    for (std::size_t c = 0; c < m; ++c) x(i, c) *= inv;
  }
  // L^H X = Y
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) {
      const Complex lki = std::conj(l(k, ii));
      for (std::size_t c = 0; c < m; ++c) x(ii, c) -= lki * x(k, c);
    }
    const double inv = 1.0 / l(ii, ii).real();
    for (std::size_t c = 0; c < m; ++c) x(ii, c) *= inv;
  }
  return x;
}

ComplexMatrix lu_solve(ComplexMatrix a, ComplexMatrix x, double tol) {
  const std::size_t n = a.rows();
  const std::size_t m = x.cols();
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t p = j;
    double best = std::abs(a(j, j));
    for (std::size_t i = j + 1; i < n; ++i) {
      const double v = std::abs(a(i, j));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (!(best > tol)) {
      std::ostringstream msg;
      msg << "solve_hermitian: matrix is singular (pivot " << j << " has magnitude " << best
          << ", tolerance " << tol << ")";
      throw SingularityError(msg.str(), best);
    }
    if (p != j) {
      std::swap_ranges(a.row(j).begin(), a.row(j).end(), a.row(p).begin());
      std::swap_ranges(x.row(j).begin(), x.row(j).end(), x.row(p).begin());
    }
    const Complex pivot = a(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      const Complex f = a(i, j) / pivot;
      if (f == Complex{}) continue;
      for (std::size_t k = j + 1; k < n; ++k) a(i, k) -= f * a(j, k);
      for (std::size_t c = 0; c < m; ++c) x(i, c) -= f * x(j, c);
    }
  }
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t k = ii + 1; k < n; ++k) {
      const Complex aik = a(ii, k);
      for (std::size_t c = 0; c < m; ++c) x(ii, c) -= aik * x(k, c);
    }
    const Complex inv = 1.0 / a(ii, ii);
    for (std::size_t c = 0; c < m; ++c) x(ii, c) *= inv;
  }
  return x;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw ShapeError("ComplexMatrix: " + std::to_string(entries_.size()) +
                     " entries for shape " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  }
  for (const Complex& v : entries_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError("ComplexMatrix: non-finite entry");
    }
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  std::vector<Complex> entries;
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols) throw ShapeError("ComplexMatrix: ragged initializer");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  *this = ComplexMatrix(rows.size(), cols, std::move(entries));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1.0;
  return id;
}

ComplexMatrix hermitian(const ComplexMatrix& a) {
  ComplexMatrix h(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) h(c, r) = std::conj(a(r, c));
  }
  return h;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: inner dimensions differ (" + shape_string(a) + " * " +
                     shape_string(b) + ")");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out_row = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      const auto b_row = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x) {
  if (a.cols() != x.size()) {
    throw ShapeError("matvec: matrix " + shape_string(a) + " times vector of length " +
                     std::to_string(x.size()));
  }
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex s{};
    const auto r = a.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) s += r[k] * x[k];
    y[i] = s;
  }
  return y;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) += b(r, c);
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtract");
  ComplexMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) -= b(r, c);
  }
  return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) { return Complex(s, 0.0) * a; }

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (Complex& v : out.row(r)) v *= s;
  }
  return out;
}

ComplexMatrix solve_hermitian(const ComplexMatrix& a, const ComplexMatrix& b, double ridge) {
  if (!a.is_square()) throw ShapeError("solve_hermitian: A is " + shape_string(a));
  if (b.rows() != a.rows()) {
    throw ShapeError("solve_hermitian: A is " + shape_string(a) + " but B is " +
                     shape_string(b));
  }
  if (!(ridge >= 0.0) || !std::isfinite(ridge)) {
    throw ConfigError("solve_hermitian: ridge must be finite and non-negative");
  }
  const ComplexMatrix shifted = add_scaled_identity(a, ridge);
  const double scale = frobenius_norm(shifted);
  if (auto l = cholesky(a, ridge, kCholeskyPivotTolerance * scale)) {
    return cholesky_solve(*l, b);
  }
  return lu_solve(shifted, b, kLuPivotTolerance * scale);
}

Complex trace(const ComplexMatrix& a) {
  if (!a.is_square()) throw ShapeError("trace: matrix is " + shape_string(a));
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const Complex& v : a.entries()) s += std::norm(v);
  return std::sqrt(s);
}

std::vector<double> row_norms(const ComplexMatrix& a) {
  std::vector<double> norms(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    double s = 0.0;
    for (const Complex& v : a.row(r)) s += std::norm(v);
    norms[r] = std::sqrt(s);
  }
  return norms;
}

ComplexMatrix add_scaled_identity(const ComplexMatrix& a, double s) {
  if (!a.is_square()) throw ShapeError("add_scaled_identity: matrix is " + shape_string(a));
  ComplexMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) += s;
  return out;
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& a) {
  const ComplexMatrix ah = hermitian(a);
  if (a.rows() >= a.cols()) {
    // (A^H A)^{-1} A^H
    return solve_hermitian(matmul(ah, a), ah, 0.0);
  }
  // A^H (A A^H)^{-1} = ((A A^H)^{-1} A)^H since A A^H is Hermitian.
  return hermitian(solve_hermitian(matmul(a, ah), a, 0.0));
}

ComplexMatrix hstack(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows()) {
    throw ShapeError("hstack: " + shape_string(a) + " and " + shape_string(b));
  }
  ComplexMatrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto dst = out.row(r);
    std::copy(a.row(r).begin(), a.row(r).end(), dst.begin());
    std::copy(b.row(r).begin(), b.row(r).end(), dst.begin() + a.cols());
  }
  return out;
}

ComplexMatrix vstack(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.cols()) {
    throw ShapeError("vstack: " + shape_string(a) + " and " + shape_string(b));
  }
  std::vector<Complex> entries(a.entries().begin(), a.entries().end());
  entries.insert(entries.end(), b.entries().begin(), b.entries().end());
  return ComplexMatrix(a.rows() + b.rows(), a.cols(), std::move(entries));
}

ComplexMatrix column_block(const ComplexMatrix& a, std::size_t first, std::size_t count) {
  if (first + count > a.cols()) {
    throw ShapeError("column_block: columns [" + std::to_string(first) + ", " +
                     std::to_string(first + count) + ") out of range for " +
                     shape_string(a));
  }
  ComplexMatrix out(a.rows(), count);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const auto src = a.row(r).subspan(first, count);
    std::copy(src.begin(), src.end(), out.row(r).begin());
  }
  return out;
}

}  // namespace ulp
