#include "opvframe/complex_matrix.hpp"

#include <cmath>
#include <utility>

#include "opvframe/errors.hpp"

namespace opv {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    fail(Errc::InvalidDimension, "matrix dimensions must be at least 1x1");
  }
}

double pairwise_sum_range(const double* xs, std::size_t count) {
  if (count <= 8) {
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) acc += xs[i];
    return acc;
  }
  std::size_t half = count / 2;
  return pairwise_sum_range(xs, half) + pairwise_sum_range(xs + half, count - half);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {
  check_dims(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_dims(rows, cols);
  if (entries_.size() != rows_ * cols_) {
    fail(Errc::ShapeMismatch, "entry count does not match rows*cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

double ComplexMatrix::frobenius_norm() const {
  std::vector<double> sq;
  sq.reserve(entries_.size());
  for (const Complex& z : entries_) {
    sq.push_back(z.real() * z.real() + z.imag() * z.imag());
  }
  return std::sqrt(pairwise_sum(sq));
}

Complex ComplexMatrix::trace() const {
  if (rows_ != cols_) fail(Errc::NotSquare, "trace of a non-square matrix");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) acc += (*this)(i, i);
  return acc;
}

ComplexMatrix ComplexMatrix::block(std::size_t row0, std::size_t col0,
                                   std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    fail(Errc::ShapeMismatch, "block extends past the matrix edge");
  }
  ComplexMatrix out(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    for (std::size_t c = 0; c < ncols; ++c) {
      out(r, c) = (*this)(row0 + r, col0 + c);
    }
  }
  return out;
}

void ComplexMatrix::set_block(std::size_t row0, std::size_t col0,
                              const ComplexMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) {
    fail(Errc::ShapeMismatch, "block extends past the matrix edge");
  }
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      (*this)(row0 + r, col0 + c) = b(r, c);
    }
  }
}

ComplexMatrix ComplexMatrix::gram() const {
  ComplexMatrix out(cols_, cols_);
  for (std::size_t i = 0; i < cols_; ++i) {
    double diag = 0.0;
    for (std::size_t k = 0; k < rows_; ++k) {
      const Complex& z = (*this)(k, i);
      diag += z.real() * z.real() + z.imag() * z.imag();
    }
    out(i, i) = diag;
    for (std::size_t j = i + 1; j < cols_; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < rows_; ++k) {
        acc += std::conj((*this)(k, i)) * (*this)(k, j);
      }
      out(i, j) = acc;
      out(j, i) = std::conj(acc);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::outer_gram() const {
  ComplexMatrix out(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    double diag = 0.0;
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex& z = (*this)(i, k);
      diag += z.real() * z.real() + z.imag() * z.imag();
    }
    out(i, i) = diag;
    for (std::size_t j = i + 1; j < rows_; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < cols_; ++k) {
        acc += (*this)(i, k) * std::conj((*this)(j, k));
      }
      out(i, j) = acc;
      out(j, i) = std::conj(acc);
    }
  }
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    fail(Errc::ShapeMismatch, "inner dimensions do not match");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
  }
  return out;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
  return Complex(s, 0.0) * a;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) fail(Errc::ShapeMismatch, "shapes differ in +");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  }
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) fail(Errc::ShapeMismatch, "shapes differ in -");
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

double distance_to_identity(const ComplexMatrix& a) {
  std::vector<double> sq;
  sq.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Complex d = a(i, j);
      if (i == j) d -= 1.0;
      sq.push_back(d.real() * d.real() + d.imag() * d.imag());
    }
  }
  return std::sqrt(pairwise_sum(sq));
}

double pairwise_sum(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return pairwise_sum_range(xs.data(), xs.size());
}

}  // namespace opv
