#ifndef OPVFRAME_COMPLEX_MATRIX_HPP
#define OPVFRAME_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace opv {

using Complex = std::complex<double>;

// Dense row-major complex matrix. The single carrier type for frame blocks,
// analysis operators, unitaries and Hermitian operators alike. Dimensions are
// fixed at construction; rows >= 1 and cols >= 1 always hold.
class ComplexMatrix {
 public:
  ComplexMatrix(std::size_t rows, std::size_t cols);  // zero-filled
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<double>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;  // conjugate transpose

  // Frobenius norm with pairwise accumulation of |a_ij|^2 in row-major
  // order, so repeated runs over the same bits agree exactly.
  double frobenius_norm() const;

  Complex trace() const;

  ComplexMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                      std::size_t ncols) const;
  void set_block(std::size_t row0, std::size_t col0, const ComplexMatrix& b);

  // A* A and A A*. Computed on the upper triangle and mirrored, so the
  // result is Hermitian bit-exactly and the diagonal carries zero imaginary
  // parts.
  ComplexMatrix gram() const;        // A* A, cols x cols
  ComplexMatrix outer_gram() const;  // A A*, rows x rows

  bool same_shape(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);

// || a - I ||_F without forming the difference.
double distance_to_identity(const ComplexMatrix& a);

// Pairwise (cascade) summation; deterministic for a fixed input order.
double pairwise_sum(const std::vector<double>& xs);

}  // namespace opv

#endif
