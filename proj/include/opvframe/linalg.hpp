#ifndef OPVFRAME_LINALG_HPP
#define OPVFRAME_LINALG_HPP

#include <cstdint>
#include <vector>

#include "opvframe/complex_matrix.hpp"

namespace opv {

inline constexpr double kEigTol = 1e-12;
inline constexpr double kSchurHornTol = 1e-10;

// Spectral factorization A = V diag(values) V* of a Hermitian matrix.
struct EigenDecomposition {
  std::vector<double> values;  // real, sorted non-increasing
  ComplexMatrix vectors;       // unitary, columns are eigenvectors
};

// Cyclic-by-row complex Jacobi iteration on the symmetrized input
// (A + A*)/2. Converges when the off-diagonal Frobenius mass drops below
// tol * ||A||_F; the sweep cap is 64. Deterministic for identical input
// bits. Throws NotSquare, NotHermitian (asymmetry beyond tol * ||A||_F)
// or NoConvergence.
EigenDecomposition hermitian_eig(const ComplexMatrix& a, double tol = kEigTol);

// Extends a column-orthogonal l x n matrix Q (||Q*Q - I||_F <= tol) to an
// l x l unitary whose first n columns are Q bit-for-bit. The complement
// columns come from the Householder factorization of Q. Throws NotIsometry
// or DegenerateComplement.
ComplexMatrix unitary_complete(const ComplexMatrix& q, double tol = 1e-9);

// S^{-1/2} of a Hermitian positive definite matrix via its spectral
// factorization. Requires lambda_min > tol * lambda_max, otherwise
// SingularOrIndefinite.
ComplexMatrix inv_sqrt_psd(const ComplexMatrix& s, double tol = 1e-9);

// Given lambda and targets of equal length m with (after sorting both
// descending) the partial sums of targets dominated by those of lambda and
// equal totals, returns a real-orthogonal O with
//   diag(O diag(lambda) O*) = targets   (entrywise within tol)
// built from at most m-1 Givens rotations composed with permutations.
// Throws LengthMismatch or MajorizationError (with the first violating
// prefix length; length m means the totals disagree).
ComplexMatrix schur_horn_unitary(const std::vector<double>& lambda,
                                 const std::vector<double>& targets,
                                 double tol = kSchurHornTol);

// Haar-distributed random unitary: i.i.d. complex Gaussian entries from a
// seeded generator, orthonormalized with the triangular factor's diagonal
// made real-positive. A pure function of (dim, seed); identical calls give
// bit-identical matrices.
ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace opv

#endif
