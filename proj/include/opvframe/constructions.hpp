#ifndef OPVFRAME_CONSTRUCTIONS_HPP
#define OPVFRAME_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "opvframe/frame.hpp"

namespace opv {

// Inputs for construct_with_frame_operator: the desired frame operator
// (identity when absent), the block row counts, and the per-row diagonal
// value alpha_j each block's V_j V_j* must attain.
struct ConstructionSpec {
  std::size_t n = 0;
  std::vector<std::size_t> block_sizes;
  std::vector<double> alphas;
  std::optional<ComplexMatrix> spectrum;  // Hermitian PSD n x n
};

// Equal-norm Parseval frame from the first n of the l-th roots of unity,
// c_k = exp(2*pi*i*(k-1)/l): row i carries (c_1^i, ..., c_n^i) / sqrt(l),
// rows numbered consecutively across blocks. ||V_j||_F^2 = n * l_j / l.
// Throws InsufficientRows when l < n.
OpvFrame roots_of_unity_frame(std::size_t n,
                              const std::vector<std::size_t>& block_sizes);

// n blocks, block j the coordinate row e_j*. Orthonormal with
// ||U_j||_F = 1.
OpvFrame coordinate_frame(std::size_t n);

// The fixed five-projection frame on C^5: block j spans coordinates
// {j, j+1 mod 5}. Frame operator 2I; robust to one erasure, not to two.
OpvFrame cyclic_projection_frame();

// First n columns of haar_random_unitary(l, seed), sliced by block_sizes.
// Parseval; deterministic per seed. Throws InsufficientRows.
OpvFrame random_parseval(std::size_t n,
                         const std::vector<std::size_t>& block_sizes,
                         std::uint64_t seed);

// Builds {V_j} with sum_j V_j* V_j = S and diag(V_j V_j*) = (alpha_j, ...,
// alpha_j), hence ||V_j||_F^2 = l_j * alpha_j. Pipeline: factor S = U L U*,
// place sqrt(lambda_k) on the leading diagonal of an l x n matrix D, pick W
// from schur_horn_unitary over the zero-padded spectrum and the repeated
// alphas, and slice F = W D U* into blocks. Requires sum_j l_j alpha_j =
// tr(S) and the repeated-alpha sequence majorized by the padded spectrum.
// Throws MajorizationError, TraceMismatch, or eigensolver errors.
OpvFrame construct_with_frame_operator(const ConstructionSpec& spec,
                                       double tol = kFrameTol);

// The d1-optimal frames: construct_with_frame_operator with S = I and
// alpha_j = n / (m * l_j), giving a Parseval frame with
// ||V_j||_F = sqrt(n/m) for every j. Throws Infeasible when the
// majorization cannot hold (some alpha_j > 1).
OpvFrame optimal_one_erasure_frame(std::size_t n,
                                   const std::vector<std::size_t>& block_sizes);

}  // namespace opv

#endif
