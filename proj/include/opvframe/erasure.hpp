#ifndef OPVFRAME_ERASURE_HPP
#define OPVFRAME_ERASURE_HPP

#include <cstddef>
#include <vector>

#include "opvframe/frame.hpp"

namespace opv {

// Block indices in erasure reports and subsets are 1-based, matching the
// j = 1..m numbering of the blocks themselves.
struct ErasureReport {
  std::size_t k = 0;  // erasure count tested
  bool robust = false;
  std::vector<std::vector<std::size_t>> failing_subsets;
  // Size of the 1-erasure reconstruction error per block, ||V_j||_F^2;
  // d1 is their maximum.
  std::vector<double> per_block_error_norms;
  double d1 = 0.0;
  bool is_parseval_input = false;
  bool is_d1_optimal = false;
  double tol = 0.0;
};

struct RobustnessResult {
  bool robust = false;
  // Lexicographically ordered 1-based index subsets whose removal kills
  // the frame property.
  std::vector<std::vector<std::size_t>> failing_subsets;
};

struct ErasedErrorOperator {
  ComplexMatrix op;  // theta* D_i theta = V_i* V_i
  bool parseval_input = false;
};

// Exhaustively tests every subset I of k blocks: the survivors must still
// form a frame (lambda_min of the partial frame operator above
// tol * lambda_max(S)). Refuses when m > 24 or C(m,k) > 2e6 rather than
// sampling. Throws KTooLarge (k >= m) or SubsetLimitExceeded.
RobustnessResult robust_to_k(const OpvFrame& f, std::size_t k,
                             double tol = kFrameTol);

// Reconstruction-error operator for the loss of packet i (1-based). For a
// Parseval input x - theta* E_i theta x = (V_i* V_i) x; non-Parseval inputs
// are flagged, not rejected. Throws IndexOutOfRange.
ErasedErrorOperator erased_error_operator(const OpvFrame& f, std::size_t i,
                                          double tol = kFrameTol);

// d1 = max_j ||V_j||_F^2, the worst-case 1-erasure error measure; at least
// n/m for every Parseval frame. Throws NotParseval.
double d1(const OpvFrame& f, double tol = kFrameTol);

// Full 1-erasure report: per-block error norms, d1, and whether the frame
// attains the n/m optimum (equal-norm with ||V_j||_F = sqrt(n/m)). Throws
// NotParseval.
ErasureReport check_d1_optimal(const OpvFrame& f, double tol = kFrameTol);

}  // namespace opv

#endif
