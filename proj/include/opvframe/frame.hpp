#ifndef OPVFRAME_FRAME_HPP
#define OPVFRAME_FRAME_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "opvframe/complex_matrix.hpp"

namespace opv {

inline constexpr double kFrameTol = 1e-9;

// An ordered family of operator blocks V_j : C^n -> C^{l_j}, stored as
// l_j x n matrices over a common domain dimension n. The stacked codomain
// dimension is l = sum l_j.
class OpvFrame {
 public:
  OpvFrame(std::size_t n, std::vector<ComplexMatrix> blocks);

  std::size_t domain_dim() const { return n_; }           // n
  std::size_t block_count() const { return blocks_.size(); }  // m
  std::size_t codomain_dim() const { return l_; }         // l

  const ComplexMatrix& block(std::size_t j) const { return blocks_[j]; }
  const std::vector<ComplexMatrix>& blocks() const { return blocks_; }

  // Row offset of block j inside the stacked analysis operator.
  std::size_t block_offset(std::size_t j) const { return offsets_[j]; }
  std::vector<std::size_t> block_sizes() const;

 private:
  std::size_t n_;
  std::size_t l_;
  std::vector<ComplexMatrix> blocks_;
  std::vector<std::size_t> offsets_;
};

// Classification flags plus the quantities they were judged from. The flag
// lattice parseval => tight => frame => bessel and
// orthonormal => parseval & riesz holds for every report.
struct FrameReport {
  double lower_bound = 0.0;  // A = smallest eigenvalue of S
  double upper_bound = 0.0;  // B = largest eigenvalue of S
  bool is_bessel = false;
  bool is_frame = false;
  bool is_tight = false;
  bool is_parseval = false;
  bool is_riesz = false;
  bool is_orthonormal = false;
  bool is_equal_norm = false;
  std::vector<double> block_frobenius_norms;
  double trace_identity_residual = 0.0;  // |tr(G) - sum ||V_j||_F^2|
  double tol = 0.0;
};

// theta: the l x n vertical stack [V_1; V_2; ...; V_m].
ComplexMatrix analysis_operator(const OpvFrame& f);

// S = theta* theta = sum_j V_j* V_j, accumulated blockwise. Hermitian PSD.
ComplexMatrix frame_operator(const OpvFrame& f);

// G = theta theta*, the l x l Grammian.
ComplexMatrix grammian(const OpvFrame& f);

// (A, B) = (lambda_min, lambda_max) of the frame operator.
std::pair<double, double> frame_bounds(const OpvFrame& f,
                                       double tol = kFrameTol);

FrameReport classify(const OpvFrame& f, double tol = kFrameTol);

// True iff ||V_i V_j* - delta_ij I||_F <= tol for all pairs. Agrees with
// classify().is_orthonormal on every input.
bool cross_gram_orthonormality(const OpvFrame& f, double tol = kFrameTol);

}  // namespace opv

#endif
