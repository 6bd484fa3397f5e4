#ifndef OPVFRAME_DUALS_HPP
#define OPVFRAME_DUALS_HPP

#include <optional>

#include "opvframe/frame.hpp"

namespace opv {

// A frame together with a dual family {W_j}, sum_j W_j* V_j = I. The
// residual records ||theta_W* theta_V - I||_F at construction.
struct DualPair {
  OpvFrame frame;
  OpvFrame dual;
  double residual = 0.0;
};

struct Similarity {
  ComplexMatrix transform;  // T with G_j = F_j T
  bool unitary = false;     // ||T*T - I||_F <= tol
};

// {V_j S^{-1/2}}: the canonical Parseval frame. Orthonormal when the input
// is Riesz. Throws NotAFrame.
OpvFrame canonical_parseval(const OpvFrame& f, double tol = kFrameTol);

// Appends l_j x (l-n) columns to each block of a Parseval frame so the
// stacked operator becomes an l x l unitary; the original columns are kept
// bit-for-bit. Throws NotParseval.
OpvFrame dilate(const OpvFrame& f, double tol = kFrameTol);

// {V_j P} for a Hermitian idempotent P: a frame for range(P). Throws
// NotAProjection.
OpvFrame compress_by_projection(const OpvFrame& f, const ComplexMatrix& p,
                                double tol = kFrameTol);

// theta^dagger = (theta S^{-1})* = S^{-1} theta*, the pseudo-inverse of the
// analysis operator.
ComplexMatrix analysis_pseudo_inverse(const OpvFrame& f,
                                      double tol = kFrameTol);

// Canonical dual {V_j S^{-1}}. Verifies theta^dagger theta = I within
// 10 * tol. Throws NotAFrame.
DualPair canonical_dual(const OpvFrame& f, double tol = kFrameTol);

// For a Parseval frame with l >= 2n, builds the tight dual {V_j + W_j}
// where theta_W is c times a deterministic isometry into range(theta_V)'s
// orthogonal complement. The dual is tight with bound 1 + c^2; distinct c
// give distinct duals. Throws NotParseval or InsufficientCodomain (l < 2n).
DualPair tight_dual(const OpvFrame& f, double c, double tol = kFrameTol);

// True iff candidate is Parseval and dual to f; in that case the candidate
// must equal f blockwise within 10 * tol, otherwise TheoremViolation is
// raised (a tolerance fault, not a math fault).
bool parseval_dual_is_unique(const OpvFrame& f, const OpvFrame& candidate,
                             double tol = kFrameTol);

// Least-squares transporter T = S_F^{-1} theta_F* theta_G with the
// convention G_j = F_j T. Returns nullopt when the blocks do not match
// within tol * (1 + ||T||_F). Throws SignatureMismatch when (n, m, l_j)
// differ, NotAFrame, or IllConditioned when cond(S_F) exceeds 1e12.
std::optional<Similarity> similarity_transform(const OpvFrame& f,
                                               const OpvFrame& g,
                                               double tol = kFrameTol);

}  // namespace opv

#endif
