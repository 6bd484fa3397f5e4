#include "opvframe/duals.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "opvframe/errors.hpp"
#include "opvframe/linalg.hpp"

namespace opv {

namespace {

// S^{-1} for a Hermitian positive definite S: spectral inverse plus one
// Newton step X <- X (2I - S X), which squares the inversion residual and
// keeps the canonical-dual identity tight even near the conditioning guard.
ComplexMatrix inverse_psd(const ComplexMatrix& s, double tol) {
  const EigenDecomposition eig = hermitian_eig(s);
  const double lmax = eig.values.front();
  const double lmin = eig.values.back();
  if (!(lmin > tol * std::max(lmax, 1.0))) {
    fail(Errc::SingularOrIndefinite, "frame operator is numerically singular");
  }
  const std::size_t n = s.rows();
  ComplexMatrix ud(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double d = 1.0 / eig.values[j];
    for (std::size_t i = 0; i < n; ++i) ud(i, j) = eig.vectors(i, j) * d;
  }
  ComplexMatrix x = ud * eig.vectors.adjoint();
  ComplexMatrix two_i_minus_sx = s * x;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      two_i_minus_sx(i, j) = ((i == j) ? Complex(2.0, 0.0) : Complex(0.0, 0.0)) -
                             two_i_minus_sx(i, j);
    }
  }
  return x * two_i_minus_sx;
}

OpvFrame right_multiply_blocks(const OpvFrame& f, const ComplexMatrix& t) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(f.block_count());
  for (std::size_t j = 0; j < f.block_count(); ++j) {
    blocks.push_back(f.block(j) * t);
  }
  return OpvFrame(t.cols(), std::move(blocks));
}

OpvFrame slice_rows(const ComplexMatrix& stacked,
                    const std::vector<std::size_t>& sizes) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(sizes.size());
  std::size_t offset = 0;
  for (std::size_t rows : sizes) {
    blocks.push_back(stacked.block(offset, 0, rows, stacked.cols()));
    offset += rows;
  }
  return OpvFrame(stacked.cols(), std::move(blocks));
}

double duality_residual(const OpvFrame& dual, const OpvFrame& f) {
  return distance_to_identity(analysis_operator(dual).adjoint() *
                              analysis_operator(f));
}

void require_frame(const FrameReport& rep, const char* op) {
  if (!rep.is_frame) {
    fail(Errc::NotAFrame, std::string(op) + " needs a frame input");
  }
}

void require_parseval(const FrameReport& rep, const char* op) {
  if (!rep.is_parseval) {
    fail(Errc::NotParseval, std::string(op) + " needs a Parseval input");
  }
}

}  // namespace

OpvFrame canonical_parseval(const OpvFrame& f, double tol) {
  require_frame(classify(f, tol), "canonical_parseval");
  return right_multiply_blocks(f, inv_sqrt_psd(frame_operator(f), tol));
}

OpvFrame dilate(const OpvFrame& f, double tol) {
  require_parseval(classify(f, tol), "dilate");
  const std::size_t n = f.domain_dim();
  const std::size_t l = f.codomain_dim();
  if (l == n) return f;

  const ComplexMatrix theta = analysis_operator(f);
  const ComplexMatrix full = unitary_complete(theta, tol * std::sqrt(double(n)));
  return slice_rows(full, f.block_sizes());
}

OpvFrame compress_by_projection(const OpvFrame& f, const ComplexMatrix& p,
                                double tol) {
  const std::size_t n = f.domain_dim();
  if (p.rows() != n || p.cols() != n) {
    fail(Errc::NotAProjection, "projection must be n x n");
  }
  if ((p - p.adjoint()).frobenius_norm() > tol) {
    fail(Errc::NotAProjection, "||P - P*||_F exceeds tol");
  }
  if ((p * p - p).frobenius_norm() > tol) {
    fail(Errc::NotAProjection, "||P^2 - P||_F exceeds tol");
  }
  return right_multiply_blocks(f, p);
}

ComplexMatrix analysis_pseudo_inverse(const OpvFrame& f, double tol) {
  require_frame(classify(f, tol), "analysis_pseudo_inverse");
  return inverse_psd(frame_operator(f), tol) * analysis_operator(f).adjoint();
}

DualPair canonical_dual(const OpvFrame& f, double tol) {
  require_frame(classify(f, tol), "canonical_dual");
  const ComplexMatrix s_inv = inverse_psd(frame_operator(f), tol);
  OpvFrame dual = right_multiply_blocks(f, s_inv);
  const double residual = duality_residual(dual, f);
  if (residual > 10.0 * tol) {
    fail(Errc::IllConditioned,
         "pseudo-inverse check theta^dagger theta = I failed");
  }
  return DualPair{f, std::move(dual), residual};
}

DualPair tight_dual(const OpvFrame& f, double c, double tol) {
  require_parseval(classify(f, tol), "tight_dual");
  const std::size_t n = f.domain_dim();
  const std::size_t l = f.codomain_dim();
  if (l < 2 * n) {
    fail(Errc::InsufficientCodomain,
         "tight duals besides the frame itself need l >= 2n (l=" +
             std::to_string(l) + ", n=" + std::to_string(n) + ")");
  }
  if (c < 0.0) fail(Errc::InvalidDimension, "scale c must be non-negative");

  const ComplexMatrix theta = analysis_operator(f);
  const ComplexMatrix full = unitary_complete(theta, tol * std::sqrt(double(n)));
  // First n complement columns: a deterministic isometry into
  // range(theta)^perp.
  const ComplexMatrix w = full.block(0, n, l, n);

  ComplexMatrix theta_dual(l, n);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      theta_dual(i, j) = theta(i, j) + c * w(i, j);
    }
  }
  OpvFrame dual = slice_rows(theta_dual, f.block_sizes());
  const double residual = duality_residual(dual, f);

  const auto [la, lb] = frame_bounds(dual, tol);
  if (la < 1.0 - 10.0 * tol) {
    fail(Errc::TheoremViolation,
         "tight dual bound fell below 1; tolerance misconfiguration");
  }
  (void)lb;
  return DualPair{f, std::move(dual), residual};
}

bool parseval_dual_is_unique(const OpvFrame& f, const OpvFrame& candidate,
                             double tol) {
  require_parseval(classify(f, tol), "parseval_dual_is_unique");
  if (candidate.domain_dim() != f.domain_dim() ||
      candidate.block_sizes() != f.block_sizes()) {
    return false;
  }
  const bool cand_parseval = classify(candidate, tol).is_parseval;
  const double root_n = std::sqrt(double(f.domain_dim()));
  const bool cand_dual = duality_residual(candidate, f) <= tol * root_n;
  if (!cand_parseval || !cand_dual) return false;

  for (std::size_t j = 0; j < f.block_count(); ++j) {
    if ((candidate.block(j) - f.block(j)).frobenius_norm() > 10.0 * tol) {
      fail(Errc::TheoremViolation,
           "Parseval dual differs from the frame; tolerance misconfiguration");
    }
  }
  return true;
}

std::optional<Similarity> similarity_transform(const OpvFrame& f,
                                               const OpvFrame& g,
                                               double tol) {
  if (f.domain_dim() != g.domain_dim() ||
      f.block_sizes() != g.block_sizes()) {
    fail(Errc::SignatureMismatch, "frames must share (n, m, l_j)");
  }
  const FrameReport rep_f = classify(f, tol);
  require_frame(rep_f, "similarity_transform");
  require_frame(classify(g, tol), "similarity_transform");
  if (rep_f.lower_bound <= 0.0 ||
      rep_f.upper_bound / rep_f.lower_bound > 1e12) {
    fail(Errc::IllConditioned, "cond(S_F) exceeds 1e12");
  }

  // Normal equations: T = S_F^{-1} theta_F* theta_G.
  const ComplexMatrix s_inv = inverse_psd(frame_operator(f), tol);
  const ComplexMatrix t =
      s_inv * (analysis_operator(f).adjoint() * analysis_operator(g));

  const double t_norm = t.frobenius_norm();
  for (std::size_t j = 0; j < f.block_count(); ++j) {
    const double dev = (g.block(j) - f.block(j) * t).frobenius_norm();
    if (dev > tol * (1.0 + t_norm)) return std::nullopt;
  }
  const bool unitary = distance_to_identity(t.gram()) <= tol;
  return Similarity{t, unitary};
}

}  // namespace opv
