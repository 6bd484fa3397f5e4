#include "opvframe/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "opvframe/errors.hpp"
#include "opvframe/linalg.hpp"

namespace opv {

namespace {

// Block Frobenius norm: row-major pairwise accumulation of |v|^2.
double block_norm(const ComplexMatrix& b) { return b.frobenius_norm(); }

// Number of singular values of V above tol * largest, from the spectrum of
// V V* (its eigenvalues are the squared singular values).
std::size_t numerical_rank(const ComplexMatrix& v, double tol) {
  const EigenDecomposition eig = hermitian_eig(v.outer_gram());
  const double smax = std::sqrt(std::max(eig.values.front(), 0.0));
  if (smax == 0.0) return 0;
  std::size_t rank = 0;
  for (double lam : eig.values) {
    if (std::sqrt(std::max(lam, 0.0)) > tol * smax) ++rank;
  }
  return rank;
}

}  // namespace

OpvFrame::OpvFrame(std::size_t n, std::vector<ComplexMatrix> blocks)
    : n_(n), l_(0), blocks_(std::move(blocks)) {
  if (n_ == 0) fail(Errc::InvalidDimension, "domain dimension must be >= 1");
  if (blocks_.empty()) fail(Errc::ShapeMismatch, "a frame needs at least one block");
  offsets_.reserve(blocks_.size());
  for (const ComplexMatrix& b : blocks_) {
    if (b.cols() != n_) {
      fail(Errc::ShapeMismatch,
           "block has " + std::to_string(b.cols()) + " columns, expected " +
               std::to_string(n_));
    }
    offsets_.push_back(l_);
    l_ += b.rows();
  }
}

std::vector<std::size_t> OpvFrame::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks_.size());
  for (const ComplexMatrix& b : blocks_) sizes.push_back(b.rows());
  return sizes;
}

ComplexMatrix analysis_operator(const OpvFrame& f) {
  ComplexMatrix theta(f.codomain_dim(), f.domain_dim());
  for (std::size_t j = 0; j < f.block_count(); ++j) {
    theta.set_block(f.block_offset(j), 0, f.block(j));
  }
  return theta;
}

ComplexMatrix frame_operator(const OpvFrame& f) {
  ComplexMatrix s = f.block(0).gram();
  for (std::size_t j = 1; j < f.block_count(); ++j) {
    s = s + f.block(j).gram();
  }
  return s;
}

ComplexMatrix grammian(const OpvFrame& f) {
  return analysis_operator(f).outer_gram();
}

std::pair<double, double> frame_bounds(const OpvFrame& f, double /*tol*/) {
  const EigenDecomposition eig = hermitian_eig(frame_operator(f));
  return {eig.values.back(), eig.values.front()};
}

FrameReport classify(const OpvFrame& f, double tol) {
  const std::size_t n = f.domain_dim();
  const std::size_t l = f.codomain_dim();
  const std::size_t m = f.block_count();

  FrameReport rep;
  rep.tol = tol;

  const ComplexMatrix s = frame_operator(f);
  const EigenDecomposition eig = hermitian_eig(s);
  rep.lower_bound = eig.values.back();
  rep.upper_bound = eig.values.front();
  const double a = rep.lower_bound;
  const double b = rep.upper_bound;

  rep.is_bessel = true;  // finite dimension: B is always finite
  rep.is_frame = a > tol * std::max(b, 1.0);
  rep.is_tight = rep.is_frame && (b - a) <= tol * std::max(b, 1.0);
  rep.is_parseval = distance_to_identity(s) <= tol * std::sqrt(double(n));

  bool blocks_full_row_rank = true;
  for (std::size_t j = 0; j < m; ++j) {
    if (numerical_rank(f.block(j), tol) != f.block(j).rows()) {
      blocks_full_row_rank = false;
      break;
    }
  }
  rep.is_riesz = (l == n) && (a > tol * b) && blocks_full_row_rank;
  rep.is_orthonormal = rep.is_parseval && rep.is_riesz;
  // Boundary cases could otherwise break the flag lattice.
  rep.is_tight = rep.is_tight || rep.is_parseval;
  rep.is_frame = rep.is_frame || rep.is_tight;

  rep.block_frobenius_norms.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    rep.block_frobenius_norms.push_back(block_norm(f.block(j)));
  }
  double mean = 0.0;
  for (double x : rep.block_frobenius_norms) mean += x;
  mean /= static_cast<double>(m);
  double max_dev = 0.0;
  for (double x : rep.block_frobenius_norms) {
    max_dev = std::max(max_dev, std::abs(x - mean));
  }
  rep.is_equal_norm = max_dev <= tol * (1.0 + mean);

  double norm_sq_sum = 0.0;
  for (double x : rep.block_frobenius_norms) norm_sq_sum += x * x;
  rep.trace_identity_residual =
      std::abs(grammian(f).trace().real() - norm_sq_sum);
  return rep;
}

bool cross_gram_orthonormality(const OpvFrame& f, double tol) {
  const std::size_t m = f.block_count();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const ComplexMatrix prod = f.block(i) * f.block(j).adjoint();
      double dist;
      if (i == j) {
        dist = distance_to_identity(prod);
      } else {
        dist = prod.frobenius_norm();
      }
      if (dist > tol) return false;
    }
  }
  // The delta identities alone admit co-isometries when l < n; the
  // orthonormality criterion is Parseval together with them.
  const double root_n = std::sqrt(double(f.domain_dim()));
  return distance_to_identity(frame_operator(f)) <= tol * root_n;
}

}  // namespace opv
