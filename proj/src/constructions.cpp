#include "opvframe/constructions.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "opvframe/errors.hpp"
#include "opvframe/linalg.hpp"

namespace opv {

namespace {

std::size_t total_rows(const std::vector<std::size_t>& block_sizes) {
  if (block_sizes.empty()) {
    fail(Errc::ShapeMismatch, "at least one block size is required");
  }
  std::size_t l = 0;
  for (std::size_t s : block_sizes) {
    if (s == 0) fail(Errc::InvalidDimension, "block sizes must be >= 1");
    l += s;
  }
  return l;
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

}  // namespace

OpvFrame roots_of_unity_frame(std::size_t n,
                              const std::vector<std::size_t>& block_sizes) {
  const std::size_t l = total_rows(block_sizes);
  if (n == 0) fail(Errc::InvalidDimension, "n must be >= 1");
  if (l < n) {
    fail(Errc::InsufficientRows,
         "need l >= n for column orthogonality (l=" + std::to_string(l) +
             ", n=" + std::to_string(n) + ")");
  }

  // Row i carries (c_1^i, ..., c_n^i) / sqrt(l) with c_k the (k-1)-th of
  // the l-th roots of unity; rows are numbered consecutively across blocks.
  const double scale = 1.0 / std::sqrt(static_cast<double>(l));
  ComplexMatrix theta(l, n);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>((i * k) % l) /
                           static_cast<double>(l);
      theta(i, k) = scale * Complex(std::cos(angle), std::sin(angle));
    }
  }
  return slice_rows(theta, block_sizes);
}

OpvFrame coordinate_frame(std::size_t n) {
  if (n == 0) fail(Errc::InvalidDimension, "n must be >= 1");
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix row(1, n);
    row(0, j) = 1.0;
    blocks.push_back(std::move(row));
  }
  return OpvFrame(n, std::move(blocks));
}

OpvFrame cyclic_projection_frame() {
  constexpr std::size_t n = 5;
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    ComplexMatrix b(2, n);
    b(0, j) = 1.0;
    b(1, (j + 1) % n) = 1.0;
    blocks.push_back(std::move(b));
  }
  return OpvFrame(n, std::move(blocks));
}

OpvFrame random_parseval(std::size_t n,
                         const std::vector<std::size_t>& block_sizes,
                         std::uint64_t seed) {
  const std::size_t l = total_rows(block_sizes);
  if (n == 0) fail(Errc::InvalidDimension, "n must be >= 1");
  if (l < n) {
    fail(Errc::InsufficientRows, "need l >= n for a Parseval frame");
  }
  const ComplexMatrix u = haar_random_unitary(l, seed);
  return slice_rows(u.block(0, 0, l, n), block_sizes);
}

OpvFrame construct_with_frame_operator(const ConstructionSpec& spec,
                                       double tol) {
  const std::size_t m = spec.block_sizes.size();
  const std::size_t l = total_rows(spec.block_sizes);
  const std::size_t n = spec.n;
  if (n == 0) fail(Errc::InvalidDimension, "n must be >= 1");
  if (spec.alphas.size() != m) {
    fail(Errc::LengthMismatch, "need one alpha per block");
  }
  for (double a : spec.alphas) {
    if (a < 0.0) fail(Errc::Infeasible, "alphas must be non-negative");
  }
  if (l < n) {
    fail(Errc::InsufficientRows, "need l >= n to carry an n-dim spectrum");
  }

  const ComplexMatrix s =
      spec.spectrum ? *spec.spectrum : ComplexMatrix::identity(n);
  if (s.rows() != n || s.cols() != n) {
    fail(Errc::ShapeMismatch, "spectrum matrix must be n x n");
  }

  const EigenDecomposition eig = hermitian_eig(s, std::max(tol, kEigTol));
  double trace_s = 0.0;
  for (double lam : eig.values) trace_s += lam;
  double weighted = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    weighted += static_cast<double>(spec.block_sizes[j]) * spec.alphas[j];
  }
  if (std::abs(weighted - trace_s) > tol * (1.0 + std::abs(trace_s))) {
    fail(Errc::TraceMismatch,
         "sum l_j alpha_j = " + std::to_string(weighted) +
             " but tr(S) = " + std::to_string(trace_s));
  }

  // Padded spectrum and the repeated per-row targets, in block order.
  std::vector<double> padded(l, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    padded[k] = std::max(eig.values[k], 0.0);
    if (eig.values[k] < -tol * std::max(eig.values.front(), 1.0)) {
      fail(Errc::SingularOrIndefinite, "spectrum matrix is not PSD");
    }
  }
  std::vector<double> targets;
  targets.reserve(l);
  for (std::size_t j = 0; j < m; ++j) {
    targets.insert(targets.end(), spec.block_sizes[j], spec.alphas[j]);
  }

  const ComplexMatrix w = schur_horn_unitary(padded, targets, tol);

  // F = W D U* with D the l x n matrix carrying sqrt(lambda_k) on its
  // leading diagonal.
  ComplexMatrix d(l, n);
  for (std::size_t k = 0; k < n; ++k) d(k, k) = std::sqrt(padded[k]);
  const ComplexMatrix f = w * (d * eig.vectors.adjoint());
  return slice_rows(f, spec.block_sizes);
}

OpvFrame optimal_one_erasure_frame(std::size_t n,
                                   const std::vector<std::size_t>& block_sizes) {
  const std::size_t m = block_sizes.size();
  const std::size_t l = total_rows(block_sizes);
  if (n == 0) fail(Errc::InvalidDimension, "n must be >= 1");
  if (l < n) fail(Errc::InsufficientRows, "need l >= n");

  ConstructionSpec spec;
  spec.n = n;
  spec.block_sizes = block_sizes;
  spec.alphas.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    spec.alphas.push_back(static_cast<double>(n) /
                          (static_cast<double>(m) *
                           static_cast<double>(block_sizes[j])));
  }
  try {
    return construct_with_frame_operator(spec, kFrameTol);
  } catch (const MajorizationError& e) {
    fail(Errc::Infeasible,
         std::string("no equal-norm Parseval frame with these sizes: ") +
             e.what());
  }
}

}  // namespace opv
