// Shared helpers for the test suites: seeded generators and small
// independent oracles (naive multiplication, brute-force checks) kept apart
// from the library code paths they validate.
#ifndef OPVFRAME_TEST_SUPPORT_HPP
#define OPVFRAME_TEST_SUPPORT_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "opvframe/complex_matrix.hpp"
#include "opvframe/frame.hpp"

namespace opvtest {

using opv::Complex;
using opv::ComplexMatrix;
using opv::OpvFrame;

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double gaussian(std::mt19937_64& rng) {
  const double u = uniform01(rng);
  const double v = uniform01(rng);
  return std::sqrt(-2.0 * std::log1p(-u)) *
         std::cos(2.0 * std::numbers::pi * v);
}

inline Complex complex_gaussian(std::mt19937_64& rng) {
  return Complex(gaussian(rng), gaussian(rng));
}

// Plain i-j-k triple loop, deliberately independent of the library's
// multiplication kernel.
inline ComplexMatrix naive_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
  }
  return worst;
}

inline bool bit_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).real() != b(i, j).real()) return false;
      if (a(i, j).imag() != b(i, j).imag()) return false;
    }
  }
  return true;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = gaussian(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z = complex_gaussian(rng);
      a(i, j) = z;
      a(j, i) = std::conj(z);
    }
  }
  return a;
}

// Gaussian blocks; generically a frame when l >= n.
inline OpvFrame random_frame(std::size_t n,
                             const std::vector<std::size_t>& sizes,
                             std::mt19937_64& rng) {
  std::vector<ComplexMatrix> blocks;
  blocks.reserve(sizes.size());
  for (std::size_t rows : sizes) {
    ComplexMatrix b(rows, n);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < n; ++c) b(r, c) = complex_gaussian(rng);
    }
    blocks.push_back(std::move(b));
  }
  return OpvFrame(n, std::move(blocks));
}

// A vector majorized by `spectrum`: a convex combination of random
// permutations of it (doubly stochastic mixing can only flatten).
inline std::vector<double> random_majorized(const std::vector<double>& spectrum,
                                            std::mt19937_64& rng,
                                            std::size_t mixes = 4) {
  std::vector<double> out(spectrum.size(), 0.0);
  std::vector<double> perm = spectrum;
  for (std::size_t t = 0; t < mixes; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += perm[i] / static_cast<double>(mixes);
    }
  }
  return out;
}

}  // namespace opvtest

#endif
