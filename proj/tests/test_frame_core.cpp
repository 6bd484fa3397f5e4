#include "opvframe/frame.hpp"

#include <cmath>

#include <doctest.h>

#include "opvframe/constructions.hpp"
#include "opvframe/errors.hpp"
#include "opvframe/linalg.hpp"
#include "test_support.hpp"

using namespace opv;
using namespace opvtest;

namespace {

// Independent route to the frame operator: adjoint + naive products.
ComplexMatrix frame_operator_oracle(const OpvFrame& f) {
  ComplexMatrix s(f.domain_dim(), f.domain_dim());
  for (std::size_t j = 0; j < f.block_count(); ++j) {
    s = s + naive_mul(f.block(j).adjoint(), f.block(j));
  }
  return s;
}

OpvFrame two_singleton_rows() {
  ComplexMatrix b1(1, 2, {1.0, 0.0});
  ComplexMatrix b2(1, 2, {0.0, 1.0});
  return OpvFrame(2, {b1, b2});
}

}  // namespace

TEST_CASE("OpvFrame validates its shape") {
  CHECK_THROWS_AS(OpvFrame(2, {ComplexMatrix(1, 3)}), OpvError);
  CHECK_THROWS_AS(OpvFrame(0, {ComplexMatrix(1, 1)}), OpvError);
  const OpvFrame f = two_singleton_rows();
  CHECK(f.domain_dim() == 2);
  CHECK(f.block_count() == 2);
  CHECK(f.codomain_dim() == 2);
  CHECK(f.block_offset(1) == 1);
}

TEST_CASE("analysis_operator stacks blocks in order") {
  CHECK(bit_equal(analysis_operator(coordinate_frame(3)),
                  ComplexMatrix::identity(3)));

  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  CHECK(bit_equal(analysis_operator(OpvFrame(4, {i4})), i4));

  CHECK(bit_equal(analysis_operator(two_singleton_rows()),
                  ComplexMatrix::identity(2)));
}

TEST_CASE("frame_operator: cyclic projections sum to 2I") {
  const OpvFrame f = cyclic_projection_frame();
  const ComplexMatrix s = frame_operator(f);
  // Every coordinate is covered by exactly two projections.
  ComplexMatrix expected = ComplexMatrix::diagonal({2, 2, 2, 2, 2});
  CHECK(max_abs_diff(s, expected) == 0.0);
  CHECK(max_abs_diff(s, frame_operator_oracle(f)) < 1e-14);
}

TEST_CASE("frame_operator: Example 2 gives the identity") {
  CHECK(max_abs_diff(frame_operator(coordinate_frame(3)),
                     ComplexMatrix::identity(3)) == 0.0);
}

TEST_CASE("frame_operator scales quadratically in the blocks") {
  std::mt19937_64 rng(3);
  const OpvFrame f = random_frame(3, {2, 2}, rng);
  std::vector<ComplexMatrix> scaled;
  for (const auto& b : f.blocks()) scaled.push_back(2.0 * b);
  const OpvFrame g(3, std::move(scaled));
  CHECK(max_abs_diff(frame_operator(g), 4.0 * frame_operator(f)) < 1e-12);
}

TEST_CASE("frame_operator agrees with theta* theta on random frames") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<std::size_t> sizes(1 + rng() % 3);
    for (auto& s : sizes) s = 1 + rng() % 3;
    const OpvFrame f = random_frame(n, sizes, rng);
    const ComplexMatrix s = frame_operator(f);
    const ComplexMatrix theta = analysis_operator(f);
    const ComplexMatrix via_theta = naive_mul(theta.adjoint(), theta);
    CHECK((s - via_theta).frobenius_norm() <=
          1e-12 * (1.0 + s.frobenius_norm()));
  }
}

TEST_CASE("grammian: identity for Example 2, rank-n projection for Parseval") {
  CHECK(max_abs_diff(grammian(coordinate_frame(3)),
                     ComplexMatrix::identity(3)) == 0.0);

  const double s = 1.0 / std::sqrt(2.0);
  const OpvFrame f(1, {ComplexMatrix(2, 1, {s, s})});
  const ComplexMatrix g = grammian(f);
  CHECK(std::abs(g(0, 0).real() - 0.5) < 1e-15);
  CHECK(std::abs(g(0, 1).real() - 0.5) < 1e-15);
  CHECK(std::abs(g.trace().real() - 1.0) < 1e-15);

  // Parseval: G is a projection, nonzero spectrum is n ones.
  const OpvFrame p = random_parseval(3, {2, 2, 2}, 5);
  const EigenDecomposition eig = hermitian_eig(grammian(p));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(std::abs(eig.values[i] - 1.0) < 1e-10);
  }
  for (std::size_t i = 3; i < 6; ++i) {
    CHECK(std::abs(eig.values[i]) < 1e-10);
  }
}

TEST_CASE("frame_bounds on the worked examples") {
  const auto [a3, b3] = frame_bounds(cyclic_projection_frame());
  CHECK(a3 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(b3 == doctest::Approx(2.0).epsilon(1e-12));

  const auto [a2, b2] = frame_bounds(coordinate_frame(2));
  CHECK(a2 == doctest::Approx(1.0));
  CHECK(b2 == doctest::Approx(1.0));

  // Rank-deficient stack: not a frame.
  const OpvFrame bad(2, {ComplexMatrix(1, 2, {1.0, 0.0})});
  const auto [a, b] = frame_bounds(bad);
  CHECK(std::abs(a) < 1e-14);
  CHECK(b == doctest::Approx(1.0));
  CHECK_FALSE(classify(bad).is_frame);
}

TEST_CASE("classify: Example 2 is orthonormal and equal-norm") {
  const FrameReport rep = classify(coordinate_frame(3));
  CHECK(rep.is_bessel);
  CHECK(rep.is_frame);
  CHECK(rep.is_tight);
  CHECK(rep.is_parseval);
  CHECK(rep.is_riesz);
  CHECK(rep.is_orthonormal);
  CHECK(rep.is_equal_norm);
  for (double norm : rep.block_frobenius_norms) CHECK(norm == 1.0);
  CHECK(rep.trace_identity_residual < 1e-12);
}

TEST_CASE("classify: Example 1 desk instance is Parseval but not orthonormal") {
  const FrameReport rep = classify(roots_of_unity_frame(2, {2, 2}));
  CHECK(rep.is_parseval);
  CHECK(rep.is_equal_norm);
  CHECK_FALSE(rep.is_riesz);
  CHECK_FALSE(rep.is_orthonormal);
  for (double norm : rep.block_frobenius_norms) {
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("classify: diagonal example with distinct bounds") {
  ComplexMatrix b1(1, 2, {2.0, 0.0});
  ComplexMatrix b2(1, 2, {0.0, 1.0});
  const FrameReport rep = classify(OpvFrame(2, {b1, b2}));
  CHECK(rep.is_frame);
  CHECK_FALSE(rep.is_tight);
  CHECK(rep.lower_bound == doctest::Approx(1.0));
  CHECK(rep.upper_bound == doctest::Approx(4.0));
}

TEST_CASE("classify: flag lattice holds across random inputs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<std::size_t> sizes(1 + rng() % 3);
    std::size_t l = 0;
    for (auto& s : sizes) {
      s = 1 + rng() % 3;
      l += s;
    }
    const OpvFrame f = (trial % 3 == 0 && l >= n)
                           ? random_parseval(n, sizes, rng())
                           : random_frame(n, sizes, rng);
    const FrameReport rep = classify(f);
    CHECK(rep.lower_bound <= rep.upper_bound + 1e-12);
    if (rep.is_parseval) CHECK(rep.is_tight);
    if (rep.is_tight) CHECK(rep.is_frame);
    if (rep.is_frame) CHECK(rep.is_bessel);
    if (rep.is_orthonormal) {
      CHECK(rep.is_parseval);
      CHECK(rep.is_riesz);
    }
  }
}

TEST_CASE("cross_gram_orthonormality on the worked examples") {
  CHECK(cross_gram_orthonormality(coordinate_frame(3)));
  CHECK_FALSE(cross_gram_orthonormality(roots_of_unity_frame(2, {2, 2})));
  // l != n can never pass.
  CHECK_FALSE(cross_gram_orthonormality(random_parseval(2, {2, 2}, 1)));
  // Co-isometry blocks satisfy the delta identities but are not a frame.
  CHECK_FALSE(cross_gram_orthonormality(OpvFrame(2, {ComplexMatrix(1, 2, {1.0, 0.0})})));
}

TEST_CASE("cross_gram_orthonormality agrees with classify everywhere") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 110; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<std::size_t> sizes(1 + rng() % 3);
    std::size_t l = 0;
    for (auto& s : sizes) {
      s = 1 + rng() % 3;
      l += s;
    }
    OpvFrame f = (trial % 2 == 0 && l >= n) ? random_parseval(n, sizes, rng())
                                            : random_frame(n, sizes, rng);
    if (trial % 5 == 0) {
      // Orthonormal instances: square Haar slices.
      f = random_parseval(l, sizes, rng());
    }
    CHECK(cross_gram_orthonormality(f) == classify(f).is_orthonormal);
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("trace identities across the generator suite") {
  std::vector<OpvFrame> suite;
  suite.push_back(coordinate_frame(4));
  suite.push_back(cyclic_projection_frame());
  suite.push_back(roots_of_unity_frame(2, {2, 2}));
  suite.push_back(roots_of_unity_frame(3, {3, 3, 3}));
  suite.push_back(random_parseval(3, {2, 2, 2}, 9));
  std::mt19937_64 rng(77);
  suite.push_back(random_frame(3, {2, 3}, rng));

  for (const OpvFrame& f : suite) {
    const FrameReport rep = classify(f);
    double norm_sq = 0.0;
    for (double x : rep.block_frobenius_norms) norm_sq += x * x;

    const ComplexMatrix g = grammian(f);
    const double tr_g = g.trace().real();
    double eig_sum = 0.0;
    for (double v : hermitian_eig(g).values) eig_sum += v;

    const double scale = std::max(1.0, std::abs(tr_g));
    CHECK(std::abs(tr_g - norm_sq) <= 1e-9 * scale);
    CHECK(std::abs(eig_sum - norm_sq) <= 1e-9 * scale);

    if (rep.is_tight) {
      const double n_a = static_cast<double>(f.domain_dim()) * rep.lower_bound;
      CHECK(std::abs(n_a - norm_sq) <= 1e-9 * std::max(1.0, norm_sq));
      if (rep.is_equal_norm) {
        const double c = rep.block_frobenius_norms.front();
        const double predicted = static_cast<double>(f.block_count()) /
                                 static_cast<double>(f.domain_dim()) * c * c;
        CHECK(std::abs(rep.lower_bound - predicted) <=
              1e-9 * std::max(1.0, predicted));
      }
    }

    // Equal-norm Parseval with c = sqrt(l/m) forces l = n and orthonormal.
    if (rep.is_parseval && rep.is_equal_norm) {
      const double c = rep.block_frobenius_norms.front();
      const double special = std::sqrt(static_cast<double>(f.codomain_dim()) /
                                       static_cast<double>(f.block_count()));
      if (std::abs(c - special) <= 1e-9) {
        CHECK(f.codomain_dim() == f.domain_dim());
        CHECK(rep.is_orthonormal);
      }
    }
  }
}
