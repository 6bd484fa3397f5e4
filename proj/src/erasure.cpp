#include "opvframe/erasure.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "opvframe/errors.hpp"
#include "opvframe/linalg.hpp"

namespace opv {

namespace {

constexpr std::size_t kMaxBlocks = 24;
constexpr double kMaxSubsets = 2e6;

double binomial(std::size_t m, std::size_t k) {
  double acc = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    acc *= static_cast<double>(m - i) / static_cast<double>(i + 1);
  }
  return acc;
}

// next k-combination of {0,...,m-1} in lexicographic order
bool next_subset(std::vector<std::size_t>& idx, std::size_t m) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] + (k - pos) < m) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

RobustnessResult robust_to_k(const OpvFrame& f, std::size_t k, double tol) {
  const std::size_t m = f.block_count();
  if (k >= m) {
    fail(Errc::KTooLarge, "cannot erase k=" + std::to_string(k) +
                              " of m=" + std::to_string(m) + " blocks");
  }
  if (m > kMaxBlocks || binomial(m, k) > kMaxSubsets) {
    fail(Errc::SubsetLimitExceeded,
         "subset enumeration over C(" + std::to_string(m) + "," +
             std::to_string(k) + ") refused");
  }

  // "Still a frame" is judged on the original scale.
  const double lmax_full = frame_bounds(f, tol).second;
  const double threshold = tol * std::max(lmax_full, 1.0);

  std::vector<ComplexMatrix> grams;
  grams.reserve(m);
  for (std::size_t j = 0; j < m; ++j) grams.push_back(f.block(j).gram());

  RobustnessResult result;
  result.robust = true;

  std::vector<std::size_t> erased(k);
  for (std::size_t i = 0; i < k; ++i) erased[i] = i;
  bool more = true;
  while (more) {
    ComplexMatrix partial(f.domain_dim(), f.domain_dim());
    std::size_t e = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (e < erased.size() && erased[e] == j) {
        ++e;
        continue;
      }
      partial = partial + grams[j];
    }
    const double lmin = hermitian_eig(partial).values.back();
    if (!(lmin > threshold)) {
      result.robust = false;
      std::vector<std::size_t> subset(erased);
      for (std::size_t& idx : subset) ++idx;  // report 1-based
      result.failing_subsets.push_back(std::move(subset));
    }
    more = !erased.empty() && next_subset(erased, m);
  }
  return result;
}

ErasedErrorOperator erased_error_operator(const OpvFrame& f, std::size_t i,
                                          double tol) {
  if (i < 1 || i > f.block_count()) {
    fail(Errc::IndexOutOfRange,
         "block index " + std::to_string(i) + " outside 1.." +
             std::to_string(f.block_count()));
  }
  ErasedErrorOperator out{f.block(i - 1).gram(),
                          classify(f, tol).is_parseval};
  return out;
}

double d1(const OpvFrame& f, double tol) {
  if (!classify(f, tol).is_parseval) {
    fail(Errc::NotParseval, "d1 is defined for Parseval frames only");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < f.block_count(); ++j) {
    const double nf = f.block(j).frobenius_norm();
    worst = std::max(worst, nf * nf);
  }
  return worst;
}

ErasureReport check_d1_optimal(const OpvFrame& f, double tol) {
  const FrameReport rep = classify(f, tol);
  if (!rep.is_parseval) {
    fail(Errc::NotParseval, "d1 optimality is defined for Parseval frames");
  }
  const std::size_t m = f.block_count();
  const double ratio =
      static_cast<double>(f.domain_dim()) / static_cast<double>(m);

  ErasureReport report;
  report.k = 1;
  report.tol = tol;
  report.is_parseval_input = true;

  if (m > 1) {
    RobustnessResult rob = robust_to_k(f, 1, tol);
    report.robust = rob.robust;
    report.failing_subsets = std::move(rob.failing_subsets);
  } else {
    // Losing the only packet always kills the frame.
    report.robust = false;
    report.failing_subsets = {{1}};
  }

  report.per_block_error_norms.reserve(m);
  double worst = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double nf = f.block(j).frobenius_norm();
    report.per_block_error_norms.push_back(nf * nf);
    worst = std::max(worst, nf * nf);
  }
  report.d1 = worst;
  report.is_d1_optimal =
      rep.is_equal_norm && std::abs(worst - ratio) <= tol * (1.0 + ratio);
  return report;
}

}  // namespace opv
