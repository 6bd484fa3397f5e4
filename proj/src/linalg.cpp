#include "opvframe/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "opvframe/errors.hpp"

namespace opv {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
  std::vector<double> sq;
  const std::size_t n = a.rows();
  sq.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Complex& z = a(i, j);
      sq.push_back(z.real() * z.real() + z.imag() * z.imag());
    }
  }
  return std::sqrt(pairwise_sum(sq));
}

// One complex Jacobi rotation zeroing a(p,q). Updates a (kept exactly
// Hermitian with a real diagonal) and accumulates the rotation into v.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p,
                   std::size_t q) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  if (b == 0.0) return;

  const Complex phase = apq / b;
  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();

  // tan(2*theta) = 2b / (alpha - gamma); smaller-magnitude root of
  // t^2 - 2*tau*t - 1 = 0 with tau = (alpha - gamma) / (2b).
  const double tau = (alpha - gamma) / (2.0 * b);
  const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const Complex ap = a(p, k);
    const Complex aq = a(q, k);
    a(p, k) = c * ap - s * phase * aq;
    a(q, k) = s * std::conj(phase) * ap + c * aq;
    a(k, p) = std::conj(a(p, k));
    a(k, q) = std::conj(a(q, k));
  }
  a(p, p) = c * c * alpha - 2.0 * c * s * b + s * s * gamma;
  a(q, q) = s * s * alpha + 2.0 * c * s * b + c * c * gamma;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  const std::size_t m = v.rows();
  for (std::size_t k = 0; k < m; ++k) {
    const Complex vp = v(k, p);
    const Complex vq = v(k, q);
    v(k, p) = c * vp - s * std::conj(phase) * vq;
    v(k, q) = s * phase * vp + c * vq;
  }
}

struct HouseholderSet {
  // Normalized reflector vectors; reflector k acts on rows k..l-1 as
  // H = I - 2 v v*.
  std::vector<std::vector<Complex>> vs;
  std::vector<Complex> r_diag;  // diagonal of the triangular factor
};

// In-place Householder elimination of the columns of a (l x n, l >= n).
// small_pivot, when positive, aborts with DegenerateComplement as soon as a
// pivot column's remaining norm falls below it.
HouseholderSet householder_qr(ComplexMatrix& a, double small_pivot) {
  const std::size_t l = a.rows();
  const std::size_t n = a.cols();
  HouseholderSet hs;
  hs.vs.reserve(n);
  hs.r_diag.reserve(n);

  for (std::size_t k = 0; k < n; ++k) {
    double norm_sq = 0.0;
    for (std::size_t i = k; i < l; ++i) {
      const Complex z = a(i, k);
      norm_sq += z.real() * z.real() + z.imag() * z.imag();
    }
    const double rho = std::sqrt(norm_sq);
    if (small_pivot > 0.0 && rho <= small_pivot) {
      fail(Errc::DegenerateComplement,
           "pivot " + std::to_string(k) + " collapsed during factorization");
    }

    std::vector<Complex> v(l - k, Complex(0.0, 0.0));
    Complex rkk(0.0, 0.0);
    if (rho > 0.0) {
      const Complex x0 = a(k, k);
      const double ax0 = std::abs(x0);
      const Complex ph = (ax0 > 0.0) ? x0 / ax0 : Complex(1.0, 0.0);
      const Complex alpha = ph * rho;
      for (std::size_t i = k; i < l; ++i) v[i - k] = a(i, k);
      v[0] += alpha;
      double vn_sq = 0.0;
      for (const Complex& z : v) {
        vn_sq += z.real() * z.real() + z.imag() * z.imag();
      }
      const double vn = std::sqrt(vn_sq);
      if (vn > 0.0) {
        for (Complex& z : v) z /= vn;
      }
      rkk = -alpha;
      // Reflect the remaining columns.
      for (std::size_t j = k; j < n; ++j) {
        Complex dot(0.0, 0.0);
        for (std::size_t i = k; i < l; ++i) {
          dot += std::conj(v[i - k]) * a(i, j);
        }
        dot *= 2.0;
        for (std::size_t i = k; i < l; ++i) a(i, j) -= dot * v[i - k];
      }
    }
    hs.vs.push_back(std::move(v));
    hs.r_diag.push_back(rkk);
  }
  return hs;
}

// Applies H_0 H_1 ... H_{n-1} to b (reflectors applied last-to-first).
void apply_reflectors(const HouseholderSet& hs, ComplexMatrix& b) {
  const std::size_t l = b.rows();
  for (std::size_t kk = hs.vs.size(); kk-- > 0;) {
    const std::vector<Complex>& v = hs.vs[kk];
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex dot(0.0, 0.0);
      for (std::size_t i = kk; i < l; ++i) {
        dot += std::conj(v[i - kk]) * b(i, j);
      }
      dot *= 2.0;
      for (std::size_t i = kk; i < l; ++i) b(i, j) -= dot * v[i - kk];
    }
  }
}

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw; keeps the
// stream independent of the standard library's distribution internals.
double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

EigenDecomposition eig_impl(const ComplexMatrix& a, double asym_tol,
                            double conv_tol) {
  const std::size_t n = a.rows();
  if (n != a.cols()) {
    fail(Errc::NotSquare, "eigendecomposition needs a square matrix");
  }

  const double scale = a.frobenius_norm();
  {
    std::vector<double> asym_sq;
    asym_sq.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Complex d = a(i, j) - std::conj(a(j, i));
        asym_sq.push_back(d.real() * d.real() + d.imag() * d.imag());
      }
    }
    if (std::sqrt(pairwise_sum(asym_sq)) > asym_tol * scale) {
      fail(Errc::NotHermitian, "asymmetry exceeds tol * ||A||_F");
    }
  }

  // Symmetrize; diagonal becomes exactly real, off-diagonal pairs exact
  // conjugates.
  ComplexMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      w(i, j) = avg;
      w(j, i) = std::conj(avg);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr int kMaxSweeps = 64;
  bool converged = offdiag_norm(w) <= conv_tol * scale;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        jacobi_rotate(w, v, p, q);
      }
    }
    converged = offdiag_norm(w) <= conv_tol * scale;
  }
  if (!converged) {
    fail(Errc::NoConvergence, "off-diagonal mass not below tol after 64 sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return w(i, i).real() > w(j, j).real();
  });

  EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = w(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  return out;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& a, double tol) {
  return eig_impl(a, tol, tol);
}

ComplexMatrix unitary_complete(const ComplexMatrix& q, double tol) {
  const std::size_t l = q.rows();
  const std::size_t n = q.cols();
  if (l < n) {
    fail(Errc::NotIsometry, "more columns than rows");
  }
  if (distance_to_identity(q.gram()) > tol) {
    fail(Errc::NotIsometry, "||Q*Q - I||_F exceeds tol");
  }
  if (l == n) return q;

  ComplexMatrix work = q;
  const HouseholderSet hs = householder_qr(work, std::sqrt(tol));

  // Complement = trailing l-n columns of the accumulated Q factor.
  ComplexMatrix comp(l, l - n);
  for (std::size_t j = 0; j < l - n; ++j) comp(n + j, j) = 1.0;
  apply_reflectors(hs, comp);

  ComplexMatrix m(l, l);
  m.set_block(0, 0, q);  // original columns, bit-for-bit
  m.set_block(0, n, comp);

  if (distance_to_identity(m.gram()) > 10.0 * tol) {
    fail(Errc::DegenerateComplement, "completed matrix failed unitarity check");
  }
  return m;
}

ComplexMatrix inv_sqrt_psd(const ComplexMatrix& s, double tol) {
  const EigenDecomposition eig =
      eig_impl(s, std::max(tol, kEigTol), kEigTol);
  const double lmax = eig.values.front();
  const double lmin = eig.values.back();
  if (!(lmin > tol * lmax)) {
    fail(Errc::SingularOrIndefinite, "lambda_min <= tol * lambda_max");
  }
  const std::size_t n = s.rows();
  ComplexMatrix ud(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double d = 1.0 / std::sqrt(eig.values[j]);
    for (std::size_t i = 0; i < n; ++i) ud(i, j) = eig.vectors(i, j) * d;
  }
  ComplexMatrix r = ud * eig.vectors.adjoint();
  // Clean the rounding-level asymmetry.
  for (std::size_t i = 0; i < n; ++i) {
    r(i, i) = r(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (r(i, j) + std::conj(r(j, i)));
      r(i, j) = avg;
      r(j, i) = std::conj(avg);
    }
  }
  return r;
}

ComplexMatrix schur_horn_unitary(const std::vector<double>& lambda,
                                 const std::vector<double>& targets,
                                 double tol) {
  const std::size_t m = lambda.size();
  if (m != targets.size()) {
    fail(Errc::LengthMismatch, "lambda and targets differ in length");
  }
  if (m == 0) fail(Errc::InvalidDimension, "empty sequences");

  std::vector<std::size_t> lam_order(m), tgt_order(m);
  std::iota(lam_order.begin(), lam_order.end(), std::size_t{0});
  std::iota(tgt_order.begin(), tgt_order.end(), std::size_t{0});
  std::stable_sort(lam_order.begin(), lam_order.end(),
                   [&](std::size_t i, std::size_t j) { return lambda[i] > lambda[j]; });
  std::stable_sort(tgt_order.begin(), tgt_order.end(),
                   [&](std::size_t i, std::size_t j) { return targets[i] > targets[j]; });

  std::vector<double> lam_s(m), tgt_s(m);
  for (std::size_t i = 0; i < m; ++i) {
    lam_s[i] = lambda[lam_order[i]];
    tgt_s[i] = targets[tgt_order[i]];
  }

  double lam_total = 0.0;
  for (double x : lam_s) lam_total += x;
  const double slack = tol * (1.0 + std::abs(lam_total));
  double lam_prefix = 0.0;
  double tgt_prefix = 0.0;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    lam_prefix += lam_s[k];
    tgt_prefix += tgt_s[k];
    if (tgt_prefix > lam_prefix + slack) {
      throw MajorizationError(
          k + 1, "prefix sum of targets exceeds spectrum at k=" +
                     std::to_string(k + 1));
    }
  }
  double tgt_total = tgt_prefix + tgt_s[m - 1];
  if (std::abs(tgt_total - lam_total) > slack) {
    throw MajorizationError(m, "total sums differ beyond tolerance");
  }

  // Chan-Li chain in the sorted coordinate system. The principal submatrix
  // on the active positions stays diagonal throughout, so each step only
  // needs the running diagonal values.
  struct Slot {
    std::size_t pos;
    double value;
  };
  std::vector<Slot> active(m);
  for (std::size_t i = 0; i < m; ++i) active[i] = {i, lam_s[i]};

  ComplexMatrix o_s = ComplexMatrix::identity(m);
  auto rotate_rows = [&](std::size_t p, std::size_t q, double c, double s) {
    for (std::size_t k = 0; k < m; ++k) {
      const Complex rp = o_s(p, k);
      const Complex rq = o_s(q, k);
      o_s(p, k) = c * rp - s * rq;
      o_s(q, k) = s * rp + c * rq;
    }
  };

  // pinned[step]: the matrix position that ends up carrying tgt_s[step].
  std::vector<std::size_t> pinned(m);
  for (std::size_t step = 0; step < m; ++step) {
    const double t = tgt_s[step];
    // Last active slot whose value still dominates t.
    std::size_t j = 0;
    bool found = false;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (active[i].value >= t) {
        j = i;
        found = true;
      } else {
        break;
      }
    }
    if (!found) j = 0;  // t above everything by a rounding hair: take the max
    pinned[step] = active[j].pos;

    const bool last = (j + 1 == active.size());
    const double a_val = active[j].value;
    if (last || !found || a_val - active[j + 1].value <= 0.0) {
      // Direct fix; majorization forces value == t up to the slack.
      active.erase(active.begin() + static_cast<std::ptrdiff_t>(j));
      continue;
    }

    const double b_val = active[j + 1].value;
    const std::size_t p = active[j].pos;
    const std::size_t q = active[j + 1].pos;
    double c_sq = (t - b_val) / (a_val - b_val);
    c_sq = std::clamp(c_sq, 0.0, 1.0);
    const double c = std::sqrt(c_sq);
    const double s = std::sqrt(1.0 - c_sq);
    rotate_rows(p, q, c, s);
    // Position p is pinned at t; q carries the rest of the pair's mass.
    active[j + 1] = {q, a_val + b_val - t};
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(j));
  }

  // Route each pinned row to its target's original index and undo the
  // spectrum sort on the columns.
  ComplexMatrix o(m, m);
  for (std::size_t step = 0; step < m; ++step) {
    for (std::size_t c = 0; c < m; ++c) {
      o(tgt_order[step], lam_order[c]) = o_s(pinned[step], c);
    }
  }
  return o;
}

ComplexMatrix haar_random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) fail(Errc::InvalidDimension, "dimension must be at least 1");

  std::mt19937_64 rng(seed);
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      // Box-Muller in polar form: both coordinates standard normal.
      const double u = unit_double(rng);
      const double v = unit_double(rng);
      const double r = std::sqrt(-2.0 * std::log1p(-u));
      const double th = 2.0 * std::numbers::pi * v;
      g(i, j) = Complex(r * std::cos(th), r * std::sin(th));
    }
  }

  const HouseholderSet hs = householder_qr(g, 0.0);
  ComplexMatrix q = ComplexMatrix::identity(dim);
  apply_reflectors(hs, q);

  // Fix column phases so the triangular factor has a real-positive
  // diagonal; this makes the distribution Haar.
  for (std::size_t j = 0; j < dim; ++j) {
    const Complex d = hs.r_diag[j];
    const double ad = std::abs(d);
    const Complex phase = (ad > 0.0) ? d / ad : Complex(1.0, 0.0);
    for (std::size_t i = 0; i < dim; ++i) q(i, j) *= phase;
  }
  return q;
}

}  // namespace opv
