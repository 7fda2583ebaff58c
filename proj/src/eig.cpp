#include "secform/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace secform {

namespace {

constexpr int kMaxSweeps = 60;
constexpr double kOffTolerance = 1e-13;     // relative to ||H||_F
constexpr double kHermTolerance = 1e-12;    // relative to ||H||_max

double offdiag_norm(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
  return std::sqrt(2.0 * s);
}

// Cyclic Jacobi on the symmetrized copy of H. When `vectors` is non-null the
// accumulated rotations are kept in *vectors stored TRANSPOSED (row k of
// *vectors is the k-th eigenvector) so every update is a contiguous row
// operation; the caller transposes at the end.
std::vector<double> jacobi(const ComplexMatrix& H, ComplexMatrix* vectors) {
  require_finite(H, "hermitian_eigs");
  const std::size_t n = H.size();
  if (n == 0) throw domain_error("hermitian_eigs: empty matrix");

  const double scale = max_abs(H);
  // Hermitian precondition.
  double dev = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      dev = std::max(dev, std::abs(H(i, j) - std::conj(H(j, i))));
  if (dev > kHermTolerance * std::max(scale, 1e-300))
    throw precondition_error("hermitian_eigs: not Hermitian");

  // Symmetrized working copy; diagonal forced real.
  ComplexMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = cplx{H(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (H(i, j) + std::conj(H(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }

  if (vectors) *vectors = ComplexMatrix::identity(n);

  const double fro = frobenius(a);
  const double off_target = kOffTolerance * fro;
  // Rotations this small cannot stall convergence; skipping them saves the
  // late sweeps from rotating on noise.
  const double skip = off_target / (10.0 * static_cast<double>(n));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm(a) <= off_target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx beta = a(p, q);
        const double b = std::abs(beta);
        if (b <= skip) continue;

        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const cplx u = beta / b;  // e^{i phi}
        const double tau = (gamma - alpha) / (2.0 * b);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx su = s * u;
        const cplx cu = c * u;

        cplx* rp = a.data() + p * n;
        cplx* rq = a.data() + q * n;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cplx apk = rp[k];
          const cplx aqk = rq[k];
          const cplx np = c * apk - su * aqk;
          const cplx nq = s * apk + cu * aqk;
          rp[k] = np;
          rq[k] = nq;
          // Mirror into columns p and q; the iterate stays Hermitian.
          a(k, p) = std::conj(np);
          a(k, q) = std::conj(nq);
        }
        rp[p] = cplx{alpha - t * b, 0.0};
        rq[q] = cplx{gamma + t * b, 0.0};
        rp[q] = cplx{0.0, 0.0};
        rq[p] = cplx{0.0, 0.0};

        if (vectors) {
          cplx* wp = vectors->data() + p * n;
          cplx* wq = vectors->data() + q * n;
          const cplx su_c = std::conj(su);
          const cplx cu_c = std::conj(cu);
          for (std::size_t k = 0; k < n; ++k) {
            const cplx vp = wp[k];
            const cplx vq = wq[k];
            wp[k] = c * vp - su_c * vq;
            wq[k] = s * vp + cu_c * vq;
          }
        }
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i).real();
  return values;
}

}  // namespace

HermitianEigen hermitian_eigs(const ComplexMatrix& H) {
  const std::size_t n = H.size();
  ComplexMatrix w;  // transposed eigenvector accumulator
  std::vector<double> values = jacobi(H, &w);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = values[order[k]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = w(order[k], i);
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& H) {
  std::vector<double> values = jacobi(H, nullptr);
  std::sort(values.begin(), values.end());
  return values;
}

namespace {

// T^H T, built directly (Hermitian by construction).
ComplexMatrix gram(const ComplexMatrix& t) {
  const std::size_t n = t.size();
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cplx s{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) s += std::conj(t(k, i)) * t(k, j);
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
  }
  return g;
}

}  // namespace

double operator_norm(const ComplexMatrix& T) {
  require_finite(T, "operator_norm");
  if (T.size() == 0) return 0.0;
  const std::vector<double> ev = hermitian_eigenvalues(gram(T));
  return std::sqrt(std::max(0.0, ev.back()));
}

double smallest_singular(const ComplexMatrix& T) {
  require_finite(T, "smallest_singular");
  if (T.size() == 0) return 0.0;
  const std::vector<double> ev = hermitian_eigenvalues(gram(T));
  return std::sqrt(std::max(0.0, ev.front()));
}

}  // namespace secform
