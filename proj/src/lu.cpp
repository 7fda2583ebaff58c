#include "secform/lu.hpp"

#include <cmath>
#include <numeric>
#include <utility>

namespace secform {

namespace {
constexpr double kPivotTolerance = 1e-14;  // relative to ||T||_max
}

LuFactor::LuFactor(const ComplexMatrix& T) : lu_(T), perm_(T.size()) {
  require_finite(T, "solve");
  const std::size_t n = lu_.size();
  if (n == 0) throw domain_error("solve: empty matrix");
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});

  const double floor = kPivotTolerance * std::max(max_abs(T), 1e-300);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best <= floor) throw precondition_error("singular matrix");
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(piv, j));
      std::swap(perm_[k], perm_[piv]);
    }
    const cplx inv_piv = 1.0 / lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx m = lu_(i, k) * inv_piv;
      lu_(i, k) = m;
      if (m == cplx{0.0, 0.0}) continue;
      const cplx* rk = lu_.data() + k * n;
      cplx* ri = lu_.data() + i * n;
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= m * rk[j];
    }
  }
}

ComplexVector LuFactor::solve(const ComplexVector& b) const {
  const std::size_t n = lu_.size();
  if (b.size() != n) throw domain_error("solve: dimension mismatch");

  ComplexVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm_[i]];
  // forward substitution, unit lower triangle
  for (std::size_t i = 1; i < n; ++i) {
    cplx s = x[i];
    const cplx* ri = lu_.data() + i * n;
    for (std::size_t j = 0; j < i; ++j) s -= ri[j] * x[j];
    x[i] = s;
  }
  // back substitution
  for (std::size_t ii = n; ii-- > 0;) {
    cplx s = x[ii];
    const cplx* ri = lu_.data() + ii * n;
    for (std::size_t j = ii + 1; j < n; ++j) s -= ri[j] * x[j];
    x[ii] = s / ri[ii];
  }
  return x;
}

ComplexVector solve(const ComplexMatrix& T, const ComplexVector& b) {
  return LuFactor(T).solve(b);
}

}  // namespace secform
