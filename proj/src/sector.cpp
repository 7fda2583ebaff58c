#include "secform/sector.hpp"

#include <cmath>
#include <numbers>

#include "secform/eig.hpp"

namespace secform {

using std::numbers::pi;

SectorAngles make_sector_angles(double m, double M) {
  if (!(m > 0.0)) throw domain_error("sector angles: m must be positive");
  if (!(M >= m)) throw domain_error("sector angles: M < m");
  SectorAngles s;
  s.m = m;
  s.M = M;
  s.kappa = sharp_angle(m, M);
  s.classical = classical_angle(m, M);
  return s;
}

std::pair<ComplexMatrix, ComplexMatrix> cartesian_decomposition(const ComplexMatrix& T) {
  const std::size_t n = T.size();
  ComplexMatrix s(n), e(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx t = T(i, j);
      const cplx th = std::conj(T(j, i));
      s(i, j) = 0.5 * (t + th);
      // (T - T^H) / (2i) = -i/2 (T - T^H)
      e(i, j) = cplx{0.0, -0.5} * (t - th);
    }
  }
  return {std::move(s), std::move(e)};
}

double coercivity_constant(const ComplexMatrix& T) {
  auto [s, e] = cartesian_decomposition(T);
  (void)e;
  return hermitian_eigenvalues(s).front();
}

ImaginaryPartBoundReport imaginary_part_bound_check(const ComplexMatrix& T) {
  const double m = coercivity_constant(T);
  if (!(m > 0.0)) throw precondition_error("not coercive");
  auto [s, e] = cartesian_decomposition(T);
  (void)s;
  ImaginaryPartBoundReport r;
  r.E_norm = operator_norm(e);
  const double t_norm = operator_norm(T);
  r.bound = std::sqrt(std::max(0.0, t_norm * t_norm - m * m));
  r.margin = r.bound - r.E_norm;
  r.pass = r.E_norm <= r.bound + 1e-10 * (1.0 + r.bound);
  return r;
}

double sharp_angle(double m, double M) {
  if (!(m > 0.0)) throw domain_error("sharp_angle: m must be positive");
  if (!(M >= m)) throw domain_error("sharp_angle: M < m");
  const double ratio = M / m;
  return std::atan(std::sqrt(std::max(0.0, ratio * ratio - 1.0)));
}

double classical_angle(double m, double M) {
  if (!(m > 0.0)) throw domain_error("classical_angle: m must be positive");
  if (!(M >= m)) throw domain_error("classical_angle: M < m");
  return std::atan(M / m);
}

double kappa_p(double kappa, double p) {
  if (!(kappa >= 0.0) || !(kappa < pi / 2.0))
    throw domain_error("kappa_p: kappa must lie in [0, pi/2)");
  if (std::isinf(p) && p > 0.0) return pi / 2.0;  // limit value, excluded as a p
  if (!(p > 1.0)) throw domain_error("kappa_p: p must lie in (1, inf)");
  const double w = std::abs(1.0 - 2.0 / p);
  return (1.0 - w) * kappa + w * (pi / 2.0);
}

double resolvent_constant(double theta, double m, double M) {
  if (!(m > 0.0)) throw domain_error("resolvent_constant: m must be positive");
  if (!(M >= m)) throw domain_error("resolvent_constant: M < m");
  if (!(theta <= pi / 2.0)) throw domain_error("resolvent_constant: theta > pi/2");
  const double denom = m * std::sin(theta) - std::sqrt(std::max(0.0, M * M - m * m)) * std::cos(theta);
  if (!(denom > 0.0))
    throw domain_error("resolvent_constant: denominator nonpositive (theta <= sharp angle)");
  return M / denom;
}

bool sector_contains(cplx z, double theta, double tol) {
  if (z == cplx{0.0, 0.0}) return true;
  return std::abs(std::arg(z)) <= theta + tol;
}

double minimal_enclosing_angle(const std::vector<cplx>& points) {
  if (points.empty()) throw domain_error("minimal_enclosing_angle: empty list");
  double worst = 0.0;
  for (const cplx& z : points) {
    if (z == cplx{0.0, 0.0}) continue;
    worst = std::max(worst, std::abs(std::arg(z)));
  }
  return worst;
}

double sector_distance(cplx w, double kappa) {
  const double r = std::abs(w);
  if (r == 0.0) return 0.0;
  const double a = std::abs(std::arg(w));
  if (a <= kappa) return 0.0;
  if (a <= kappa + pi / 2.0) return r * std::sin(a - kappa);
  return r;
}

}  // namespace secform
