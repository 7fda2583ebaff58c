#include "secform/resolvent.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>

#include "secform/eig.hpp"
#include "secform/fov.hpp"
#include "secform/lu.hpp"
#include "secform/sector.hpp"

namespace secform {

using std::numbers::pi;

namespace {

constexpr double kBoundTol = 1e-8;

ComplexMatrix shifted(const ComplexMatrix& A, cplx lambda) {
  ComplexMatrix T = A;
  for (std::size_t i = 0; i < T.size(); ++i) T(i, i) += lambda;
  return T;
}

}  // namespace

double resolvent_norm(const ComplexMatrix& A, cplx lambda) {
  if (A.size() == 0) throw domain_error("resolvent_norm: empty matrix");
  require_finite(A, "resolvent_norm");
  const ComplexMatrix T = shifted(A, lambda);
  const double s = smallest_singular(T);
  if (!(s > 1e-14 * max_abs(T))) throw precondition_error("lambda in spectrum");
  return 1.0 / s;
}

ResolventDistanceReport resolvent_distance_check(const ComplexMatrix& A, double kappa,
                            const std::vector<cplx>& lambdas) {
  if (!(kappa >= 0.0) || !(kappa < pi / 2.0))
    throw domain_error("resolvent_distance_check: kappa must lie in [0, pi/2)");
  ResolventDistanceReport r;
  r.kappa = kappa;
  r.lambdas = lambdas;
  r.norms.resize(lambdas.size());
  r.bounds.resize(lambdas.size());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const double d = sector_distance(-lambdas[i], kappa);
    if (!(d > 0.0)) throw precondition_error("lambda not admissible");
    r.bounds[i] = 1.0 / d;
  }
  // resolvent_norm can throw; exceptions must not unwind out of the
  // parallel region, so they are converted to a flag and rethrown after.
  std::atomic<bool> singular{false};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    try {
      r.norms[i] = resolvent_norm(A, lambdas[i]);
    } catch (...) {
      singular.store(true, std::memory_order_relaxed);
    }
  }
  if (singular.load()) throw precondition_error("lambda in spectrum");

  r.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    r.max_violation = std::max(r.max_violation, r.norms[i] - r.bounds[i]);
  if (lambdas.empty()) r.max_violation = 0.0;
  r.pass = r.max_violation <= kBoundTol;
  return r;
}

namespace {

ResolventScan ray_scan_impl(const AssembledForm& form, double theta, int n_rays,
                            const std::vector<double>& radii, bool parallel) {
  if (form.A.size() == 0) throw precondition_error("ray_scan: no free nodes");
  if (n_rays < 2) throw domain_error("ray_scan: n_rays must be >= 2");
  if (radii.empty()) throw domain_error("ray_scan: empty radius list");
  for (double r : radii)
    if (!(r > 0.0)) throw domain_error("ray_scan: radii must be positive");

  ResolventScan scan;
  scan.theta = theta;
  // Throws domain_error when theta is outside (field kappa, pi/2].
  scan.bound_constant =
      resolvent_constant(theta, form.field_angles.m, form.field_angles.M);

  const double psi_max = pi - theta;
  const std::size_t total = static_cast<std::size_t>(n_rays) * radii.size();
  scan.lambdas.resize(total);
  scan.norms.resize(total);
  for (int j = 0; j < n_rays; ++j) {
    const double psi = -psi_max + 2.0 * psi_max * j / (n_rays - 1);
    for (std::size_t k = 0; k < radii.size(); ++k)
      scan.lambdas[j * radii.size() + k] = std::polar(radii[k], psi);
  }

  std::atomic<bool> singular{false};
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < total; ++i) {
    try {
      scan.norms[i] = resolvent_norm(form.A, scan.lambdas[i]);
    } catch (...) {
      singular.store(true, std::memory_order_relaxed);
    }
  }
  if (singular.load()) throw precondition_error("lambda in spectrum");

  scan.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < total; ++i)
    scan.max_violation = std::max(
        scan.max_violation, scan.norms[i] * std::abs(scan.lambdas[i]) - scan.bound_constant);
  scan.pass = scan.max_violation <= kBoundTol;
  return scan;
}

}  // namespace

ResolventScan ray_scan(const AssembledForm& form, double theta, int n_rays,
                       const std::vector<double>& radii) {
  return ray_scan_impl(form, theta, n_rays, radii, true);
}

ResolventScan ray_scan_serial(const AssembledForm& form, double theta, int n_rays,
                              const std::vector<double>& radii) {
  return ray_scan_impl(form, theta, n_rays, radii, false);
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (count < 1) throw domain_error("log_spaced: count must be >= 1");
  if (!(lo > 0.0) || !(hi >= lo)) throw domain_error("log_spaced: need 0 < lo <= hi");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = lo * std::exp(step * i);
  out.back() = hi;
  return out;
}

double functional_calculus_constant() { return 2.0 + 2.0 / std::sqrt(3.0); }

const std::vector<std::string>& rational_function_ids() {
  static const std::vector<std::string> ids = {"z/(1+z)^2", "z^2/(1+z)^3",
                                               "1/(1+z)-1/(2+z)"};
  return ids;
}

cplx rational_value(const std::string& f_id, cplx z) {
  if (f_id == "z/(1+z)^2") return z / ((1.0 + z) * (1.0 + z));
  if (f_id == "z^2/(1+z)^3") return z * z / ((1.0 + z) * (1.0 + z) * (1.0 + z));
  if (f_id == "1/(1+z)-1/(2+z)") return 1.0 / (1.0 + z) - 1.0 / (2.0 + z);
  throw domain_error("unknown rational function \"" + f_id + "\"");
}

ComplexMatrix rational_apply(const std::string& f_id, const ComplexMatrix& A) {
  const std::size_t n = A.size();
  if (n == 0) throw domain_error("rational_apply: empty matrix");
  require_finite(A, "rational_apply");

  ComplexMatrix F(n);
  auto set_column = [&](std::size_t k, const ComplexVector& col) {
    for (std::size_t i = 0; i < n; ++i) F(i, k) = col[i];
  };
  ComplexVector e(n, cplx{0.0});

  if (f_id == "z/(1+z)^2") {
    const LuFactor lu(shifted(A, cplx{1.0}));
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = 1.0;
      set_column(k, matvec(A, lu.solve(lu.solve(e))));
      e[k] = 0.0;
    }
  } else if (f_id == "z^2/(1+z)^3") {
    const LuFactor lu(shifted(A, cplx{1.0}));
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = 1.0;
      set_column(k, matvec(A, matvec(A, lu.solve(lu.solve(lu.solve(e))))));
      e[k] = 0.0;
    }
  } else if (f_id == "1/(1+z)-1/(2+z)") {
    const LuFactor lu1(shifted(A, cplx{1.0}));
    const LuFactor lu2(shifted(A, cplx{2.0}));
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = 1.0;
      const ComplexVector a = lu1.solve(e);
      const ComplexVector b = lu2.solve(e);
      ComplexVector col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = a[i] - b[i];
      set_column(k, col);
      e[k] = 0.0;
    }
  } else {
    throw domain_error("unknown rational function \"" + f_id + "\"");
  }
  return F;
}

RationalCalculusReport rational_calculus_check(const ComplexMatrix& A, double kappa,
                                               double eps, const std::string& f_id,
                                               int n_boundary) {
  rational_value(f_id, cplx{1.0});  // validates f_id
  if (!(eps > 0.0)) throw domain_error("rational_calculus_check: eps must be > 0");
  if (!(kappa >= 0.0) || !(kappa + eps <= pi / 2.0 + 1e-12))
    throw domain_error("rational_calculus_check: need 0 <= kappa and kappa + eps <= pi/2");
  if (n_boundary < 2) throw domain_error("rational_calculus_check: n_boundary must be >= 2");

  if (sector_support_margin(A, kappa) > 1e-10 * std::max(1.0, max_abs(A)))
    throw precondition_error("numerical range not contained in the sector");

  RationalCalculusReport rep;
  rep.f_id = f_id;
  rep.kappa = kappa;
  rep.eps = eps;
  rep.lhs = operator_norm(rational_apply(f_id, A));

  // Sup of |f| over the widened sector: it is attained on the boundary rays
  // or in the z -> 0 / z -> infinity limits. Every built-in f is continuous
  // at 0, so the z -> 0 limit is f(0); the z -> infinity limit is 0.
  const double phi = kappa + eps;
  double sup = std::abs(rational_value(f_id, cplx{0.0}));
  for (double r : log_spaced(1e-6, 1e6, n_boundary)) {
    sup = std::max(sup, std::abs(rational_value(f_id, std::polar(r, phi))));
    sup = std::max(sup, std::abs(rational_value(f_id, std::polar(r, -phi))));
  }
  rep.rhs = functional_calculus_constant() * sup;
  rep.pass = rep.lhs <= rep.rhs + kBoundTol * (1.0 + rep.rhs);
  return rep;
}

}  // namespace secform
