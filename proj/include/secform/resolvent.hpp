#pragma once

#include <string>
#include <vector>

#include "secform/elliptic.hpp"
#include "secform/types.hpp"

namespace secform {

/// ||(A + lambda I)^{-1}|| = 1/sigma_min(A + lambda I).
/// Throws precondition_error("lambda in spectrum") when A + lambda I is
/// singular to working precision.
double resolvent_norm(const ComplexMatrix& A, cplx lambda);

/// Per-lambda comparison of the resolvent norm against 1/dist(-lambda, sector).
struct ResolventDistanceReport {
  double kappa = 0.0;
  std::vector<cplx> lambdas;
  std::vector<double> norms;
  std::vector<double> bounds;   ///< 1/dist(-lambda, sector of half-angle kappa)
  double max_violation = 0.0;   ///< max norms[i] - bounds[i]
  bool pass = false;            ///< max_violation <= 1e-8
};

/// Checks ||(A + lambda I)^{-1}|| <= 1/dist(-lambda, sector(kappa)) for each
/// lambda. The distance is the exact closed form of sector_distance.
/// Requires every -lambda strictly outside the sector, else
/// precondition_error("lambda not admissible"). The caller is responsible
/// for having verified that the numerical range lies in the sector.
ResolventDistanceReport resolvent_distance_check(const ComplexMatrix& A, double kappa,
                                                 const std::vector<cplx>& lambdas);

/// Resolvent samples lambda = r e^{i psi} over the closed sector of
/// half-angle pi - theta, i.e. psi uniform over [-(pi-theta), pi-theta].
struct ResolventScan {
  double theta = 0.0;
  std::vector<cplx> lambdas;    ///< ray-major: psi outer, radius inner
  std::vector<double> norms;
  double bound_constant = 0.0;  ///< M / (m sin(theta) - sqrt(M^2-m^2) cos(theta))
  double max_violation = 0.0;   ///< max norms[i]*|lambdas[i]| - bound_constant
  bool pass = false;            ///< max_violation <= 1e-8
};

/// Scans the restricted operator of an assembled form along n_rays >= 2 rays
/// with the given radii. theta must lie in (field kappa, pi/2]; radii > 0.
/// OpenMP across samples with slot writes: identical output for any thread
/// count, equal to the serial reference.
ResolventScan ray_scan(const AssembledForm& form, double theta, int n_rays,
                       const std::vector<double>& radii);

/// Serial reference for ray_scan.
ResolventScan ray_scan_serial(const AssembledForm& form, double theta, int n_rays,
                              const std::vector<double>& radii);

/// count log-spaced values from lo to hi inclusive (count >= 2; count == 1
/// returns {lo}). Requires 0 < lo <= hi.
std::vector<double> log_spaced(double lo, double hi, int count);

/// The functional-calculus constant 2 + 2/sqrt(3).
double functional_calculus_constant();

/// Identifiers of the built-in rational functions:
/// "z/(1+z)^2", "z^2/(1+z)^3", "1/(1+z)-1/(2+z)".
const std::vector<std::string>& rational_function_ids();

/// Scalar value f(z) for a built-in f_id; unknown ids raise domain_error.
cplx rational_value(const std::string& f_id, cplx z);

/// f(A) assembled column-by-column through LU solves (no explicit inverses).
ComplexMatrix rational_apply(const std::string& f_id, const ComplexMatrix& A);

struct RationalCalculusReport {
  std::string f_id;
  double kappa = 0.0;
  double eps = 0.0;
  double lhs = 0.0;   ///< ||f(A)||
  double rhs = 0.0;   ///< (2 + 2/sqrt(3)) * sampled sup of |f| on the sector rays
  bool pass = false;  ///< lhs <= rhs + 1e-8 (1 + rhs)
};

/// Functional-calculus bound check: ||f(A)|| against the widened-sector sup of
/// |f| sampled on the rays arg z = +-(kappa + eps) with n_boundary log-spaced
/// radii in [1e-6, 1e6] per ray plus the z -> 0 and z -> infinity limit
/// values. Preconditions: the numerical range of A must lie in the sector of
/// half-angle kappa (verified exactly; precondition_error otherwise) and
/// kappa + eps <= pi/2 with eps > 0.
RationalCalculusReport rational_calculus_check(const ComplexMatrix& A, double kappa,
                                               double eps, const std::string& f_id,
                                               int n_boundary = 2000);

}  // namespace secform
