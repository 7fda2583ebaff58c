#pragma once

#include <utility>
#include <vector>

#include "secform/types.hpp"

namespace secform {

/// Closed sector {r e^{i phi} : r >= 0, |phi| <= half_angle}. Contains 0.
struct Sector {
  double half_angle = 0.0;  // radians, in [0, pi)
};

/// Coercivity/bound constants of an operator or coefficient field together
/// with the two sector half-angles they induce.
struct SectorAngles {
  double m = 0.0;          ///< coercivity constant, > 0
  double M = 0.0;          ///< uniform bound, >= m
  double kappa = 0.0;      ///< arctan sqrt((M/m)^2 - 1)
  double classical = 0.0;  ///< arctan(M/m)
};

/// Builds the angle bundle from (m, M); validates 0 < m <= M.
SectorAngles make_sector_angles(double m, double M);

/// T = S + iE with S, E Hermitian: S = (T + T^H)/2, E = (T - T^H)/(2i).
std::pair<ComplexMatrix, ComplexMatrix> cartesian_decomposition(const ComplexMatrix& T);

/// Best constant m with Re (Tu, u) >= m ||u||^2, i.e. the smallest
/// eigenvalue of the Hermitian part. May be <= 0.
double coercivity_constant(const ComplexMatrix& T);

struct ImaginaryPartBoundReport {
  double E_norm = 0.0;
  double bound = 0.0;   ///< sqrt(||T||^2 - m^2)
  double margin = 0.0;  ///< bound - E_norm
  bool pass = false;
};

/// Checks ||E|| <= sqrt(||T||^2 - m^2) for coercive T.
/// Throws precondition_error("not coercive") when coercivity_constant(T) <= 0.
ImaginaryPartBoundReport imaginary_part_bound_check(const ComplexMatrix& T);

/// arctan sqrt((M/m)^2 - 1), in [0, pi/2). Requires 0 < m <= M.
double sharp_angle(double m, double M);

/// arctan(M/m), in (0, pi/2). Requires 0 < m <= M.
double classical_angle(double m, double M);

/// Interpolated angle (1 - |1 - 2/p|) kappa + |1 - 2/p| pi/2 for p in (1, inf).
/// p = +infinity returns the limit value pi/2 (excluded as an actual p).
double kappa_p(double kappa, double p);

/// M / (m sin(theta) - sqrt(M^2 - m^2) cos(theta)) for
/// theta in (sharp_angle(m, M), pi/2]. The denominator equals
/// M sin(theta - kappa), so the constant is 1/sin(theta - kappa).
double resolvent_constant(double theta, double m, double M);

/// z == 0, or |arg z| <= theta + tol. Principal argument in (-pi, pi].
bool sector_contains(cplx z, double theta, double tol);

/// max |arg z| over the nonzero points, in [0, pi]; 0 when all points are 0.
/// Requires a nonempty list.
double minimal_enclosing_angle(const std::vector<cplx>& points);

/// Distance from w to the closed sector of half-angle kappa:
///   |arg w| <= kappa          -> 0
///   kappa < |arg w| <= kappa + pi/2 -> |w| sin(|arg w| - kappa)
///   |arg w| > kappa + pi/2    -> |w|
double sector_distance(cplx w, double kappa);

}  // namespace secform
