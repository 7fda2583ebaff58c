#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "secform/types.hpp"

namespace secform {

/// Sampled boundary of the numerical range, by the support-function
/// rotation method: h(phi) = lambda_max(Re(e^{-i phi} T)) and one boundary
/// point p(phi) = (T u, u) per angle, u a unit top eigenvector.
struct FovBoundary {
  std::vector<double> angles;   ///< sorted, in [0, 2 pi)
  std::vector<double> support;  ///< h(phi)
  std::vector<cplx> points;     ///< p(phi)
};

/// Support value and boundary point in direction phi.
std::pair<double, cplx> support_point(const ComplexMatrix& T, double phi);

/// Uniform angle grid of n_angles >= 8 directions. OpenMP across angles;
/// per-angle results are written by slot, so output is identical to the
/// serial reference for any thread count.
FovBoundary fov_boundary(const ComplexMatrix& T, int n_angles);

/// Serial reference for fov_boundary.
FovBoundary fov_boundary_serial(const ComplexMatrix& T, int n_angles);

struct SectorContainmentReport {
  double max_arg = 0.0;
  double theta = 0.0;
  bool pass = false;
};

/// max |arg| over the sampled boundary vs the sector half-angle theta.
SectorContainmentReport verify_sector_containment(const ComplexMatrix& T, double theta,
                                                  int n_angles);

/// (T u, u) for n_random seeded pseudo-random unit vectors; the independent
/// oracle for the numerical range. Bit-reproducible for a given seed.
std::vector<cplx> brute_force_fov_sample(const ComplexMatrix& T, int n_random,
                                         std::uint64_t seed);

/// True when z lies in the intersection of the sampled half-planes
/// {Re(e^{-i phi} z) <= h(phi)} within tol.
bool hull_contains(const FovBoundary& fov, cplx z, double tol);

/// Exact sector-containment margin: max over the two supporting directions
/// +-(theta + pi/2) of lambda_max(Re(e^{-i phi} T)). The numerical range
/// lies in the sector of half-angle theta iff this is <= 0, because the
/// sector is the intersection of exactly those two half-planes.
double sector_support_margin(const ComplexMatrix& T, double theta);

/// Smallest theta with sector_support_margin(T, theta) <= tol, by bisection
/// over [0, pi/2]; requires the margin to be nonpositive at pi/2 (T coercive
/// in the closed right half-plane). Returns an angle whose sector certifiably
/// contains the numerical range.
double containment_half_angle(const ComplexMatrix& T, double tol = 0.0);

}  // namespace secform
