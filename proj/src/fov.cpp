#include "secform/fov.hpp"

#include <cmath>
#include <numbers>

#include "secform/eig.hpp"
#include "secform/rng.hpp"
#include "secform/sector.hpp"

namespace secform {

using std::numbers::pi;

namespace {

// Re(e^{-i phi} T) in the operator sense: (e^{-i phi} T + e^{i phi} T^H)/2.
ComplexMatrix rotated_hermitian_part(const ComplexMatrix& T, double phi) {
  const std::size_t n = T.size();
  const cplx w = std::polar(1.0, -phi);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (w * T(i, j) + std::conj(w * T(j, i)));
  return h;
}

FovBoundary fov_boundary_impl(const ComplexMatrix& T, int n_angles, bool parallel) {
  if (n_angles < 8) throw domain_error("fov_boundary: n_angles must be >= 8");
  if (T.size() == 0) throw domain_error("fov_boundary: empty matrix");
  require_finite(T, "fov_boundary");
  // support_point cannot throw past this point (the rotated Hermitian part
  // of a finite matrix is finite and exactly Hermitian), so the parallel
  // region below is exception-free.

  FovBoundary fov;
  fov.angles.resize(n_angles);
  fov.support.resize(n_angles);
  fov.points.resize(n_angles);

#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int k = 0; k < n_angles; ++k) {
    const double phi = 2.0 * pi * k / n_angles;
    auto [h, p] = support_point(T, phi);
    fov.angles[k] = phi;
    fov.support[k] = h;
    fov.points[k] = p;
  }
  return fov;
}

}  // namespace

std::pair<double, cplx> support_point(const ComplexMatrix& T, double phi) {
  if (T.size() == 0) throw domain_error("support_point: empty matrix");
  const HermitianEigen eig = hermitian_eigs(rotated_hermitian_part(T, phi));
  const double h = eig.values.back();
  const ComplexVector u = eig.eigenvector(T.size() - 1);
  const cplx p = dot(matvec(T, u), u);
  return {h, p};
}

FovBoundary fov_boundary(const ComplexMatrix& T, int n_angles) {
  return fov_boundary_impl(T, n_angles, true);
}

FovBoundary fov_boundary_serial(const ComplexMatrix& T, int n_angles) {
  return fov_boundary_impl(T, n_angles, false);
}

SectorContainmentReport verify_sector_containment(const ComplexMatrix& T, double theta,
                                                  int n_angles) {
  const FovBoundary fov = fov_boundary(T, n_angles);
  SectorContainmentReport r;
  r.max_arg = minimal_enclosing_angle(fov.points);
  r.theta = theta;
  r.pass = r.max_arg <= theta + 1e-8;
  return r;
}

std::vector<cplx> brute_force_fov_sample(const ComplexMatrix& T, int n_random,
                                         std::uint64_t seed) {
  if (n_random < 1) throw domain_error("brute_force_fov_sample: n_random must be >= 1");
  require_finite(T, "brute_force_fov_sample");
  const std::size_t n = T.size();
  std::vector<cplx> samples(n_random);
  for (int j = 0; j < n_random; ++j) {
    const ComplexVector u = rng::unit_vector(seed, n, static_cast<std::uint64_t>(j));
    samples[j] = dot(matvec(T, u), u);
  }
  return samples;
}

bool hull_contains(const FovBoundary& fov, cplx z, double tol) {
  for (std::size_t k = 0; k < fov.angles.size(); ++k) {
    const cplx w = std::polar(1.0, -fov.angles[k]);
    if ((w * z).real() > fov.support[k] + tol) return false;
  }
  return true;
}

double sector_support_margin(const ComplexMatrix& T, double theta) {
  if (T.size() == 0) throw domain_error("sector_support_margin: empty matrix");
  const double hi = hermitian_eigenvalues(rotated_hermitian_part(T, theta + pi / 2.0)).back();
  const double lo = hermitian_eigenvalues(rotated_hermitian_part(T, -theta - pi / 2.0)).back();
  return std::max(hi, lo);
}

double containment_half_angle(const ComplexMatrix& T, double tol) {
  require_finite(T, "containment_half_angle");
  if (sector_support_margin(T, pi / 2.0) > tol)
    throw precondition_error(
        "containment_half_angle: numerical range not confined to the right half-plane");
  double lo = 0.0, hi = pi / 2.0;
  // Containment is monotone in theta, so bisection on the predicate is valid
  // even though the margin value itself need not be monotone.
  for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sector_support_margin(T, mid) <= tol)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace secform
