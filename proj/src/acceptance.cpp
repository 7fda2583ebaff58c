#include "secform/acceptance.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "secform/eig.hpp"
#include "secform/elliptic.hpp"
#include "secform/fov.hpp"
#include "secform/resolvent.hpp"
#include "secform/rng.hpp"
#include "secform/sector.hpp"

namespace secform::acceptance {

namespace {

using std::numbers::pi;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

const Mu2 kSkewMu = {cplx{1.0}, cplx{1.0}, cplx{-1.0}, cplx{1.0}};

ComplexMatrix skew_matrix() {
  return ComplexMatrix(2, {cplx{1.0}, cplx{1.0}, cplx{-1.0}, cplx{1.0}});
}

cplx skew_witness(double x, double y) { return {-x + y, x + y}; }

std::size_t random_dim(std::uint64_t seed) { return 2 + rng::word_at(seed, 999983) % 7; }

/// Gaussian matrix shifted to a strictly positive coercivity constant.
ComplexMatrix random_coercive(std::uint64_t seed, std::size_t n) {
  ComplexMatrix T = rng::gaussian_matrix(seed, n);
  const double lam = coercivity_constant(T);
  const double shift = std::max(0.0, -lam) + 0.1 + rng::uniform01(seed ^ 0xC0E6C1FEULL, 0);
  for (std::size_t i = 0; i < n; ++i) T(i, i) += shift;
  return T;
}

CriterionResult golden_form_value() {
  const CoefficientField mu = CoefficientField::constant(kSkewMu);
  const cplx target{4.0, -4.0};
  const int dims[][2] = {{1, 1}, {2, 2}, {3, 5}, {8, 8}, {13, 7}, {32, 32}};

  double value_err = 0.0;
  double const_err = 0.0;
  for (const auto& d : dims) {
    const Grid g(d[0], d[1], 1.0, 1.0);
    const AssembledForm form = assemble(g, mu, BoundarySpec::all_dirichlet());
    const ComplexVector u =
        interpolate(g, [](double x, double y) { return skew_witness(x, y); });
    value_err = std::max(value_err, std::abs(form_value(form, u) - target));
    const SectorAngles& a = form.field_angles;
    const_err = std::max({const_err, std::abs(a.m - 1.0), std::abs(a.M - std::sqrt(2.0)),
                          std::abs(a.kappa - pi / 4.0)});
  }
  const bool pass = value_err <= 1e-10 && const_err <= 1e-12;
  return {1, "golden form value", pass,
          "form value err " + num(value_err) + ", field constants err " + num(const_err) +
              " over 6 grids"};
}

CriterionResult sharpness() {
  const Grid g(8, 8, 1.0, 1.0);
  const AssembledForm form =
      assemble(g, CoefficientField::constant(kSkewMu), BoundarySpec::all_dirichlet());
  const ComplexVector u =
      interpolate(g, [](double x, double y) { return skew_witness(x, y); });
  const double arg_err = std::abs(std::abs(std::arg(form_value(form, u))) - pi / 4.0);

  const ComplexMatrix T = skew_matrix();
  const SectorContainmentReport at = verify_sector_containment(T, pi / 4.0, 720);
  const SectorContainmentReport below = verify_sector_containment(T, pi / 4.0 - 0.01, 720);

  const bool pass = arg_err <= 1e-12 && at.pass && !below.pass;
  return {2, "sharp angle attained", pass,
          "arg err " + num(arg_err) + ", containment at the angle " +
              (at.pass ? "holds" : "fails") + ", below it " +
              (below.pass ? "holds" : "fails")};
}

CriterionResult imaginary_part_bound() {
  const std::uint64_t base = 0x5EC30003ULL;
  int failures = 0;
  double worst_excess = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < 1000; ++j) {
    const std::uint64_t seed = rng::substream(base, j);
    const ComplexMatrix T = random_coercive(seed, random_dim(seed));
    const ImaginaryPartBoundReport rep = imaginary_part_bound_check(T);
    worst_excess = std::max(worst_excess, rep.E_norm - rep.bound);
    if (!(rep.E_norm <= rep.bound + 1e-10)) ++failures;

    const double m = coercivity_constant(T);
    const double theta = std::atan(rep.bound / m);
    for (const cplx& z : brute_force_fov_sample(T, 50, rng::substream(seed, 7)))
      if (!sector_contains(z, theta, 1e-9)) ++failures;
  }

  // T = I + i diag(1,-1): the bound is attained.
  const ComplexMatrix Q(2, {cplx{1.0, 1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0, -1.0}});
  const ImaginaryPartBoundReport eq = imaginary_part_bound_check(Q);
  const double eq_err = std::abs(eq.E_norm - eq.bound);

  const bool pass = failures == 0 && eq_err <= 1e-10;
  return {3, "imaginary part bound", pass,
          std::to_string(failures) + " failures over 1000 matrices, worst excess " +
              num(worst_excess) + ", equality case err " + num(eq_err)};
}

CriterionResult angle_improvement() {
  const std::uint64_t base = 0x5EC30004ULL;
  int failures = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 100; ++j) {
    const std::uint64_t seed = rng::substream(base, j);
    const double u = std::max(rng::uniform01(seed, 0), 1e-3);
    const double ratio = std::pow(100.0, u);  // M/m in (1, 100]
    const double m = 0.1 + 10.0 * rng::uniform01(seed, 1);
    const double M = m * ratio;
    const double k = sharp_angle(m, M);
    const double c = classical_angle(m, M);
    min_gap = std::min(min_gap, c - k);
    if (!(c - k > 0.0) || !(k < pi / 2.0) || !(c < pi / 2.0)) ++failures;
  }
  const double gap_err = std::abs((classical_angle(1.0, std::sqrt(2.0)) -
                                   sharp_angle(1.0, std::sqrt(2.0))) -
                                  (std::atan(std::sqrt(2.0)) - pi / 4.0));
  const bool pass = failures == 0 && gap_err <= 1e-12;
  return {4, "angle improvement", pass,
          std::to_string(failures) + " failures over 100 ratios, min gap " + num(min_gap) +
              ", reference gap err " + num(gap_err)};
}

CriterionResult resolvent_ray_bound() {
  const Grid g(16, 16, 1.0, 1.0);
  const AssembledForm form =
      assemble(g, CoefficientField::constant(kSkewMu), BoundarySpec::all_dirichlet());
  const std::vector<double> radii = log_spaced(1e-2, 1e4, 12);
  const double kappa = form.field_angles.kappa;

  bool pass = true;
  double worst = -std::numeric_limits<double>::infinity();
  for (double theta : {kappa + 0.1, kappa + 0.3, pi / 2.0}) {
    const ResolventScan scan = ray_scan(form, theta, 9, radii);
    pass = pass && scan.pass;
    worst = std::max(worst, scan.max_violation);
  }
  return {5, "resolvent ray bound", pass,
          "3 angles x 9 rays x 12 radii on a 16x16 assembly, max violation " + num(worst)};
}

CriterionResult resolvent_distance_bound() {
  const std::uint64_t base = 0x5EC30006ULL;
  int failures = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < 200; ++j) {
    const std::uint64_t seed = rng::substream(base, j);
    const ComplexMatrix T = random_coercive(seed, random_dim(seed));
    const double kappa = containment_half_angle(T);

    std::vector<cplx> lambdas(50);
    for (int k = 0; k < 50; ++k) {
      const double beta = kappa + 0.05 + (pi - kappa - 0.05) * rng::uniform01(seed, 3 * k);
      const double sign = rng::uniform01(seed, 3 * k + 1) < 0.5 ? -1.0 : 1.0;
      const double r = std::pow(10.0, 6.0 * rng::uniform01(seed, 3 * k + 2) - 3.0);
      lambdas[k] = -std::polar(r, sign * beta);
    }
    const ResolventDistanceReport rep = resolvent_distance_check(T, kappa, lambdas);
    worst = std::max(worst, rep.max_violation);
    if (!rep.pass) ++failures;
  }
  const bool pass = failures == 0;
  return {6, "resolvent sector distance bound", pass,
          std::to_string(failures) + " failures over 200 matrices x 50 shifts, worst " +
              num(worst)};
}

CriterionResult interpolated_angle_table() {
  const bool exact2 = kappa_p(pi / 4.0, 2.0) == pi / 4.0;
  const double err48 = std::max(std::abs(kappa_p(pi / 4.0, 4.0) - 3.0 * pi / 8.0),
                                std::abs(kappa_p(pi / 4.0, 4.0 / 3.0) - 3.0 * pi / 8.0));
  bool below = true;
  for (double p : {1.01, 1.1, 2.0, 10.0, 100.0})
    below = below && kappa_p(pi / 4.0, p) < pi / 2.0;

  const bool pass = exact2 && err48 <= 1e-12 && below;
  return {7, "interpolated angle table", pass,
          std::string("p=2 ") + (exact2 ? "exact" : "NOT exact") + ", dual pair err " +
              num(err48) + (below ? ", all sampled p below the right angle"
                                  : ", a sampled p reached the right angle")};
}

CriterionResult rational_calculus_suite() {
  const std::uint64_t base = 0x5EC30008ULL;
  int failures = 0;
  double worst = -std::numeric_limits<double>::infinity();

  auto check = [&](const ComplexMatrix& A, double kappa, double eps) {
    for (const std::string& f : rational_function_ids()) {
      const RationalCalculusReport rep = rational_calculus_check(A, kappa, eps, f);
      worst = std::max(worst, rep.lhs - rep.rhs);
      if (!(rep.lhs <= rep.rhs + 1e-8)) ++failures;
    }
  };

  for (int j = 0; j < 200; ++j) {
    const std::uint64_t seed = rng::substream(base, j);
    const ComplexMatrix T = random_coercive(seed, random_dim(seed));
    const double kappa = containment_half_angle(T);
    check(T, kappa, std::min(0.05, 0.5 * (pi / 2.0 - kappa)));
  }

  const Grid g(8, 8, 1.0, 1.0);
  const CoefficientField mu = CoefficientField::constant(kSkewMu);
  const AssembledForm dirichlet = assemble(g, mu, BoundarySpec::all_dirichlet());
  check(dirichlet.A, dirichlet.field_angles.kappa, 0.05);

  // Pure Neumann leaves constants in the kernel; shift by the identity first.
  const AssembledForm neumann = assemble(g, mu, BoundarySpec::all_neumann());
  ComplexMatrix shifted = neumann.A;
  for (std::size_t i = 0; i < shifted.size(); ++i) shifted(i, i) += 1.0;
  check(shifted, neumann.field_angles.kappa, 0.05);

  const bool pass = failures == 0;
  return {8, "rational calculus bound", pass,
          std::to_string(failures) + " failures over (200 matrices + 2 assemblies) x 3 "
                                     "functions, worst excess " +
              num(worst)};
}

CriterionResult oracle_equivalence() {
  const std::uint64_t base = 0x5EC30009ULL;
  int hull_failures = 0;
  for (int j = 0; j < 200; ++j) {
    const std::uint64_t seed = rng::substream(base, j);
    const ComplexMatrix T = rng::gaussian_matrix(seed, random_dim(seed));
    const FovBoundary fov = fov_boundary(T, 360);
    const double tol = 1e-8 * operator_norm(T);
    for (const cplx& z : brute_force_fov_sample(T, 200, rng::substream(seed, 13)))
      if (!hull_contains(fov, z, tol)) ++hull_failures;
  }

  double eig_err = 0.0;
  for (int j = 0; j < 100; ++j) {
    const std::uint64_t seed = rng::substream(base ^ 0xE16ULL, j);
    const double a = rng::gaussian(seed, 0);
    const double d = rng::gaussian(seed, 1);
    const cplx b = rng::complex_gaussian(seed, 4);
    const ComplexMatrix H(2, {cplx{a}, b, std::conj(b), cplx{d}});
    const double mid = 0.5 * (a + d);
    const double rad = std::hypot(0.5 * (a - d), std::abs(b));
    const std::vector<double> ev = hermitian_eigenvalues(H);
    eig_err = std::max({eig_err, std::abs(ev[0] - (mid - rad)), std::abs(ev[1] - (mid + rad))});
  }

  const bool pass = hull_failures == 0 && eig_err <= 1e-12;
  return {9, "oracle equivalence", pass,
          std::to_string(hull_failures) +
              " hull misses over 200 matrices x 200 samples, 2x2 eigenvalue err " +
              num(eig_err)};
}

}  // namespace

std::vector<CriterionResult> run_all(std::ostream& log) {
  using Check = CriterionResult (*)();
  const std::array<Check, 9> checks = {
      golden_form_value,     sharpness,
      imaginary_part_bound,  angle_improvement,
      resolvent_ray_bound,   resolvent_distance_bound,
      interpolated_angle_table, rational_calculus_suite,
      oracle_equivalence};

  std::vector<CriterionResult> out;
  out.reserve(checks.size());
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CriterionResult r;
    try {
      r = checks[i]();
    } catch (const std::exception& ex) {
      r = {static_cast<int>(i + 1), "criterion", false, std::string("exception: ") + ex.what()};
    }
    log << "criterion " << r.id << ' ' << r.name << ": " << (r.pass ? "PASS" : "FAIL")
        << " (" << r.detail << ")" << std::endl;
    out.push_back(std::move(r));
  }
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results)
    if (!r.pass) return false;
  return results.size() == 9;
}

}  // namespace secform::acceptance
