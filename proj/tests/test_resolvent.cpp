#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "secform/eig.hpp"
#include "secform/elliptic.hpp"
#include "secform/fov.hpp"
#include "secform/resolvent.hpp"
#include "secform/rng.hpp"
#include "secform/sector.hpp"
#include "secform/types.hpp"

using namespace secform;

namespace {

const cplx I{0.0, 1.0};
const double kPi = std::acos(-1.0);
const ComplexMatrix kSkew(2, {cplx{1.0}, cplx{1.0}, cplx{-1.0}, cplx{1.0}});
const Mu2 kSkewMu = {cplx{1.0}, cplx{1.0}, cplx{-1.0}, cplx{1.0}};

ComplexMatrix random_coercive(std::uint64_t seed, std::size_t n) {
  ComplexMatrix T = rng::gaussian_matrix(seed, n);
  const double m0 = coercivity_constant(T);
  for (std::size_t i = 0; i < n; ++i) T(i, i) += cplx{std::max(0.0, -m0) + 0.3, 0.0};
  return T;
}

}  // namespace

TEST_CASE("resolvent norms of fixed matrices") {
  CHECK(resolvent_norm(ComplexMatrix(1, {cplx{1.0}}), cplx{1.0}) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK(resolvent_norm(ComplexMatrix(2, {cplx{1.0}, {}, {}, cplx{2.0}}), I) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(resolvent_norm(kSkew, cplx{0.0}) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(resolvent_norm(ComplexMatrix(2, {cplx{1.0}, {}, {}, cplx{2.0}}), cplx{-1.0}),
                  precondition_error);
}

TEST_CASE("sector-distance resolvent bound on fixed matrices") {
  SUBCASE("Hermitian nonnegative matrix, real shift") {
    const ComplexMatrix A(2, {cplx{1.0}, {}, {}, cplx{3.0}});
    const auto r = resolvent_distance_check(A, 0.0, {cplx{1.0}});
    CHECK(r.pass);
    CHECK(r.bounds[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.norms[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.max_violation <= 0.0);
  }
  SUBCASE("shift inside the sector is rejected") {
    CHECK_THROWS_AS(resolvent_distance_check(kSkew, kPi / 4, {cplx{-2.0}}), precondition_error);
  }
  SUBCASE("imaginary shift against the sharp sector") {
    const auto r = resolvent_distance_check(kSkew, kPi / 4, {cplx{0.0, 2.0}});
    CHECK(r.pass);
    CHECK(r.bounds[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(r.norms[0] <= 1.0 / std::sqrt(2.0) + 1e-8);
  }
  SUBCASE("half-angle outside [0, pi/2) is rejected") {
    CHECK_THROWS_AS(resolvent_distance_check(kSkew, kPi / 2, {cplx{0.0, 2.0}}), domain_error);
  }
}

TEST_CASE("sector-distance bound holds for random sectorial matrices") {
  for (std::uint64_t j = 0; j < 20; ++j) {
    const std::size_t n = 2 + j % 7;
    const ComplexMatrix A = random_coercive(rng::substream(0x4E50ULL, j), n);
    const double kappa = containment_half_angle(A);
    std::vector<cplx> lambdas;
    for (std::uint64_t k = 0; k < 10; ++k) {
      const double beta =
          kappa + 0.05 + (kPi - kappa - 0.05) * rng::uniform01(rng::substream(0x4E51ULL, j), 3 * k);
      const double sign =
          rng::uniform01(rng::substream(0x4E51ULL, j), 3 * k + 1) < 0.5 ? -1.0 : 1.0;
      const double r =
          std::pow(10.0, 4.0 * rng::uniform01(rng::substream(0x4E51ULL, j), 3 * k + 2) - 2.0);
      lambdas.push_back(-std::polar(r, sign * beta));
    }
    const auto rep = resolvent_distance_check(A, kappa, lambdas);
    CHECK(rep.pass);
  }
}

TEST_CASE("log-spaced radii") {
  const auto one = log_spaced(2.0, 5.0, 1);
  CHECK(one.size() == 1);
  CHECK(one[0] == 2.0);

  const auto r = log_spaced(1.0, 100.0, 3);
  CHECK(r.size() == 3);
  CHECK(r[0] == 1.0);
  CHECK(r[1] == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(r[2] == 100.0);

  CHECK_THROWS_AS(log_spaced(-1.0, 1.0, 4), domain_error);
  CHECK_THROWS_AS(log_spaced(1.0, 2.0, 0), domain_error);
}

TEST_CASE("ray scans of assembled operators") {
  SUBCASE("sharp-field operator passes above its half-angle") {
    const Grid g(8, 8, 1.0, 1.0);
    const auto form =
        assemble(g, CoefficientField::constant(kSkewMu), BoundarySpec::all_dirichlet());
    const auto scan = ray_scan(form, kPi / 4 + 0.3, 5, log_spaced(1e-2, 1e2, 7));
    CHECK(scan.pass);
    CHECK(scan.max_violation <= 0.0 + 1e-8);
    CHECK(scan.lambdas.size() == 35);
    CHECK(scan.bound_constant ==
          doctest::Approx(resolvent_constant(kPi / 4 + 0.3, 1.0, std::sqrt(2.0))).epsilon(1e-13));
  }
  SUBCASE("Hermitian operator at the half-plane angle") {
    const Grid g(6, 6, 1.0, 1.0);
    const auto form =
        assemble(g, CoefficientField::named("identity"), BoundarySpec::all_dirichlet());
    const auto scan = ray_scan(form, kPi / 2, 5, log_spaced(1e-1, 1e3, 5));
    CHECK(scan.pass);
    CHECK(scan.bound_constant == doctest::Approx(1.0).epsilon(1e-13));
    for (std::size_t k = 0; k < scan.lambdas.size(); ++k)
      CHECK(scan.norms[k] * std::abs(scan.lambdas[k]) <= 1.0 + 1e-8);
  }
  SUBCASE("scalar operator") {
    AssembledForm form;
    form.A_full = ComplexMatrix(1, {cplx{1.0}});
    form.A = form.A_full;
    form.free_nodes = {0};
    form.field_angles = make_sector_angles(1.0, 1.0);
    const auto scan = ray_scan(form, kPi / 2, 3, {1.0});
    CHECK(scan.pass);
    for (double nrm : scan.norms) CHECK(nrm <= 1.0 + 1e-12);
  }
  SUBCASE("angle at or below the field half-angle is rejected") {
    const Grid g(3, 3, 1.0, 1.0);
    const auto form =
        assemble(g, CoefficientField::constant(kSkewMu), BoundarySpec::all_dirichlet());
    CHECK_THROWS_AS(ray_scan(form, kPi / 4, 5, {1.0}), domain_error);
    CHECK_THROWS_AS(ray_scan(form, kPi / 2 + 0.1, 5, {1.0}), domain_error);
  }
  SUBCASE("fully clamped single cell has no free nodes") {
    const auto form = assemble(Grid(1, 1, 1.0, 1.0), CoefficientField::named("identity"),
                               BoundarySpec::all_dirichlet());
    CHECK_THROWS_AS(ray_scan(form, kPi / 2, 3, {1.0}), precondition_error);
  }
}

TEST_CASE("named rational functions") {
  const auto ids = rational_function_ids();
  CHECK(ids.size() == 3);

  CHECK(std::abs(rational_value("z/(1+z)^2", cplx{1.0}) - cplx{0.25}) < 1e-15);
  CHECK(std::abs(rational_value("z^2/(1+z)^3", cplx{1.0}) - cplx{0.125}) < 1e-15);
  CHECK(std::abs(rational_value("1/(1+z)-1/(2+z)", cplx{0.0}) - cplx{0.5}) < 1e-15);
  CHECK_THROWS_AS(rational_value("z", cplx{1.0}), domain_error);

  SUBCASE("matrix evaluation of the first function on a fixed matrix") {
    // A (I+A)^{-2} for the rotation-like matrix, by hand: (1/25) [[7,-1],[1,7]]
    const ComplexMatrix F = rational_apply("z/(1+z)^2", kSkew);
    CHECK(std::abs(F(0, 0) - cplx{7.0 / 25}) < 1e-12);
    CHECK(std::abs(F(0, 1) - cplx{-1.0 / 25}) < 1e-12);
    CHECK(std::abs(F(1, 0) - cplx{1.0 / 25}) < 1e-12);
    CHECK(std::abs(F(1, 1) - cplx{7.0 / 25}) < 1e-12);
    CHECK(operator_norm(F) == doctest::Approx(std::sqrt(2.0) / 5).epsilon(1e-12));
  }

  SUBCASE("diagonal matrices reduce to scalar evaluation") {
    for (const std::string& id : ids) {
      const ComplexMatrix A(3, {cplx{0.5}, {}, {}, {}, cplx{1.0}, {}, {}, {}, cplx{4.0}});
      const ComplexMatrix F = rational_apply(id, A);
      double expect = 0.0;
      for (double a : {0.5, 1.0, 4.0}) expect = std::max(expect, std::abs(rational_value(id, a)));
      CHECK(operator_norm(F) == doctest::Approx(expect).epsilon(1e-10));
    }
  }
}

TEST_CASE("rational calculus bound on fixed matrices") {
  SUBCASE("scalar") {
    const auto r = rational_calculus_check(ComplexMatrix(1, {cplx{1.0}}), 0.0, 0.1, "z/(1+z)^2");
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(r.rhs >= functional_calculus_constant() * 0.25 - 1e-9);
  }
  SUBCASE("diagonal") {
    const auto r = rational_calculus_check(ComplexMatrix(2, {cplx{1.0}, {}, {}, cplx{4.0}}), 0.0,
                                           0.1, "z/(1+z)^2");
    CHECK(r.pass);
    CHECK(r.lhs == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("sharp-angle matrix") {
    for (const std::string& id : rational_function_ids()) {
      const auto r = rational_calculus_check(kSkew, kPi / 4, 0.05, id);
      CHECK(r.pass);
    }
  }
  SUBCASE("difference function keeps its value at the origin") {
    const auto r = rational_calculus_check(ComplexMatrix(1, {cplx{1.0}}), 0.0, 0.1,
                                           "1/(1+z)-1/(2+z)");
    CHECK(r.lhs == doctest::Approx(1.0 / 6).epsilon(1e-12));
    CHECK(r.rhs >= functional_calculus_constant() * 0.5 - 1e-9);
    CHECK(r.pass);
  }
  SUBCASE("sector hypothesis is enforced") {
    CHECK_THROWS_AS(rational_calculus_check(kSkew, 0.1, 0.05, "z/(1+z)^2"), precondition_error);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(rational_calculus_check(kSkew, kPi / 4, 0.0, "z/(1+z)^2"), domain_error);
    CHECK_THROWS_AS(rational_calculus_check(kSkew, kPi / 4, kPi, "z/(1+z)^2"), domain_error);
    CHECK_THROWS_AS(rational_calculus_check(kSkew, kPi / 4, 0.05, "sin(z)"), domain_error);
  }
}

TEST_CASE("rational calculus bound on random sectorial matrices") {
  for (std::uint64_t j = 0; j < 15; ++j) {
    const std::size_t n = 2 + j % 6;
    const ComplexMatrix A = random_coercive(rng::substream(0x4E52ULL, j), n);
    const double kappa = containment_half_angle(A);
    const double eps = std::min(0.05, 0.5 * (kPi / 2 - kappa));
    for (const std::string& id : rational_function_ids()) {
      const auto r = rational_calculus_check(A, kappa, eps, id, 500);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("functional calculus constant value") {
  CHECK(functional_calculus_constant() ==
        doctest::Approx(2.0 + 2.0 / std::sqrt(3.0)).epsilon(1e-15));
}
