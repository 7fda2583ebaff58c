#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "secform/eig.hpp"
#include "secform/fov.hpp"
#include "secform/rng.hpp"
#include "secform/sector.hpp"
#include "secform/types.hpp"

using namespace secform;

namespace {

const double kPi = std::acos(-1.0);
const ComplexMatrix kSkew(2, {cplx{1.0}, cplx{1.0}, cplx{-1.0}, cplx{1.0}});

ComplexMatrix random_coercive(std::uint64_t seed, std::size_t n) {
  ComplexMatrix T = rng::gaussian_matrix(seed, n);
  const double m0 = coercivity_constant(T);
  for (std::size_t i = 0; i < n; ++i) T(i, i) += cplx{std::max(0.0, -m0) + 0.2, 0.0};
  return T;
}

}  // namespace

TEST_CASE("support points of fixed matrices") {
  const ComplexMatrix D(2, {cplx{1.0}, {}, {}, cplx{3.0}});
  SUBCASE("rightmost point of a diagonal matrix") {
    const auto [h, p] = support_point(D, 0.0);
    CHECK(h == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(std::abs(p - cplx{3.0}) < 1e-12);
  }
  SUBCASE("leftmost point of a diagonal matrix") {
    const auto [h, p] = support_point(D, kPi);
    CHECK(h == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(std::abs(p - cplx{1.0}) < 1e-12);
  }
  SUBCASE("top of the rotation-like matrix") {
    const auto [h, p] = support_point(kSkew, kPi / 2);
    CHECK(h == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(p - cplx{1.0, 1.0}) < 1e-10);
  }
}

TEST_CASE("boundary of fixed matrices") {
  SUBCASE("Hermitian range is a real segment") {
    const ComplexMatrix D(2, {cplx{1.0}, {}, {}, cplx{3.0}});
    const FovBoundary fov = fov_boundary(D, 64);
    for (const cplx& p : fov.points) {
      CHECK(std::abs(p.imag()) < 1e-12);
      CHECK(p.real() >= 1.0 - 1e-12);
      CHECK(p.real() <= 3.0 + 1e-12);
    }
  }
  SUBCASE("rotation-like matrix gives a vertical segment") {
    const FovBoundary fov = fov_boundary(kSkew, 360);
    for (const cplx& p : fov.points) {
      CHECK(std::abs(p.real() - 1.0) < 1e-8);
      CHECK(p.imag() >= -1.0 - 1e-8);
      CHECK(p.imag() <= 1.0 + 1e-8);
    }
  }
  SUBCASE("scalar matrix collapses to a point") {
    const FovBoundary fov = fov_boundary(ComplexMatrix::identity(3), 16);
    for (const cplx& p : fov.points) CHECK(std::abs(p - cplx{1.0}) < 1e-12);
  }
  SUBCASE("angle grid too coarse") {
    CHECK_THROWS_AS(fov_boundary(kSkew, 7), domain_error);
  }
}

TEST_CASE("support consistency and convexity on random matrices") {
  for (std::uint64_t j = 0; j < 12; ++j) {
    const std::size_t n = 2 + j % 7;
    const ComplexMatrix T = rng::gaussian_matrix(rng::substream(0xF0F1ULL, j), n);
    const double scale = operator_norm(T);
    const FovBoundary fov = fov_boundary(T, 128);

    for (std::size_t k = 0; k < fov.angles.size(); ++k) {
      const cplx rot = std::polar(1.0, -fov.angles[k]) * fov.points[k];
      CHECK(std::abs(rot.real() - fov.support[k]) <= 1e-9 * std::max(1.0, scale));
    }

    // boundary points, taken in angle order, wind counterclockwise
    const std::size_t N = fov.points.size();
    for (std::size_t k = 0; k < N; ++k) {
      const cplx a = fov.points[k];
      const cplx b = fov.points[(k + 1) % N];
      const cplx c = fov.points[(k + 2) % N];
      const cplx e1 = b - a;
      const cplx e2 = c - b;
      const double cross = e1.real() * e2.imag() - e1.imag() * e2.real();
      CHECK(cross >= -1e-9 * std::max(1.0, scale * scale));
    }
  }
}

TEST_CASE("translation covariance of the boundary") {
  const ComplexMatrix T = rng::gaussian_matrix(0xABCDULL, 5);
  for (std::uint64_t j = 0; j < 5; ++j) {
    const cplx c = rng::complex_gaussian(0xDCBAULL, j);
    ComplexMatrix Tc = T;
    for (std::size_t i = 0; i < 5; ++i) Tc(i, i) += c;
    const FovBoundary a = fov_boundary(T, 96);
    const FovBoundary b = fov_boundary(Tc, 96);
    for (std::size_t k = 0; k < a.points.size(); ++k)
      CHECK(std::abs(b.points[k] - (a.points[k] + c)) < 1e-8);
  }
}

TEST_CASE("sector containment reports") {
  SUBCASE("sharp sector passes, a slightly smaller one fails") {
    const auto ok = verify_sector_containment(kSkew, kPi / 4, 720);
    CHECK(ok.pass);
    CHECK(ok.max_arg == doctest::Approx(kPi / 4).epsilon(1e-6));
    const auto bad = verify_sector_containment(kSkew, kPi / 4 - 0.01, 720);
    CHECK_FALSE(bad.pass);
  }
  SUBCASE("positive scalar matrix fits in the degenerate sector") {
    CHECK(verify_sector_containment(ComplexMatrix::identity(2), 0.0, 32).pass);
  }
  SUBCASE("random coercive matrices fit the induced sector") {
    for (std::uint64_t j = 0; j < 10; ++j) {
      const ComplexMatrix T = random_coercive(rng::substream(0xF0F2ULL, j), 2 + j % 5);
      const double m = coercivity_constant(T);
      const double nrm = operator_norm(T);
      const double theta = std::atan(std::sqrt(nrm * nrm - m * m) / m);
      CHECK(verify_sector_containment(T, theta, 256).pass);
    }
  }
}

TEST_CASE("random unit-vector samples land inside the support hull") {
  SUBCASE("fixed matrices") {
    for (const cplx& z : brute_force_fov_sample(ComplexMatrix::identity(3), 50, 7))
      CHECK(std::abs(z - cplx{1.0}) < 1e-12);
    for (const cplx& z : brute_force_fov_sample(ComplexMatrix(2, {{}, {}, {}, cplx{1.0}}), 50, 7)) {
      CHECK(std::abs(z.imag()) < 1e-12);
      CHECK(z.real() >= -1e-12);
      CHECK(z.real() <= 1.0 + 1e-12);
    }
    for (const cplx& z : brute_force_fov_sample(kSkew, 100, 11)) {
      CHECK(std::abs(z.real() - 1.0) < 1e-12);
      CHECK(std::abs(z.imag()) <= 1.0 + 1e-12);
    }
  }
  SUBCASE("random matrices") {
    for (std::uint64_t j = 0; j < 10; ++j) {
      const std::size_t n = 2 + j % 7;
      const ComplexMatrix T = rng::gaussian_matrix(rng::substream(0xF0F3ULL, j), n);
      const FovBoundary fov = fov_boundary(T, 180);
      const double tol = 1e-8 * std::max(1.0, operator_norm(T));
      for (const cplx& z : brute_force_fov_sample(T, 60, 1000 + j)) CHECK(hull_contains(fov, z, tol));
    }
  }
  SUBCASE("sampling is reproducible") {
    const auto a = brute_force_fov_sample(kSkew, 10, 42);
    const auto b = brute_force_fov_sample(kSkew, 10, 42);
    for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k] == b[k]);
  }
}

TEST_CASE("certified containment half-angle") {
  SUBCASE("sharp value for the rotation-like matrix") {
    const double kappa = containment_half_angle(kSkew);
    CHECK(kappa == doctest::Approx(kPi / 4).epsilon(1e-9));
    CHECK(sector_support_margin(kSkew, kappa) <= 0.0);
  }
  SUBCASE("certificate holds on random coercive matrices") {
    for (std::uint64_t j = 0; j < 15; ++j) {
      const ComplexMatrix T = random_coercive(rng::substream(0xF0F4ULL, j), 2 + j % 6);
      const double kappa = containment_half_angle(T);
      CHECK(kappa < kPi / 2);
      CHECK(sector_support_margin(T, kappa) <= 0.0);
      // the sampled boundary agrees within grid resolution
      const auto rep = verify_sector_containment(T, kappa, 720);
      CHECK(rep.max_arg <= kappa + 1e-8);
    }
  }
  SUBCASE("non-coercive matrix has no certificate") {
    const ComplexMatrix T(2, {cplx{-1.0}, {}, {}, cplx{1.0}});
    CHECK_THROWS_AS(containment_half_angle(T), precondition_error);
  }
}
