#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "su3holo/errors.hpp"
#include "su3holo/spectrum.hpp"

using namespace su3holo;

namespace {

const double kPi = std::numbers::pi;
const double kSqrt3 = std::numbers::sqrt3;

Octet lower_point() {
  Octet xi = Octet::Zero();
  xi(2) = kSqrt3 / 2;
  xi(7) = 0.5;
  return xi;
}

}  // namespace

TEST_CASE("phase_angle") {
  CHECK(phase_angle(unit_octet(8)) == doctest::Approx(kPi / 6));
  CHECK(phase_angle(unit_octet(3)) == doctest::Approx(kPi / 3));
  CHECK(phase_angle(lower_point()) == doctest::Approx(kPi / 2));
  CHECK_THROWS_AS(phase_angle(Octet::Zero()), DegenerateInput);

  std::mt19937_64 rng(31);
  for (int k = 0; k < 500; ++k) {
    const Octet xi = oracle::random_octet(rng);
    const double phi = phase_angle(xi);
    CHECK(phi >= kPi / 6 - 1e-15);
    CHECK(phi <= kPi / 2 + 1e-15);
    const Matrix8 d = adjoint_matrix(GroupElement(oracle::random_special_unitary(rng))).matrix();
    CHECK(std::abs(phase_angle(d * xi) - phi) < 1e-9);
  }
}

TEST_CASE("eigenvalues: worked values") {
  const SpectralData e3 = eigenvalues(unit_octet(3));
  CHECK(e3.energies[0] == doctest::Approx(0.5));
  CHECK(std::abs(e3.energies[1]) < 1e-15);
  CHECK(e3.energies[2] == doctest::Approx(-0.5));
  CHECK(e3.degeneracy == DegeneracyClass::Generic);

  const SpectralData e8 = eigenvalues(unit_octet(8));
  CHECK(e8.energies[0] == doctest::Approx(1 / (2 * kSqrt3)));
  CHECK(e8.energies[1] == doctest::Approx(1 / (2 * kSqrt3)));
  CHECK(e8.energies[2] == doctest::Approx(-1 / kSqrt3));
  CHECK(std::abs(e8.e12) < 1e-15);

  const SpectralData zero = eigenvalues(Octet::Zero());
  CHECK(zero.degeneracy == DegeneracyClass::TripleDegenerate);
  CHECK_FALSE(zero.phi.has_value());
  CHECK(zero.energies == std::array<double, 3>{0.0, 0.0, 0.0});
}

TEST_CASE("eigenvalues agree with the dense solver over six decades") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
  for (int k = 0; k < 10000; ++k) {
    Octet xi = oracle::random_octet(rng);
    xi *= std::pow(10.0, log_scale(rng)) / xi.norm();
    const SpectralData s = eigenvalues(xi);
    const Eigen::Vector3d dense = oracle::dense_eigenvalues(xi);
    for (int a = 0; a < 3; ++a) CHECK(std::abs(s.energies[a] - dense(a)) < 1e-10 * xi.norm());
    CHECK(s.energies[0] >= s.energies[1]);
    CHECK(s.energies[1] >= s.energies[2]);
    CHECK(std::abs(s.energies[0] + s.energies[1] + s.energies[2]) < 1e-12 * xi.norm());
    CHECK(std::abs(s.e13 - s.e12 - s.e23) < 1e-12 * xi.norm());
    CHECK(s.e12 >= 0.0);
    CHECK(s.e23 >= 0.0);
  }
}

TEST_CASE("classify") {
  CHECK(classify(unit_octet(8)) == DegeneracyClass::UpperDegenerate);
  CHECK(classify(-unit_octet(8)) == DegeneracyClass::LowerDegenerate);
  CHECK(classify(lower_point()) == DegeneracyClass::LowerDegenerate);
  CHECK(classify(Octet::Zero()) == DegeneracyClass::TripleDegenerate);
  CHECK(classify(unit_octet(3)) == DegeneracyClass::Generic);
  CHECK_THROWS(classify(unit_octet(3), 0.0));

  // the degeneracy cones are cubic = -|xi|^3 and cubic = +|xi|^3
  std::mt19937_64 rng(33);
  for (int k = 0; k < 200; ++k) {
    const Matrix8 d = adjoint_matrix(GroupElement(oracle::random_special_unitary(rng))).matrix();
    const double scale = std::exp(std::normal_distribution<double>(0.0, 2.0)(rng));
    const Octet up = scale * (d * unit_octet(8));
    const Octet down = scale * (d * lower_point());
    CHECK(classify(up) == DegeneracyClass::UpperDegenerate);
    CHECK(classify(down) == DegeneracyClass::LowerDegenerate);
    CHECK(invariants(up).cubic == doctest::Approx(-std::pow(up.norm(), 3)).epsilon(1e-10));
    CHECK(invariants(down).cubic == doctest::Approx(std::pow(down.norm(), 3)).epsilon(1e-10));
    // 1e-3 away from the cones the point is generic
    CHECK(classify(scale * (d * oracle::rest_point(1e-3, 1.0))) == DegeneracyClass::Generic);
    CHECK(classify(scale * (d * oracle::rest_point(1.0, 1e-3))) == DegeneracyClass::Generic);
  }
}

TEST_CASE("rest_frame") {
  Octet fixed = Octet::Zero();
  fixed(2) = 1.0;
  fixed(7) = 2.0;
  CHECK((rest_frame(fixed) - fixed).norm() < 1e-14);
  // e1 and e3 share the spectrum {1/2, 0, -1/2}, whose ordered diagonal
  // representative is (1/2) e3 + (sqrt3/2) e8
  const Octet expected = 0.5 * unit_octet(3) + 0.5 * kSqrt3 * unit_octet(8);
  CHECK((rest_frame(unit_octet(1)) - expected).norm() < 1e-14);
  CHECK((rest_frame(unit_octet(3)) - expected).norm() < 1e-14);

  std::mt19937_64 rng(34);
  for (int k = 0; k < 1000; ++k) {
    const Octet xi = oracle::random_octet(rng);
    const Octet rest = rest_frame(xi);
    for (int r : {0, 1, 3, 4, 5, 6}) CHECK(rest(r) == 0.0);
    CHECK(rest(2) >= 0.0);
    CHECK(rest(7) >= rest(2) / kSqrt3 - 1e-14);
    const Invariants a = invariants(xi), b = invariants(rest);
    CHECK(b.quadratic == doctest::Approx(a.quadratic).epsilon(1e-10));
    CHECK(std::abs(b.cubic - a.cubic) < 1e-10 * std::pow(xi.norm(), 3));
    CHECK((rest_frame(rest) - rest).cwiseAbs().maxCoeff() < 1e-10 * xi.norm());
    const SpectralData s = eigenvalues(xi);
    CHECK(rest(7) == doctest::Approx((s.e13 + s.e23) / kSqrt3).epsilon(1e-10));
    CHECK((rest_frame_from_gaps(s.e12, s.e23) - rest).cwiseAbs().maxCoeff() < 1e-12 * xi.norm());
  }
}

TEST_CASE("diagonalizer") {
  const Octet rest = oracle::rest_point(0.4, 0.9);
  CHECK((diagonalizer(rest).matrix() - Matrix3c::Identity()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(diagonalizer(unit_octet(8)), DegenerateInput);
  CHECK_THROWS_AS(diagonalizer(Octet::Zero()), DegenerateInput);

  // xi = e1: eigenvalues 1/2, 0, -1/2 with columns (|1>+|2>)/sqrt2, |3>, (|1>-|2>)/sqrt2
  const Matrix3c a1 = diagonalizer(unit_octet(1)).matrix();
  const double s2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(a1(0, 0)) - s2) < 1e-14);
  CHECK(std::abs(std::abs(a1(1, 0)) - s2) < 1e-14);
  CHECK(std::abs(std::abs(a1(2, 1)) - 1.0) < 1e-14);
  CHECK(std::abs(std::abs(a1(0, 2)) - s2) < 1e-14);
  CHECK(std::abs(a1(0, 2) + a1(1, 2)) < 1e-14);

  std::mt19937_64 rng(35);
  for (int k = 0; k < 2000; ++k) {
    const Octet xi = oracle::random_generic(rng, std::exp(std::normal_distribution<double>(0.0, 2.0)(rng)), 1e-4);
    const Matrix3c a = diagonalizer(xi).matrix();
    const Matrix3c residual =
        a.adjoint() * oracle::hamiltonian(xi) * a - oracle::hamiltonian(rest_frame(xi));
    CHECK(residual.cwiseAbs().maxCoeff() < 1e-9 * xi.norm());
    CHECK(std::abs(a.determinant() - 1.0) < 1e-10);
    CHECK((a.adjoint() * a - Matrix3c::Identity()).cwiseAbs().maxCoeff() < 1e-10);
    // gauge rule: largest entry of columns 1 and 2 is real positive
    for (int c = 0; c < 2; ++c) {
      int row = 0;
      a.col(c).cwiseAbs().maxCoeff(&row);
      CHECK(a(row, c).real() > 0.0);
      CHECK(std::abs(a(row, c).imag()) < 1e-12);
    }
  }
}

TEST_CASE("orbit_frame covers degenerate orbits") {
  std::mt19937_64 rng(36);
  for (int k = 0; k < 100; ++k) {
    const Matrix8 d = adjoint_matrix(GroupElement(oracle::random_special_unitary(rng))).matrix();
    for (const Octet& base : {Octet(unit_octet(8)), lower_point(), Octet(oracle::rest_point(0.3, 0.5))}) {
      const Octet xi = d * base;
      const Matrix3c a = orbit_frame(xi).matrix();
      const Matrix3c residual = a.adjoint() * oracle::hamiltonian(xi) * a - oracle::hamiltonian(rest_frame(xi));
      CHECK(residual.cwiseAbs().maxCoeff() < 1e-8);
    }
  }
  CHECK((orbit_frame(Octet::Zero()).matrix() - Matrix3c::Identity()).norm() == 0.0);
}
