#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "su3holo/errors.hpp"
#include "su3holo/hermitian.hpp"
#include "su3holo/su3_algebra.hpp"

using namespace su3holo;

namespace {

HermitianMatrix herm(const Eigen::MatrixXcd& m) { return HermitianMatrix(m); }

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("HermitianMatrix rejects non-Hermitian input") {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(HermitianMatrix{m}, std::invalid_argument);
  CHECK_THROWS_AS(HermitianMatrix{Eigen::MatrixXcd::Zero(2, 3)}, std::invalid_argument);
  m(1, 0) = 1.0;
  CHECK_NOTHROW(HermitianMatrix{m});
}

TEST_CASE("hermitian_basis size, hermiticity and independence") {
  CHECK_THROWS(hermitian_basis(0));
  const auto b1 = hermitian_basis(1);
  REQUIRE(b1.size() == 1);
  CHECK(b1[0](0, 0) == Complex(1.0, 0.0));

  for (int n = 1; n <= 4; ++n) {
    const auto basis = hermitian_basis(n);
    REQUIRE(static_cast<int>(basis.size()) == n * n);
    Eigen::MatrixXd gram(n * n, n * n);
    for (int p = 0; p < n * n; ++p) {
      CHECK(max_abs(basis[p].matrix() - basis[p].matrix().adjoint()) == 0.0);
      for (int q = 0; q < n * n; ++q) gram(p, q) = trace_inner(basis[p], basis[q]);
    }
    CHECK(std::abs(gram.determinant()) > 1e-6);
  }

  const auto b2 = hermitian_basis(2);
  // order: E11, E22, E12, E'12
  const Complex i{0.0, 1.0};
  CHECK(b2[3](0, 1) == i);
  CHECK(b2[3](1, 0) == -i);
}

TEST_CASE("n = 3 basis spans the Gell-Mann matrices; lambda2 = -E'12") {
  const auto basis = hermitian_basis(3);
  Eigen::MatrixXcd a(9, 9);
  for (int p = 0; p < 9; ++p) a.col(p) = Eigen::Map<const Eigen::VectorXcd>(basis[p].matrix().data(), 9);
  for (int r = 1; r <= 8; ++r) {
    const Eigen::VectorXcd target = Eigen::Map<const Eigen::VectorXcd>(gellmann(r).data(), 9);
    const Eigen::VectorXcd coeff = a.colPivHouseholderQr().solve(target);
    CHECK((a * coeff - target).norm() < 1e-12);
    CHECK(coeff.imag().norm() < 1e-12);
  }
  CHECK(max_abs(gellmann(2) + basis[6].matrix()) < 1e-15);
}

TEST_CASE("jordan_product") {
  std::mt19937_64 rng(11);
  const HermitianMatrix h = herm(oracle::random_hermitian(rng, 3));
  CHECK(max_abs(jordan_product(HermitianMatrix::identity(3), h).matrix() - h.matrix()) < 1e-15);

  const HermitianMatrix l3 = herm(gellmann(3));
  const Eigen::MatrixXcd expected =
      (2.0 / 3.0) * Eigen::MatrixXcd::Identity(3, 3) + (1.0 / std::sqrt(3.0)) * gellmann(8);
  CHECK(max_abs(jordan_product(l3, l3).matrix() - expected) < 1e-15);

  for (int k = 0; k < 50; ++k) {
    const HermitianMatrix a = herm(oracle::random_hermitian(rng, 4));
    const HermitianMatrix b = herm(oracle::random_hermitian(rng, 4));
    const Eigen::MatrixXcd direct = 0.5 * (a.matrix() * b.matrix() + b.matrix() * a.matrix());
    CHECK(max_abs(jordan_product(a, b).matrix() - direct) < 1e-12);
    CHECK(max_abs(jordan_product(a, b).matrix() - jordan_product(b, a).matrix()) < 1e-15);
  }
  CHECK_THROWS_AS(jordan_product(HermitianMatrix::zero(2), HermitianMatrix::zero(3)), DimensionMismatch);
}

TEST_CASE("lie_wedge") {
  std::mt19937_64 rng(12);
  const HermitianMatrix h = herm(oracle::random_hermitian(rng, 3));
  CHECK(max_abs(lie_wedge(h, h).matrix()) < 1e-15);
  CHECK(max_abs(lie_wedge(HermitianMatrix::identity(3), h).matrix()) < 1e-15);
  const Eigen::MatrixXcd w12 = lie_wedge(herm(gellmann(1)), herm(gellmann(2))).matrix();
  CHECK(max_abs(w12 + 2.0 * Eigen::MatrixXcd(gellmann(3))) < 1e-15);

  for (int k = 0; k < 50; ++k) {
    const HermitianMatrix a = herm(oracle::random_hermitian(rng, 3));
    const HermitianMatrix b = herm(oracle::random_hermitian(rng, 3));
    const HermitianMatrix c = herm(oracle::random_hermitian(rng, 3));
    CHECK(max_abs(lie_wedge(a, b).matrix() + lie_wedge(b, a).matrix()) < 1e-14);
    const Eigen::MatrixXcd jacobi = lie_wedge(a, lie_wedge(b, c)).matrix() +
                                    lie_wedge(b, lie_wedge(c, a)).matrix() +
                                    lie_wedge(c, lie_wedge(a, b)).matrix();
    CHECK(max_abs(jacobi) < 1e-12);
    // H1 H2 = jordan - (i/2) wedge
    const Eigen::MatrixXcd product = jordan_product(a, b).matrix() - Complex(0.0, 0.5) * lie_wedge(a, b).matrix();
    CHECK(max_abs(product - a.matrix() * b.matrix()) < 1e-12);
  }
  CHECK_THROWS_AS(lie_wedge(HermitianMatrix::zero(2), HermitianMatrix::zero(3)), DimensionMismatch);
}

TEST_CASE("trace_inner") {
  for (int r = 1; r <= 8; ++r) {
    for (int s = 1; s <= 8; ++s) {
      CHECK(trace_inner(herm(gellmann(r)), herm(gellmann(s))) == doctest::Approx(r == s ? 2.0 : 0.0));
    }
  }
  std::mt19937_64 rng(13);
  const HermitianMatrix h = herm(oracle::random_hermitian(rng, 3));
  CHECK(trace_inner(h, HermitianMatrix::zero(3)) == 0.0);
  for (int k = 0; k < 100; ++k) {
    const HermitianMatrix a = herm(oracle::random_hermitian(rng, 3));
    const HermitianMatrix b = herm(oracle::random_hermitian(rng, 3));
    const Eigen::MatrixXcd u = oracle::random_unitary(rng, 3);
    CHECK(trace_inner(a, b) == doctest::Approx(trace_inner(b, a)).epsilon(1e-14));
    CHECK(trace_inner(conjugated(a, u), conjugated(b, u)) == doctest::Approx(trace_inner(a, b)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(trace_inner(HermitianMatrix::zero(2), HermitianMatrix::zero(3)), DimensionMismatch);
}

TEST_CASE("char_poly_coeffs") {
  const auto zero = char_poly_coeffs(HermitianMatrix::zero(3));
  CHECK(zero == std::vector<double>{0.0, 0.0, 0.0});
  const auto one = char_poly_coeffs(HermitianMatrix::identity(3));
  CHECK(one[0] == doctest::Approx(-3.0));
  CHECK(one[1] == doctest::Approx(3.0));
  CHECK(one[2] == doctest::Approx(-1.0));

  std::mt19937_64 rng(14);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < 20; ++k) {
      const Eigen::MatrixXcd m = oracle::random_hermitian(rng, n);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
      // expand prod (x - e_j)
      std::vector<double> poly{1.0};
      for (int j = 0; j < n; ++j) {
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t q = 0; q < poly.size(); ++q) {
          next[q] += poly[q];
          next[q + 1] -= solver.eigenvalues()(j) * poly[q];
        }
        poly = next;
      }
      const auto c = char_poly_coeffs(herm(m));
      REQUIRE(static_cast<int>(c.size()) == n);
      for (int q = 0; q < n; ++q) CHECK(c[q] == doctest::Approx(poly[q + 1]).epsilon(1e-10).scale(1.0));
      // determinant route: P(x) = (-1)^n det(H - x I)
      const double x = 0.37;
      double p = std::pow(x, n);
      for (int q = 0; q < n; ++q) p += c[q] * std::pow(x, n - 1 - q);
      const double det = ((m - x * Eigen::MatrixXcd::Identity(n, n)).determinant() * std::pow(-1.0, n)).real();
      CHECK(p == doctest::Approx(det).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("conjugation invariance of trace pairing and characteristic polynomial") {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 1000; ++k) {
    const HermitianMatrix h = herm(oracle::random_hermitian(rng, 3));
    const HermitianMatrix g = conjugated(h, oracle::random_unitary(rng, 3));
    CHECK(trace_inner(g, g) == doctest::Approx(trace_inner(h, h)).epsilon(1e-10));
    const auto ch = char_poly_coeffs(h);
    const auto cg = char_poly_coeffs(g);
    for (int q = 0; q < 3; ++q) CHECK(std::abs(cg[q] - ch[q]) <= 1e-10 * std::max(1.0, std::abs(ch[q])));
  }
}

TEST_CASE("orbit_type signatures and shift invariance") {
  std::mt19937_64 rng(16);
  const HermitianMatrix generic = herm(oracle::random_hermitian(rng, 3));
  const OrbitDescriptor g = orbit_type(generic, 1e-9);
  CHECK(g.multiplicities == std::vector<int>{1, 1, 1});
  CHECK(g.stabilizer == std::vector<int>{1, 1, 1});
  CHECK(g.orbit_dimension == 6);

  Eigen::Vector3cd psi(Complex(0.3, 0.1), Complex(-0.5, 0.2), Complex(0.4, -0.6));
  psi.normalize();
  const OrbitDescriptor pure = orbit_type(herm(psi * psi.adjoint()), 1e-9);
  CHECK(pure.multiplicities == std::vector<int>{2, 1});
  CHECK(pure.orbit_dimension == 4);

  const OrbitDescriptor scalar = orbit_type(herm(2.5 * Eigen::MatrixXcd::Identity(3, 3)), 1e-9);
  CHECK(scalar.multiplicities == std::vector<int>{3});
  CHECK(scalar.orbit_dimension == 0);

  std::uniform_real_distribution<double> shift(-100.0, 100.0);
  for (int k = 0; k < 100; ++k) {
    const Eigen::MatrixXcd m = oracle::random_hermitian(rng, 3);
    const double c = shift(rng);
    const auto base = orbit_type(herm(m), 1e-9);
    const auto shifted = orbit_type(herm(m + c * Eigen::MatrixXcd::Identity(3, 3)), 1e-9);
    CHECK(base.multiplicities == shifted.multiplicities);
    const auto pb = orbit_type(herm(psi * psi.adjoint()), 1e-9);
    const auto ps = orbit_type(herm(psi * psi.adjoint() + c * Eigen::MatrixXcd::Identity(3, 3)), 1e-9);
    CHECK(pb.multiplicities == ps.multiplicities);
  }

  CHECK(orbit_dimension({1, 1, 1}) == 6);
  CHECK(orbit_dimension({2, 1}) == 4);
  CHECK(orbit_dimension({3}) == 0);
}

TEST_CASE("same_orbit") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 50; ++k) {
    const HermitianMatrix h = herm(oracle::random_hermitian(rng, 3));
    CHECK(same_orbit(h, conjugated(h, oracle::random_unitary(rng, 3)), 1e-10));
    CHECK(same_orbit(h, h, 1e-12));
  }
  CHECK_FALSE(same_orbit(herm(gellmann(3)), herm(gellmann(8)), 1e-6));
  CHECK_THROWS_AS(same_orbit(HermitianMatrix::zero(2), HermitianMatrix::zero(3), 1e-9), DimensionMismatch);
}
