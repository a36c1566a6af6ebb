#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "su3holo/kernels.hpp"
#include "su3holo/spectrum.hpp"
#include "su3holo/su3_algebra.hpp"

using namespace su3holo;
using namespace su3holo::kernels;

namespace {

std::vector<Octet> sample_points(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
  std::vector<Octet> points;
  for (std::size_t k = 0; k < n; ++k) points.push_back(oracle::random_octet(rng, std::pow(10.0, log_scale(rng))));
  return points;
}

}  // namespace

TEST_CASE("cubic kernel matches the d-symbol contraction") {
  std::mt19937_64 rng(91);
  for (int k = 0; k < 1000; ++k) {
    const Octet xi = oracle::random_octet(rng);
    CHECK(cubic_invariant(xi) == doctest::Approx(invariants(xi).cubic).epsilon(1e-12));
  }
  CHECK(cubic_invariant(unit_octet(8)) == doctest::Approx(-1.0));
  CHECK(cubic_invariant(unit_octet(3)) == 0.0);
}

TEST_CASE("scalar spectrum kernel matches the spectrum module") {
  std::mt19937_64 rng(92);
  for (const Octet& xi : sample_points(rng, 1000)) {
    const ClosedFormSpectrum c = closed_form_spectrum(xi);
    const SpectralData s = eigenvalues(xi);
    const double scale = xi.norm();
    CHECK(std::abs(c.e1 - s.energies[0]) < 1e-13 * scale);
    CHECK(std::abs(c.e2 - s.energies[1]) < 1e-13 * scale);
    CHECK(std::abs(c.e3 - s.energies[2]) < 1e-13 * scale);
    CHECK(std::abs(c.phi - phase_angle(xi)) < 1e-12);
  }
  const ClosedFormSpectrum zero = closed_form_spectrum(Octet::Zero());
  CHECK(zero.e1 == 0.0);
  CHECK(zero.phi == 0.0);
}

TEST_CASE("AVX2 spectra equal scalar spectra") {
  if (!avx2_available()) {
    MESSAGE("AVX2 unavailable; scalar path only");
    CHECK(best_backend() == Backend::Scalar);
    return;
  }
  CHECK(best_backend() == Backend::Avx2);
  std::mt19937_64 rng(93);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 1023u}) {
    std::vector<Octet> points = sample_points(rng, n);
    if (n > 2) {
      points[0] = Octet::Zero();
      points[1] = unit_octet(8);
      points[2] = -unit_octet(8);
    }
    std::vector<ClosedFormSpectrum> scalar(n), avx(n);
    closed_form_spectra(points, scalar, Backend::Scalar);
    closed_form_spectra(points, avx, Backend::Avx2);
    for (std::size_t k = 0; k < n; ++k) {
      const double scale = std::max(1e-300, points[k].norm());
      CHECK(std::abs(avx[k].norm - scalar[k].norm) <= 1e-14 * scale);
      CHECK(std::abs(avx[k].cubic - scalar[k].cubic) <= 1e-13 * scale * scale * scale);
      CHECK(std::abs(avx[k].phi - scalar[k].phi) <= 1e-10);
      CHECK(std::abs(avx[k].e1 - scalar[k].e1) <= 1e-12 * scale);
      CHECK(std::abs(avx[k].e2 - scalar[k].e2) <= 1e-12 * scale);
      CHECK(std::abs(avx[k].e3 - scalar[k].e3) <= 1e-12 * scale);
      CHECK(std::abs(avx[k].e12 - scalar[k].e12) <= 1e-12 * scale);
      CHECK(std::abs(avx[k].e23 - scalar[k].e23) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("congruence kernels") {
  std::mt19937_64 rng(94);
  for (int k = 0; k < 100; ++k) {
    const Matrix8 d = adjoint_matrix(random_group_element(rng)).matrix();
    Matrix8 v = Matrix8::Random();
    v = v - v.transpose();
    const Matrix8 reference = d * v * d.transpose();
    const Matrix8 scalar = congruence(d, v, Backend::Scalar);
    CHECK((scalar - reference).cwiseAbs().maxCoeff() < 1e-14);
    if (avx2_available()) {
      const Matrix8 avx = congruence(d, v, Backend::Avx2);
      CHECK((avx - scalar).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("batched spectra reject mismatched spans") {
  std::vector<Octet> points(3, unit_octet(3));
  std::vector<ClosedFormSpectrum> out(2);
  CHECK_THROWS(closed_form_spectra(points, out));
}
