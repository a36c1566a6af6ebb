#include "su3holo/degeneracy_limits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "su3holo/berry_curvature.hpp"
#include "su3holo/errors.hpp"
#include "su3holo/quadrature.hpp"
#include "su3holo/su3_algebra.hpp"

namespace su3holo {

GapEstimate gap_asymptotic(const Octet& xi) {
  const double norm = xi.norm();
  if (norm == 0.0) throw DegenerateInput("gap asymptotics undefined at the origin");
  const double phi = phase_angle(xi);
  const double cubic = invariants(xi).cubic;
  const double n3 = norm * norm * norm;
  const SpectralData spec = eigenvalues(xi);
  const double pi = std::numbers::pi;

  GapEstimate out;
  if (std::abs(phi - pi / 6.0) <= 0.1) {
    out.surface = DegeneracySurface::Upper;
    out.predicted = std::sqrt(2.0) / 3.0 * std::sqrt(std::max(0.0, n3 + cubic)) / std::sqrt(norm);
    out.actual = spec.e12;
  } else if (std::abs(phi - pi / 2.0) <= 0.1) {
    out.surface = DegeneracySurface::Lower;
    out.predicted = std::sqrt(2.0) / 3.0 * std::sqrt(std::max(0.0, n3 - cubic)) / std::sqrt(norm);
    out.actual = spec.e23;
  } else {
    throw std::domain_error("phi = " + std::to_string(phi) + " is not near pi/6 or pi/2");
  }
  return out;
}

SingularExpansion singular_expansion(double epsilon, double e13, Level a) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (!(epsilon < 0.1 * e13)) throw std::invalid_argument("epsilon must be small against E13");
  const double inv = 1.0 / (epsilon * epsilon);
  SingularExpansion out;
  out.level = a;
  out.epsilon = epsilon;
  out.e13 = e13;
  double sign = 0.0;
  if (a == Level::One) sign = 1.0;
  if (a == Level::Two) sign = -1.0;
  out.octet = {sign * inv / 3.0, sign * inv / 6.0, -sign * inv / 6.0};
  out.decouplet = {sign * inv / 6.0, -sign * inv / 6.0, sign * inv / 6.0};
  out.total = {out.octet.s12 + out.decouplet.s12, out.octet.s45 + out.decouplet.s45,
               out.octet.s67 + out.decouplet.s67};
  return out;
}

namespace {

double sphere_flux_at_order(const Octet& center, const std::array<Octet, 3>& frame, double radius,
                            Level a, int n, double tol) {
  const GaussLegendre theta_rule = gauss_legendre(n);
  const GaussLegendre phi_rule = gauss_legendre(2 * n);
  const double pi = std::numbers::pi;
  double flux = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = 0.5 * pi * (theta_rule.nodes[i] + 1.0);
    const double wt = 0.5 * pi * theta_rule.weights[i];
    const double st = std::sin(t), ct = std::cos(t);
    for (int j = 0; j < 2 * n; ++j) {
      const double p = pi * (phi_rule.nodes[j] + 1.0);
      const double wp = pi * phi_rule.weights[j];
      const double sp = std::sin(p), cp = std::cos(p);
      const Octet point = center + radius * (st * cp * frame[0] + st * sp * frame[1] + ct * frame[2]);
      const Octet d_theta = radius * (ct * cp * frame[0] + ct * sp * frame[1] - st * frame[2]);
      const Octet d_phi = radius * (-st * sp * frame[0] + st * cp * frame[1]);
      flux += wt * wp * curvature_spectral(point, a, tol).pair(d_theta, d_phi);
    }
  }
  return flux;
}

}  // namespace

double sphere_flux(const Octet& center, const std::array<Octet, 3>& frame, double radius, Level a,
                   double rel_tol, double tol) {
  if (!(radius > 0.0)) throw std::invalid_argument("sphere radius must be positive");
  const double target = rel_tol * 2.0 * std::numbers::pi;
  double previous = sphere_flux_at_order(center, frame, radius, a, 8, tol);
  for (int n = 16; n <= 256; n *= 2) {
    const double current = sphere_flux_at_order(center, frame, radius, a, n, tol);
    if (std::abs(current - previous) < target) return current;
    previous = current;
  }
  throw std::runtime_error("sphere flux quadrature did not converge");
}

double monopole_flux(const Octet& direction, double radius, Level a, double rel_tol) {
  if (std::abs(direction.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("monopole direction must be a unit octet");
  }
  if (std::abs(invariants(direction).cubic + 1.0) > 1e-9) {
    throw std::invalid_argument("monopole direction is not on the upper degeneracy cone");
  }
  if (!(radius > 0.0) || radius >= 0.1) {
    throw std::invalid_argument("monopole radius must lie in (0, 0.1)");
  }
  const AdjointImage d = adjoint_matrix(orbit_frame(direction));
  const std::array<Octet, 3> frame{d * unit_octet(1), d * unit_octet(2), d * unit_octet(3)};
  return sphere_flux(direction, frame, radius, a, rel_tol);
}

}  // namespace su3holo
