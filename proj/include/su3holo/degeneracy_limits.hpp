#pragma once

// Behavior near the degeneracy cones: asymptotic gaps, the leading 1/eps^2
// terms of the octet and decouplet curvature parts, and monopole flux
// through small spheres in the unfolding subspace.

#include <array>

#include "su3holo/spectrum.hpp"
#include "su3holo/types.hpp"

namespace su3holo {

enum class DegeneracySurface { Upper, Lower };

struct GapEstimate {
  DegeneracySurface surface = DegeneracySurface::Upper;
  double predicted = 0.0;  // asymptotic E12 (Upper) or E23 (Lower)
  double actual = 0.0;     // closed-form gap
};

/// E12 ~ (sqrt2/3) (|xi|^3 + cubic)^(1/2) / |xi|^(1/2) near phi = pi/6 and the
/// E23 mirror with -cubic near phi = pi/2. Throws std::domain_error when phi
/// is farther than 0.1 from both ends, DegenerateInput at the origin.
GapEstimate gap_asymptotic(const Octet& xi);

/// Rest-frame slots (1,2), (4,5), (6,7) of a curvature array.
struct SlotTerms {
  double s12 = 0.0;
  double s45 = 0.0;
  double s67 = 0.0;
};

/// Leading 1/eps^2 terms of V^(a) as E12 = eps -> 0 with E13 fixed.
struct SingularExpansion {
  Level level = Level::One;
  double epsilon = 0.0;
  double e13 = 0.0;
  SlotTerms octet;
  SlotTerms decouplet;
  SlotTerms total;
};

/// Throws std::invalid_argument unless 0 < eps < 0.1 E13.
SingularExpansion singular_expansion(double epsilon, double e13, Level a);

/// Flux of V^(a) through the sphere center + radius (sin t cos p f1 +
/// sin t sin p f2 + cos t f3), oriented by (t, p). Product Gauss-Legendre in
/// (t, p), order doubled until two successive values differ by less than
/// rel_tol * 2 pi. Throws DegenerateInput if a node is not Generic.
double sphere_flux(const Octet& center, const std::array<Octet, 3>& frame, double radius, Level a,
                   double rel_tol = 1e-4, double tol = kDefaultTolerance);

/// sphere_flux around a unit direction on the upper cone (cubic = -1), with
/// the rest-frame (xi1, xi2, xi3) sphere at e8 carried to the direction by
/// the adjoint action of its orbit frame. Throws std::invalid_argument if the
/// direction is off the cone or radius >= 0.1.
double monopole_flux(const Octet& direction, double radius, Level a, double rel_tol = 1e-4);

}  // namespace su3holo
