#pragma once

// Closed-form spectral data of H(0, xi): invariant angle, ordered
// eigenvalues, gaps, degeneracy class, rest frame and a gauge-fixed
// diagonalizer in SU(3).

#include <array>
#include <optional>
#include <string_view>

#include "su3holo/su3_algebra.hpp"
#include "su3holo/types.hpp"

namespace su3holo {

/// Default relative classification tolerance. Gaps computed from the
/// invariants are square-root conditioned near the degeneracy cones, which
/// puts their rounding floor around 1e-8 |xi|.
inline constexpr double kDefaultTolerance = 1e-6;

enum class DegeneracyClass { Generic, UpperDegenerate, LowerDegenerate, TripleDegenerate };

/// snake_case names used in machine-readable output.
std::string_view to_string(DegeneracyClass c);

struct SpectralData {
  std::array<double, 3> energies{};  // E1 >= E2 >= E3, summing to zero
  std::optional<double> phi;         // empty at xi = 0
  double e12 = 0.0;
  double e23 = 0.0;
  double e13 = 0.0;
  DegeneracyClass degeneracy = DegeneracyClass::TripleDegenerate;

  double gap(Level a, Level b) const { return energies[index(a)] - energies[index(b)]; }
};

/// Unique phi in [pi/6, pi/2] with sin(3 phi) = -(xi*xi).xi / |xi|^3.
/// Throws DegenerateInput for the zero vector.
double phase_angle(const Octet& xi);

SpectralData eigenvalues(const Octet& xi, double tol = kDefaultTolerance);

/// TripleDegenerate if |xi| <= tol, UpperDegenerate if E12 <= tol |xi|,
/// LowerDegenerate if E23 <= tol |xi|, Generic otherwise.
DegeneracyClass classify(const Octet& xi, double tol = kDefaultTolerance);

/// Diagonal representative (0,0,E12,0,0,0,0,-sqrt3 E3) of the orbit of xi.
Octet rest_frame(const Octet& xi);

/// Rest-frame octet built from two gaps: xi3 = E12, xi8 = (E13 + E23)/sqrt3.
Octet rest_frame_from_gaps(double e12, double e23);

/// Some A in SU(3) with A^dagger H(xi) A = H(rest_frame(xi)), for any xi.
/// Columns inside a degenerate eigenspace are an arbitrary orthonormal
/// completion; on generic input this equals diagonalizer(xi).
GroupElement orbit_frame(const Octet& xi, double tol = kDefaultTolerance);

/// Gauge-fixed eigenvector matrix for a simple spectrum. Columns are
/// eigenvectors in descending eigenvalue order; the phases of columns 1 and 2
/// make their largest-magnitude entry (lowest row on ties) real positive and
/// column 3 is fixed by det A = 1. Throws DegenerateInput unless Generic.
GroupElement diagonalizer(const Octet& xi, double tol = kDefaultTolerance);

}  // namespace su3holo
