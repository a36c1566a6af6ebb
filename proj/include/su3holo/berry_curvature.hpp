#pragma once

// Geometric-phase curvature two-forms V^(a) of the three levels of H(xi),
// evaluated by the spectral sum, by covariant transport of the rest-frame
// table, and combined into the energy-weighted sum rule.

#include "su3holo/spectrum.hpp"
#include "su3holo/su3_algebra.hpp"
#include "su3holo/types.hpp"

namespace su3holo {

/// V^(a) = (1/2) V_rs dxi_r ^ dxi_s with V_rs stored antisymmetrized.
struct CurvatureTwoForm {
  Level level = Level::One;
  Matrix8 coefficients = Matrix8::Zero();

  /// (1/2) V_rs u_r w_s - (r <-> s) = u . V . w
  double pair(const Octet& u, const Octet& w) const { return u.dot(coefficients * w); }
};

/// V_rs = (1/4) Im sum_{b != a} [<a|l_r|b><b|l_s|a> - (r <-> s)] / E_ab^2 with the
/// gauge-fixed diagonalizer. Throws DegenerateInput unless Generic.
CurvatureTwoForm curvature_spectral(const Octet& xi, Level a, double tol = kDefaultTolerance);

/// Same sum with caller-supplied eigenvector columns (any phases); used to
/// exercise gauge independence.
CurvatureTwoForm curvature_spectral(const SpectralData& spec, const Matrix3c& eigenvectors,
                                    Level a);

/// Closed-form rest-frame table: entries 12, 45, 67 (and transposes) only.
/// Throws DegenerateInput if a gap vanishes.
CurvatureTwoForm curvature_rest_frame(const SpectralData& spec, Level a);

/// D(A(xi)) V(rest) D(A(xi))^T.
CurvatureTwoForm curvature_transported(const Octet& xi, Level a, double tol = kDefaultTolerance);

/// sum_a E_a V^(a)(xi) through the spectral route.
Matrix8 weighted_sum(const Octet& xi, double tol = kDefaultTolerance);

/// Coefficients of -Im Tr{H0 A^dag dA ^ A^dag dA} from central differences of
/// the gauge-fixed diagonalizer, step h = step_rel |xi|. Equals weighted_sum
/// with this sign.
Matrix8 symplectic_sum_finite_difference(const Octet& xi, double step_rel = 1e-5,
                                         double tol = kDefaultTolerance);

}  // namespace su3holo
