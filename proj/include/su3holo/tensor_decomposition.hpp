#pragma once

// Irreducible decomposition of real antisymmetric second-rank octet tensors
// into decouplet (10), antidecouplet (10*) and octet (8) parts, and the
// reassembly of the curvature two-forms from those parts.

#include <array>

#include "su3holo/berry_curvature.hpp"
#include "su3holo/spectrum.hpp"
#include "su3holo/types.hpp"

namespace su3holo {

/// Complex 3-index array W^{abc} (or W_abc), indices 0..2.
class ThreeIndex {
 public:
  Complex& operator()(int a, int b, int c) { return v_[(a * 3 + b) * 3 + c]; }
  Complex operator()(int a, int b, int c) const { return v_[(a * 3 + b) * 3 + c]; }

  ThreeIndex conjugate() const;
  /// Largest deviation from full permutation symmetry.
  double asymmetry() const;
  double max_abs() const;

 private:
  std::array<Complex, 27> v_{};
};

/// Complex 4-index array T^{ab}_{cd}, stored as (a, b, c, d).
class FourIndex {
 public:
  Complex& operator()(int a, int b, int c, int d) { return v_[((a * 3 + b) * 3 + c) * 3 + d]; }
  Complex operator()(int a, int b, int c, int d) const {
    return v_[((a * 3 + b) * 3 + c) * 3 + d];
  }

  FourIndex& operator+=(const FourIndex& rhs);
  double max_abs_diff(const FourIndex& rhs) const;

 private:
  std::array<Complex, 81> v_{};
};

/// Real antisymmetric T_rs together with its tensor components
///   T^{ab}_{cd} = (l_r)_{ac} (l_s)_{bd} T_rs.
class AntisymTensor {
 public:
  /// Throws std::invalid_argument when T is not antisymmetric to 1e-12.
  explicit AntisymTensor(const Matrix8& t);

  /// Inverse map T_rs = (1/4) (l_r)_{ca} (l_s)_{db} T^{ab}_{cd}; throws
  /// std::domain_error when the result carries an imaginary residue above 1e-10.
  static AntisymTensor from_components(const FourIndex& components);

  const Matrix8& rs() const { return rs_; }
  const FourIndex& components() const { return comps_; }

 private:
  AntisymTensor(const Matrix8& t, const FourIndex& comps) : rs_(t), comps_(comps) {}

  Matrix8 rs_;
  FourIndex comps_;
};

AntisymTensor to_tensor_components(const Matrix8& t);
Matrix8 from_tensor_components(const FourIndex& components);

/// X^a_b = X_r (l_r)_{ab}
Matrix3c octet_matrix(const Octet& x);
/// X_r = (1/2) Tr(X l_r); rejects a trace above 1e-10.
Octet octet_from_matrix(const Matrix3c& x);

struct IrreducibleParts {
  ThreeIndex w;      // W^{abc}
  ThreeIndex w_bar;  // W-bar_{abc}
  Octet x = Octet::Zero();
};

/// W^{abc} = e^{ade} T^{bc}_{de} + cyclic, W-bar likewise with lowered
/// indices, X^a_b = i T^{ac}_{cb}.
IrreducibleParts project_irreducible(const AntisymTensor& t);

/// X_r = -f_rst T_st
Octet octet_part_shortcut(const Matrix8& t);

/// T^{ab}_{cd} = (1/6) e_{cde} W^{abe} + (1/6) e^{abe} W-bar_{cde}
///             + (i/3) (delta^a_d X^b_c - delta^b_c X^a_d).
/// Throws std::invalid_argument when W or W-bar is not fully symmetric.
FourIndex reconstitute(const IrreducibleParts& parts);

/// Expansion of the rest-frame octet part over xi0 and eta0 = xi0 * xi0:
///   X^(a) = prefactor (lambda xi0 + mu eta0),
///   prefactor = 1 / [xi3 (xi3^2 - 3 xi8^2)] = -1 / (4 E12 E13 E23).
struct OctetCoefficients {
  double lambda = 0.0;
  double mu = 0.0;
  double prefactor = 0.0;
};

OctetCoefficients octet_coefficients(Level a, const Octet& rest);

/// Decouplet weight v^(a) such that the rest-frame W^{123} = i v^(a).
double decouplet_weight(Level a, const SpectralData& spec);

/// Transported numerical decouplet Delta^{abc} = A_ad A_be A_cf delta^{def}
/// and its conjugate Delta-bar_{abc}.
struct DecoupletField {
  ThreeIndex delta;
  ThreeIndex delta_bar;
};

DecoupletField delta_tensors(const Octet& xi, double tol = kDefaultTolerance);
DecoupletField delta_tensors(const Matrix3c& frame);

/// Octet and decouplet contributions to V^(a)_rs in a general frame.
struct CurvatureParts {
  Matrix8 octet = Matrix8::Zero();
  Matrix8 decouplet = Matrix8::Zero();
};

CurvatureParts curvature_parts(const Octet& xi, Level a, double tol = kDefaultTolerance);

/// octet + decouplet reassembled through the 4-index form.
CurvatureTwoForm curvature_from_parts(const Octet& xi, Level a, double tol = kDefaultTolerance);

}  // namespace su3holo
