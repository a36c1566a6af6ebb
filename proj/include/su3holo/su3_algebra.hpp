#pragma once

// su(3)-specific layer: Gell-Mann matrices, structure constants, the
// (xi0, xi) coordinate chart, octet products and the adjoint representation.

#include <array>
#include <random>

#include "su3holo/hermitian.hpp"
#include "su3holo/types.hpp"

namespace su3holo {

/// Gell-Mann matrix lambda_r, r in 1..8.
const Matrix3c& gellmann(int r);

/// f_rst and d_rst, computed once from the lambda matrices:
///   f_rst = Tr([l_r, l_s] l_t) / (4i),  d_rst = Tr({l_r, l_s} l_t) / 4.
class StructureConstants {
 public:
  /// 1-based indices.
  double f(int r, int s, int t) const { return f_[offset(r, s, t)]; }
  double d(int r, int s, int t) const { return d_[offset(r, s, t)]; }

  /// 0-based raw access for inner loops.
  double f0(int r, int s, int t) const { return f_[(r * 8 + s) * 8 + t]; }
  double d0(int r, int s, int t) const { return d_[(r * 8 + s) * 8 + t]; }

 private:
  friend const StructureConstants& structure_constants();
  StructureConstants();
  static int offset(int r, int s, int t);

  std::array<double, 512> f_{};
  std::array<double, 512> d_{};
};

const StructureConstants& structure_constants();

/// H = xi0 * I + (1/2) xi . lambda
struct CoordinateForm {
  double trace_part = 0.0;
  Octet octet = Octet::Zero();
};

CoordinateForm to_coordinates(const HermitianMatrix& h);
HermitianMatrix from_coordinates(const CoordinateForm& c);

/// (1/2) xi . lambda as a raw 3x3 matrix.
Matrix3c traceless_matrix(const Octet& xi);

/// xi_r = Tr(M lambda_r) for a 3x3 matrix (real part taken).
Octet octet_of(const Matrix3c& m);

/// (a ^ b)_r = -(1/2) f_rst a_s b_t
Octet octet_wedge(const Octet& a, const Octet& b);

/// (a * b)_r = sqrt(3) d_rst a_s b_t
Octet octet_star(const Octet& a, const Octet& b);

struct Invariants {
  double quadratic = 0.0;  // xi . xi
  double cubic = 0.0;      // (xi * xi) . xi
};

Invariants invariants(const Octet& xi);

/// Element of SU(3): unitary with unit determinant (checked to 1e-8 by default).
class GroupElement {
 public:
  explicit GroupElement(const Matrix3c& a, double tol = 1e-8);

  static GroupElement identity() { return GroupElement(Matrix3c::Identity()); }

  /// exp(i theta . lambda)
  static GroupElement exp_i(const Octet& theta);

  const Matrix3c& matrix() const { return a_; }
  GroupElement operator*(const GroupElement& rhs) const;
  GroupElement inverse() const;

 private:
  Matrix3c a_;
};

/// Haar-ish random element exp(i theta . lambda) with theta ~ N(0, scale^2).
GroupElement random_group_element(std::mt19937_64& rng, double scale = 3.0);

/// Real orthogonal 8x8 image of a group element.
class AdjointImage {
 public:
  explicit AdjointImage(const Matrix8& d) : d_(d) {}
  const Matrix8& matrix() const { return d_; }
  Octet operator*(const Octet& xi) const { return d_ * xi; }

 private:
  Matrix8 d_;
};

/// D_rs(A) = (1/2) Tr(lambda_r A lambda_s A^dagger), so that A H(xi) A^dagger =
/// H(D(A) xi).
AdjointImage adjoint_matrix(const GroupElement& a);

}  // namespace su3holo
