#pragma once

// Symplectic pairing and invariant metric on adjoint orbits of U(3)/SU(3),
// together with orbit-defining invariants.

#include "su3holo/hermitian.hpp"
#include "su3holo/spectrum.hpp"
#include "su3holo/types.hpp"

namespace su3holo {

/// Two traceless Hermitian directions in su(3).
class TangentPair {
 public:
  TangentPair(const Matrix3c& first, const Matrix3c& second);

  const Matrix3c& first() const { return first_; }
  const Matrix3c& second() const { return second_; }
  TangentPair swapped() const { return TangentPair(second_, first_); }

 private:
  Matrix3c first_;
  Matrix3c second_;
};

/// Im Tr(H [A, B]). The trace itself is purely imaginary for Hermitian
/// arguments; its imaginary part is the real, antisymmetric pairing.
double symplectic_eval(const HermitianMatrix& h, const TangentPair& pair);

/// 8 - rank of M_uv = symplectic_eval(H, (lambda_u, lambda_v)), rank taken at
/// singular values above tol * max(1, sigma_max).
int symplectic_kernel_dim(const HermitianMatrix& h, double tol);

/// Re Tr([H, A] [H, B]^dagger); symmetric and positive semidefinite.
double orbit_metric_eval(const HermitianMatrix& h, const TangentPair& pair);

/// 8 - rank of the metric Gram matrix on the Gell-Mann directions.
int orbit_metric_kernel_dim(const HermitianMatrix& h, double tol);

struct OrbitInvariants {
  double quadratic = 0.0;
  double cubic = 0.0;
  int orbit_dimension = 0;  // 6 generic, 4 on the degeneracy cones, 0 at the origin
};

OrbitInvariants orbit_invariants(const Octet& xi, double tol = kDefaultTolerance);

}  // namespace su3holo
