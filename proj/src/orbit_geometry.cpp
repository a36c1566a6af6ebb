#include "su3holo/orbit_geometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "su3holo/errors.hpp"
#include "su3holo/su3_algebra.hpp"

namespace su3holo {

namespace {

void require_direction(const Matrix3c& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("tangent direction must be Hermitian");
  }
  if (std::abs(m.trace()) > 1e-12) {
    throw std::invalid_argument("tangent direction must be traceless");
  }
}

Matrix3c as3(const HermitianMatrix& h) {
  if (h.dim() != 3) throw DimensionMismatch(h.dim(), 3);
  return h.matrix();
}

int kernel_dim(const Matrix8& m, double tol) {
  Eigen::JacobiSVD<Matrix8> svd(m);
  const auto& sv = svd.singularValues();
  const double threshold = tol * std::max(1.0, sv(0));
  int rank = 0;
  for (int k = 0; k < 8; ++k) {
    if (sv(k) > threshold) ++rank;
  }
  return 8 - rank;
}

}  // namespace

TangentPair::TangentPair(const Matrix3c& first, const Matrix3c& second)
    : first_(first), second_(second) {
  require_direction(first_);
  require_direction(second_);
}

double symplectic_eval(const HermitianMatrix& h, const TangentPair& pair) {
  const Matrix3c m = as3(h);
  const Matrix3c comm = pair.first() * pair.second() - pair.second() * pair.first();
  return (m * comm).trace().imag();
}

int symplectic_kernel_dim(const HermitianMatrix& h, double tol) {
  Matrix8 m;
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      m(u, v) = symplectic_eval(h, TangentPair(gellmann(u + 1), gellmann(v + 1)));
    }
  }
  return kernel_dim(m, tol);
}

double orbit_metric_eval(const HermitianMatrix& h, const TangentPair& pair) {
  const Matrix3c m = as3(h);
  const Matrix3c ca = m * pair.first() - pair.first() * m;
  const Matrix3c cb = m * pair.second() - pair.second() * m;
  return (ca * cb.adjoint()).trace().real();
}

int orbit_metric_kernel_dim(const HermitianMatrix& h, double tol) {
  Matrix8 g;
  for (int u = 0; u < 8; ++u) {
    for (int v = 0; v < 8; ++v) {
      g(u, v) = orbit_metric_eval(h, TangentPair(gellmann(u + 1), gellmann(v + 1)));
    }
  }
  return kernel_dim(g, tol);
}

OrbitInvariants orbit_invariants(const Octet& xi, double tol) {
  const Invariants inv = invariants(xi);
  OrbitInvariants out{inv.quadratic, inv.cubic, 6};
  switch (classify(xi, tol)) {
    case DegeneracyClass::Generic:
      out.orbit_dimension = 6;
      break;
    case DegeneracyClass::UpperDegenerate:
    case DegeneracyClass::LowerDegenerate:
      out.orbit_dimension = 4;
      break;
    case DegeneracyClass::TripleDegenerate:
      out.orbit_dimension = 0;
      break;
  }
  return out;
}

}  // namespace su3holo
