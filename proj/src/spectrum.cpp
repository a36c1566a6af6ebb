#include "su3holo/spectrum.hpp"

#include <cmath>
#include <numbers>

#include "su3holo/errors.hpp"
#include "su3holo/kernels.hpp"

namespace su3holo {

namespace {

using Vector3c = Eigen::Vector3cd;

// Bilinear cross product: a . (a x b) = 0 without conjugation.
Vector3c cross(const Vector3c& a, const Vector3c& b) {
  return Vector3c(a(1) * b(2) - a(2) * b(1), a(2) * b(0) - a(0) * b(2),
                  a(0) * b(1) - a(1) * b(0));
}

// Null vector of the rank-2 Hermitian matrix H - E I, taken from the pair of
// rows whose cross product is largest.
Vector3c null_vector(const Matrix3c& h, double e) {
  Matrix3c m = h;
  m.diagonal().array() -= e;
  const Vector3c r0 = m.row(0).transpose();
  const Vector3c r1 = m.row(1).transpose();
  const Vector3c r2 = m.row(2).transpose();
  std::array<Vector3c, 3> candidates{cross(r0, r1), cross(r0, r2), cross(r1, r2)};
  int best = 0;
  double best_norm = candidates[0].squaredNorm();
  for (int k = 1; k < 3; ++k) {
    const double nk = candidates[k].squaredNorm();
    if (nk > best_norm) {
      best = k;
      best_norm = nk;
    }
  }
  return candidates[best] / std::sqrt(best_norm);
}

// Unit vector orthogonal to v, seeded by the basis vector v overlaps least.
Vector3c orthogonal_unit(const Vector3c& v) {
  int k = 0;
  for (int j = 1; j < 3; ++j) {
    if (std::abs(v(j)) < std::abs(v(k))) k = j;
  }
  Vector3c e = Vector3c::Zero();
  e(k) = 1.0;
  Vector3c w = e - v * v.dot(e);  // Eigen dot conjugates the left operand
  return w.normalized();
}

void fix_phase(Eigen::Ref<Vector3c> v) {
  int k = 0;
  for (int j = 1; j < 3; ++j) {
    if (std::abs(v(j)) > std::abs(v(k))) k = j;
  }
  v *= std::abs(v(k)) / v(k);
}

Matrix3c columns(const Vector3c& a, const Vector3c& b, const Vector3c& c) {
  Matrix3c m;
  m.col(0) = a;
  m.col(1) = b;
  m.col(2) = c;
  return m;
}

SpectralData from_kernel(const kernels::ClosedFormSpectrum& s, double tol) {
  SpectralData out;
  if (s.norm == 0.0) {
    out.degeneracy = DegeneracyClass::TripleDegenerate;
    return out;
  }
  out.energies = {s.e1, s.e2, s.e3};
  out.phi = s.phi;
  out.e12 = s.e12;
  out.e23 = s.e23;
  out.e13 = s.e12 + s.e23;
  if (s.norm <= tol) {
    out.degeneracy = DegeneracyClass::TripleDegenerate;
  } else if (s.e12 <= tol * s.norm) {
    out.degeneracy = DegeneracyClass::UpperDegenerate;
  } else if (s.e23 <= tol * s.norm) {
    out.degeneracy = DegeneracyClass::LowerDegenerate;
  } else {
    out.degeneracy = DegeneracyClass::Generic;
  }
  return out;
}

}  // namespace

std::string_view to_string(DegeneracyClass c) {
  switch (c) {
    case DegeneracyClass::Generic:
      return "generic";
    case DegeneracyClass::UpperDegenerate:
      return "upper_degenerate";
    case DegeneracyClass::LowerDegenerate:
      return "lower_degenerate";
    case DegeneracyClass::TripleDegenerate:
      return "triple_degenerate";
  }
  return "unknown";
}

double phase_angle(const Octet& xi) {
  const auto s = kernels::closed_form_spectrum(xi);
  if (s.norm == 0.0) throw DegenerateInput("phase angle is undefined at xi = 0");
  return s.phi;
}

SpectralData eigenvalues(const Octet& xi, double tol) {
  return from_kernel(kernels::closed_form_spectrum(xi), tol);
}

DegeneracyClass classify(const Octet& xi, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("classify requires tol > 0");
  return eigenvalues(xi, tol).degeneracy;
}

Octet rest_frame(const Octet& xi) {
  const auto s = kernels::closed_form_spectrum(xi);
  Octet out = Octet::Zero();
  out(2) = s.e12;
  out(7) = -std::numbers::sqrt3 * s.e3;
  return out;
}

Octet rest_frame_from_gaps(double e12, double e23) {
  Octet out = Octet::Zero();
  out(2) = e12;
  out(7) = (e12 + 2.0 * e23) / std::numbers::sqrt3;
  return out;
}

GroupElement orbit_frame(const Octet& xi, double tol) {
  const SpectralData spec = eigenvalues(xi, tol);
  const Matrix3c h = traceless_matrix(xi);
  switch (spec.degeneracy) {
    case DegeneracyClass::TripleDegenerate:
      return GroupElement::identity();
    case DegeneracyClass::UpperDegenerate: {
      const Vector3c v3 = null_vector(h, spec.energies[2]);
      const Vector3c v1 = orthogonal_unit(v3);
      const Vector3c v2 = cross(v3, v1).conjugate();
      return GroupElement(columns(v1, v2, v3));
    }
    case DegeneracyClass::LowerDegenerate: {
      const Vector3c v1 = null_vector(h, spec.energies[0]);
      const Vector3c v2 = orthogonal_unit(v1);
      const Vector3c v3 = cross(v1, v2).conjugate();
      return GroupElement(columns(v1, v2, v3));
    }
    case DegeneracyClass::Generic:
      break;
  }
  // The outer levels are the best isolated ones; the middle column follows
  // from orthogonality.
  Vector3c v1 = null_vector(h, spec.energies[0]);
  Vector3c v3 = null_vector(h, spec.energies[2]);
  v3 = (v3 - v1 * v1.dot(v3)).normalized();
  Vector3c v2 = cross(v3, v1).conjugate();
  fix_phase(v1);
  fix_phase(v2);
  v3 = cross(v1, v2).conjugate();
  return GroupElement(columns(v1, v2, v3));
}

GroupElement diagonalizer(const Octet& xi, double tol) {
  const DegeneracyClass c = classify(xi, tol);
  if (c != DegeneracyClass::Generic) {
    throw DegenerateInput("diagonalizer needs a simple spectrum, input is " +
                          std::string(to_string(c)));
  }
  return orbit_frame(xi, tol);
}

}  // namespace su3holo
