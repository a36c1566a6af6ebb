#include "su3holo/berry_curvature.hpp"

#include <array>
#include <string>

#include "su3holo/errors.hpp"
#include "su3holo/kernels.hpp"

namespace su3holo {

namespace {

Matrix8 antisymmetrized(const Matrix8& m) { return 0.5 * (m - m.transpose()); }

void require_generic(const SpectralData& spec) {
  if (spec.degeneracy != DegeneracyClass::Generic) {
    throw DegenerateInput("curvature needs a simple spectrum, input is " +
                          std::string(to_string(spec.degeneracy)));
  }
}

}  // namespace

CurvatureTwoForm curvature_spectral(const SpectralData& spec, const Matrix3c& eigenvectors,
                                    Level a) {
  require_generic(spec);
  const int ia = index(a);
  // elements(r)(i, j) = <i| lambda_r |j> in the eigenbasis
  std::array<Matrix3c, 8> elements;
  for (int r = 0; r < 8; ++r) {
    elements[r] = eigenvectors.adjoint() * gellmann(r + 1) * eigenvectors;
  }
  Matrix8 v = Matrix8::Zero();
  for (int b = 0; b < 3; ++b) {
    if (b == ia) continue;
    const double gap = spec.energies[ia] - spec.energies[b];
    const double weight = 0.25 / (gap * gap);
    for (int r = 0; r < 8; ++r) {
      for (int s = r + 1; s < 8; ++s) {
        const Complex term = elements[r](ia, b) * elements[s](b, ia) -
                             elements[s](ia, b) * elements[r](b, ia);
        v(r, s) += weight * term.imag();
      }
    }
  }
  CurvatureTwoForm out;
  out.level = a;
  out.coefficients = v - v.transpose();
  return out;
}

CurvatureTwoForm curvature_spectral(const Octet& xi, Level a, double tol) {
  const SpectralData spec = eigenvalues(xi, tol);
  require_generic(spec);
  return curvature_spectral(spec, diagonalizer(xi, tol).matrix(), a);
}

CurvatureTwoForm curvature_rest_frame(const SpectralData& spec, Level a) {
  if (!(spec.e12 > 0.0) || !(spec.e23 > 0.0)) {
    throw DegenerateInput("rest-frame curvature table needs nonzero gaps");
  }
  const double w12 = 0.5 / (spec.e12 * spec.e12);
  const double w13 = 0.5 / (spec.e13 * spec.e13);
  const double w23 = 0.5 / (spec.e23 * spec.e23);
  double v12 = 0.0, v45 = 0.0, v67 = 0.0;
  switch (a) {
    case Level::One:
      v12 = w12;
      v45 = w13;
      break;
    case Level::Two:
      v12 = -w12;
      v67 = w23;
      break;
    case Level::Three:
      v45 = -w13;
      v67 = -w23;
      break;
  }
  CurvatureTwoForm out;
  out.level = a;
  out.coefficients(0, 1) = v12;
  out.coefficients(1, 0) = -v12;
  out.coefficients(3, 4) = v45;
  out.coefficients(4, 3) = -v45;
  out.coefficients(5, 6) = v67;
  out.coefficients(6, 5) = -v67;
  return out;
}

CurvatureTwoForm curvature_transported(const Octet& xi, Level a, double tol) {
  const SpectralData spec = eigenvalues(xi, tol);
  require_generic(spec);
  const AdjointImage d = adjoint_matrix(diagonalizer(xi, tol));
  CurvatureTwoForm out = curvature_rest_frame(spec, a);
  out.coefficients = antisymmetrized(kernels::congruence(d.matrix(), out.coefficients));
  return out;
}

Matrix8 weighted_sum(const Octet& xi, double tol) {
  const SpectralData spec = eigenvalues(xi, tol);
  require_generic(spec);
  const Matrix3c frame = diagonalizer(xi, tol).matrix();
  Matrix8 sum = Matrix8::Zero();
  for (Level a : kLevels) {
    sum += spec.energies[index(a)] * curvature_spectral(spec, frame, a).coefficients;
  }
  return sum;
}

Matrix8 symplectic_sum_finite_difference(const Octet& xi, double step_rel, double tol) {
  const SpectralData spec = eigenvalues(xi, tol);
  require_generic(spec);
  const double h = step_rel * xi.norm();
  const Matrix3c a0 = diagonalizer(xi, tol).matrix();
  const Matrix3c a0_dag = a0.adjoint();

  // Omega_r = A^dag d_r A
  std::array<Matrix3c, 8> omega;
  for (int r = 0; r < 8; ++r) {
    Octet step = Octet::Zero();
    step(r) = h;
    const Matrix3c plus = diagonalizer(xi + step, tol).matrix();
    const Matrix3c minus = diagonalizer(xi - step, tol).matrix();
    omega[r] = a0_dag * ((plus - minus) / (2.0 * h));
  }
  Matrix3c h0 = Matrix3c::Zero();
  for (int k = 0; k < 3; ++k) h0(k, k) = spec.energies[k];

  Matrix8 m;
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) m(r, s) = (h0 * omega[r] * omega[s]).trace().imag();
  }
  return -(m - m.transpose());
}

}  // namespace su3holo
