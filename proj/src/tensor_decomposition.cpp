#include "su3holo/tensor_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "su3holo/errors.hpp"
#include "su3holo/su3_algebra.hpp"

namespace su3holo {

namespace {

const Complex kI{0.0, 1.0};

constexpr int epsilon(int a, int b, int c) {
  // Levi-Civita with epsilon(0,1,2) = 1
  return (a - b) * (b - c) * (c - a) / 2;
}

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

double max_abs(const Matrix8& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

ThreeIndex ThreeIndex::conjugate() const {
  ThreeIndex out;
  for (std::size_t k = 0; k < v_.size(); ++k) out.v_[k] = std::conj(v_[k]);
  return out;
}

double ThreeIndex::asymmetry() const {
  double worst = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const Complex ref = (*this)(a, b, c);
        worst = std::max({worst, std::abs(ref - (*this)(b, a, c)),
                          std::abs(ref - (*this)(a, c, b)), std::abs(ref - (*this)(c, b, a))});
      }
    }
  }
  return worst;
}

double ThreeIndex::max_abs() const {
  double worst = 0.0;
  for (const Complex& z : v_) worst = std::max(worst, std::abs(z));
  return worst;
}

FourIndex& FourIndex::operator+=(const FourIndex& rhs) {
  for (std::size_t k = 0; k < v_.size(); ++k) v_[k] += rhs.v_[k];
  return *this;
}

double FourIndex::max_abs_diff(const FourIndex& rhs) const {
  double worst = 0.0;
  for (std::size_t k = 0; k < v_.size(); ++k) worst = std::max(worst, std::abs(v_[k] - rhs.v_[k]));
  return worst;
}

AntisymTensor::AntisymTensor(const Matrix8& t) : rs_(t) {
  const double scale = std::max(1.0, max_abs(t));
  if (max_abs(t + t.transpose()) > 1e-12 * scale) {
    throw std::invalid_argument("tensor is not antisymmetric");
  }
  rs_ = 0.5 * (t - t.transpose());
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          Complex acc = 0.0;
          for (int r = 0; r < 8; ++r) {
            const Complex lac = gellmann(r + 1)(a, c);
            if (lac == 0.0) continue;
            for (int s = 0; s < 8; ++s) acc += lac * gellmann(s + 1)(b, d) * rs_(r, s);
          }
          comps_(a, b, c, d) = acc;
        }
      }
    }
  }
}

AntisymTensor AntisymTensor::from_components(const FourIndex& components) {
  Matrix8 re;
  double worst_imag = 0.0;
  for (int r = 0; r < 8; ++r) {
    const Matrix3c& lr = gellmann(r + 1);
    for (int s = 0; s < 8; ++s) {
      const Matrix3c& ls = gellmann(s + 1);
      Complex acc = 0.0;
      for (int a = 0; a < 3; ++a) {
        for (int c = 0; c < 3; ++c) {
          const Complex lca = lr(c, a);
          if (lca == 0.0) continue;
          for (int b = 0; b < 3; ++b) {
            for (int d = 0; d < 3; ++d) acc += lca * ls(d, b) * components(a, b, c, d);
          }
        }
      }
      acc *= 0.25;
      re(r, s) = acc.real();
      worst_imag = std::max(worst_imag, std::abs(acc.imag()));
    }
  }
  if (worst_imag > 1e-10 * std::max(1.0, max_abs(re))) {
    throw std::domain_error("tensor components do not describe a real T_rs (imaginary residue " +
                            std::to_string(worst_imag) + ")");
  }
  return AntisymTensor(re, components);
}

AntisymTensor to_tensor_components(const Matrix8& t) { return AntisymTensor(t); }

Matrix8 from_tensor_components(const FourIndex& components) {
  return AntisymTensor::from_components(components).rs();
}

Matrix3c octet_matrix(const Octet& x) {
  Matrix3c m = Matrix3c::Zero();
  for (int r = 0; r < 8; ++r) m += x(r) * gellmann(r + 1);
  return m;
}

Octet octet_from_matrix(const Matrix3c& x) {
  if (std::abs(x.trace()) > 1e-10) {
    throw std::invalid_argument("octet matrix must be traceless");
  }
  Octet out;
  for (int r = 0; r < 8; ++r) out(r) = 0.5 * (x * gellmann(r + 1)).trace().real();
  return out;
}

IrreducibleParts project_irreducible(const AntisymTensor& t) {
  const FourIndex& c = t.components();
  IrreducibleParts out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int k = 0; k < 3; ++k) {
        Complex w = 0.0;
        Complex wb = 0.0;
        for (int d = 0; d < 3; ++d) {
          for (int e = 0; e < 3; ++e) {
            const int ea = epsilon(a, d, e);
            const int eb = epsilon(b, d, e);
            const int ek = epsilon(k, d, e);
            if (ea != 0) {
              w += double(ea) * c(b, k, d, e);
              wb += double(ea) * c(d, e, b, k);
            }
            if (eb != 0) {
              w += double(eb) * c(k, a, d, e);
              wb += double(eb) * c(d, e, k, a);
            }
            if (ek != 0) {
              w += double(ek) * c(a, b, d, e);
              wb += double(ek) * c(d, e, a, b);
            }
          }
        }
        out.w(a, b, k) = w;
        out.w_bar(a, b, k) = wb;
      }
    }
  }
  Matrix3c x = Matrix3c::Zero();
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      Complex acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += c(a, k, k, b);
      x(a, b) = kI * acc;
    }
  }
  for (int r = 0; r < 8; ++r) out.x(r) = 0.5 * (x * gellmann(r + 1)).trace().real();
  return out;
}

Octet octet_part_shortcut(const Matrix8& t) {
  const auto& sc = structure_constants();
  Octet out = Octet::Zero();
  for (int r = 0; r < 8; ++r) {
    double acc = 0.0;
    for (int s = 0; s < 8; ++s) {
      for (int u = 0; u < 8; ++u) acc += sc.f0(r, s, u) * t(s, u);
    }
    out(r) = -acc;
  }
  return out;
}

FourIndex reconstitute(const IrreducibleParts& parts) {
  const double scale = std::max(1.0, std::max(parts.w.max_abs(), parts.w_bar.max_abs()));
  if (parts.w.asymmetry() > 1e-12 * scale || parts.w_bar.asymmetry() > 1e-12 * scale) {
    throw std::invalid_argument("decouplet parts must be fully symmetric");
  }
  const Matrix3c x = octet_matrix(parts.x);
  FourIndex out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        for (int d = 0; d < 3; ++d) {
          Complex acc = 0.0;
          for (int e = 0; e < 3; ++e) {
            acc += (epsilon(c, d, e) / 6.0) * parts.w(a, b, e);
            acc += (epsilon(a, b, e) / 6.0) * parts.w_bar(c, d, e);
          }
          const double delta_ad = a == d ? 1.0 : 0.0;
          const double delta_bc = b == c ? 1.0 : 0.0;
          acc += (kI / 3.0) * (delta_ad * x(b, c) - delta_bc * x(a, d));
          out(a, b, c, d) = acc;
        }
      }
    }
  }
  return out;
}

OctetCoefficients octet_coefficients(Level a, const Octet& rest) {
  for (int r : {0, 1, 3, 4, 5, 6}) {
    if (rest(r) != 0.0) throw std::invalid_argument("octet_coefficients expects a rest-frame octet");
  }
  const double sqrt3 = std::numbers::sqrt3;
  const double x3 = rest(2);
  const double x8 = rest(7);
  if (x3 < 0.0 || x8 < x3 / sqrt3) {
    throw std::invalid_argument("rest-frame octet must satisfy xi8 >= xi3/sqrt3 >= 0");
  }
  const SpectralData spec = eigenvalues(rest);
  if (spec.degeneracy != DegeneracyClass::Generic) {
    throw DegenerateInput("octet coefficients are singular on degenerate spectra");
  }
  const Octet eta = octet_star(rest, rest);
  const double e3 = eta(2);
  const double e8 = eta(7);
  const double q12 = spec.e12 * spec.e12;
  const double q13 = spec.e13 * spec.e13;
  const double q23 = spec.e23 * spec.e23;

  OctetCoefficients out;
  out.prefactor = 1.0 / (x3 * (x3 * x3 - 3.0 * x8 * x8));
  switch (a) {
    case Level::One:
      out.lambda = (sqrt3 * e3 - e8) / (2.0 * q13) - e8 / q12;
      out.mu = x8 / q12 + (x8 - sqrt3 * x3) / (2.0 * q13);
      break;
    case Level::Two:
      out.lambda = (sqrt3 * e3 + e8) / (2.0 * q23) + e8 / q12;
      out.mu = -x8 / q12 - (x8 + sqrt3 * x3) / (2.0 * q23);
      break;
    case Level::Three:
      out.lambda = (e8 - sqrt3 * e3) / (2.0 * q13) - (e8 + sqrt3 * e3) / (2.0 * q23);
      out.mu = (sqrt3 * x3 - x8) / (2.0 * q13) + (sqrt3 * x3 + x8) / (2.0 * q23);
      break;
  }
  return out;
}

double decouplet_weight(Level a, const SpectralData& spec) {
  const double i12 = 1.0 / (spec.e12 * spec.e12);
  const double i13 = 1.0 / (spec.e13 * spec.e13);
  const double i23 = 1.0 / (spec.e23 * spec.e23);
  switch (a) {
    case Level::One:
      return i13 - i12;
    case Level::Two:
      return i12 - i23;
    case Level::Three:
      return i23 - i13;
  }
  return 0.0;
}

DecoupletField delta_tensors(const Matrix3c& frame) {
  DecoupletField out;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        Complex acc = 0.0;
        for (const auto& p : kPermutations) acc += frame(a, p[0]) * frame(b, p[1]) * frame(c, p[2]);
        out.delta(a, b, c) = acc;
      }
    }
  }
  out.delta_bar = out.delta.conjugate();
  return out;
}

DecoupletField delta_tensors(const Octet& xi, double tol) {
  return delta_tensors(diagonalizer(xi, tol).matrix());
}

namespace {

IrreducibleParts general_frame_parts(const Octet& xi, Level a, double tol) {
  const SpectralData spec = eigenvalues(xi, tol);
  if (spec.degeneracy != DegeneracyClass::Generic) {
    throw DegenerateInput("curvature parts need a simple spectrum, input is " +
                          std::string(to_string(spec.degeneracy)));
  }
  const Octet rest = rest_frame_from_gaps(spec.e12, spec.e23);
  const OctetCoefficients k = octet_coefficients(a, rest);
  const Octet eta = octet_star(xi, xi);

  IrreducibleParts parts;
  parts.x = k.prefactor * (k.lambda * xi + k.mu * eta);

  const double v = decouplet_weight(a, spec);
  const DecoupletField field = delta_tensors(diagonalizer(xi, tol).matrix());
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int l = 0; l < 3; ++l) {
        parts.w(i, j, l) = kI * v * field.delta(i, j, l);
        parts.w_bar(i, j, l) = -kI * v * field.delta_bar(i, j, l);
      }
    }
  }
  return parts;
}

}  // namespace

CurvatureParts curvature_parts(const Octet& xi, Level a, double tol) {
  IrreducibleParts parts = general_frame_parts(xi, a, tol);
  CurvatureParts out;
  const auto& sc = structure_constants();
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      double acc = 0.0;
      for (int t = 0; t < 8; ++t) acc += sc.f0(r, s, t) * parts.x(t);
      out.octet(r, s) = -acc / 3.0;
    }
  }
  parts.x.setZero();
  out.decouplet = from_tensor_components(reconstitute(parts));
  return out;
}

CurvatureTwoForm curvature_from_parts(const Octet& xi, Level a, double tol) {
  const IrreducibleParts parts = general_frame_parts(xi, a, tol);
  CurvatureTwoForm out;
  out.level = a;
  out.coefficients = from_tensor_components(reconstitute(parts));
  return out;
}

}  // namespace su3holo
