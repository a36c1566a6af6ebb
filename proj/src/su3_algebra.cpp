#include "su3holo/su3_algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "su3holo/errors.hpp"
#include "su3holo/kernels.hpp"
#include "su3holo/spectrum.hpp"

namespace su3holo {

namespace {

const Complex kI{0.0, 1.0};

std::array<Matrix3c, 8> build_gellmann() {
  std::array<Matrix3c, 8> l;
  for (auto& m : l) m.setZero();
  l[0](0, 1) = l[0](1, 0) = 1.0;
  l[1](0, 1) = -kI;
  l[1](1, 0) = kI;
  l[2](0, 0) = 1.0;
  l[2](1, 1) = -1.0;
  l[3](0, 2) = l[3](2, 0) = 1.0;
  l[4](0, 2) = -kI;
  l[4](2, 0) = kI;
  l[5](1, 2) = l[5](2, 1) = 1.0;
  l[6](1, 2) = -kI;
  l[6](2, 1) = kI;
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  l[7](0, 0) = inv_sqrt3;
  l[7](1, 1) = inv_sqrt3;
  l[7](2, 2) = -2.0 * inv_sqrt3;
  return l;
}

const std::array<Matrix3c, 8>& gellmann_table() {
  static const std::array<Matrix3c, 8> table = build_gellmann();
  return table;
}

}  // namespace

const Matrix3c& gellmann(int r) {
  if (r < 1 || r > 8) {
    throw std::out_of_range("Gell-Mann index must be in 1..8, got " + std::to_string(r));
  }
  return gellmann_table()[r - 1];
}

int StructureConstants::offset(int r, int s, int t) {
  if (r < 1 || r > 8 || s < 1 || s > 8 || t < 1 || t > 8) {
    throw std::out_of_range("structure constant index out of range");
  }
  return ((r - 1) * 8 + (s - 1)) * 8 + (t - 1);
}

StructureConstants::StructureConstants() {
  const auto& l = gellmann_table();
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      const Matrix3c comm = l[r] * l[s] - l[s] * l[r];
      const Matrix3c anti = l[r] * l[s] + l[s] * l[r];
      for (int t = 0; t < 8; ++t) {
        f_[(r * 8 + s) * 8 + t] = ((comm * l[t]).trace() / (4.0 * kI)).real();
        d_[(r * 8 + s) * 8 + t] = ((anti * l[t]).trace() / 4.0).real();
      }
    }
  }
}

const StructureConstants& structure_constants() {
  static const StructureConstants table;
  return table;
}

CoordinateForm to_coordinates(const HermitianMatrix& h) {
  if (h.dim() != 3) throw DimensionMismatch(h.dim(), 3);
  const Matrix3c m = h.matrix();
  CoordinateForm c;
  c.trace_part = m.trace().real() / 3.0;
  c.octet = octet_of(m);
  return c;
}

HermitianMatrix from_coordinates(const CoordinateForm& c) {
  Matrix3c m = traceless_matrix(c.octet);
  m += c.trace_part * Matrix3c::Identity();
  return HermitianMatrix(m);
}

Matrix3c traceless_matrix(const Octet& xi) {
  const auto& l = gellmann_table();
  Matrix3c m = Matrix3c::Zero();
  for (int r = 0; r < 8; ++r) m += (0.5 * xi(r)) * l[r];
  return m;
}

Octet octet_of(const Matrix3c& m) {
  const auto& l = gellmann_table();
  Octet xi;
  for (int r = 0; r < 8; ++r) xi(r) = (m * l[r]).trace().real();
  return xi;
}

Octet octet_wedge(const Octet& a, const Octet& b) {
  const auto& sc = structure_constants();
  Octet out = Octet::Zero();
  for (int r = 0; r < 8; ++r) {
    double acc = 0.0;
    for (int s = 0; s < 8; ++s) {
      for (int t = 0; t < 8; ++t) acc += sc.f0(r, s, t) * a(s) * b(t);
    }
    out(r) = -0.5 * acc;
  }
  return out;
}

Octet octet_star(const Octet& a, const Octet& b) {
  const auto& sc = structure_constants();
  const double sqrt3 = std::sqrt(3.0);
  Octet out = Octet::Zero();
  for (int r = 0; r < 8; ++r) {
    double acc = 0.0;
    for (int s = 0; s < 8; ++s) {
      for (int t = 0; t < 8; ++t) acc += sc.d0(r, s, t) * a(s) * b(t);
    }
    out(r) = sqrt3 * acc;
  }
  return out;
}

Invariants invariants(const Octet& xi) {
  // The expanded d-symbol polynomial keeps rest-frame inputs exact (e8 -> -1).
  return {xi.squaredNorm(), kernels::cubic_invariant(xi)};
}

GroupElement::GroupElement(const Matrix3c& a, double tol) : a_(a) {
  const double unitarity = (a.adjoint() * a - Matrix3c::Identity()).cwiseAbs().maxCoeff();
  if (!(unitarity <= tol)) {
    throw std::invalid_argument("group element is not unitary (residual " +
                                std::to_string(unitarity) + ")");
  }
  const double det_err = std::abs(a.determinant() - 1.0);
  if (!(det_err <= tol)) {
    throw std::invalid_argument("group element does not have unit determinant (error " +
                                std::to_string(det_err) + ")");
  }
}

GroupElement GroupElement::exp_i(const Octet& theta) {
  // theta . lambda = H(2 theta); diagonalize in closed form and exponentiate.
  const Octet xi = 2.0 * theta;
  const GroupElement frame = orbit_frame(xi);
  const SpectralData spec = eigenvalues(xi);
  Matrix3c phases = Matrix3c::Zero();
  for (int a = 0; a < 3; ++a) phases(a, a) = std::exp(kI * spec.energies[a]);
  const Matrix3c& v = frame.matrix();
  return GroupElement(v * phases * v.adjoint());
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
  return GroupElement(a_ * rhs.a_);
}

GroupElement GroupElement::inverse() const { return GroupElement(a_.adjoint()); }

GroupElement random_group_element(std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  Octet theta;
  for (int r = 0; r < 8; ++r) theta(r) = normal(rng);
  return GroupElement::exp_i(theta);
}

AdjointImage adjoint_matrix(const GroupElement& a) {
  const auto& l = gellmann_table();
  const Matrix3c& m = a.matrix();
  const Matrix3c mdag = m.adjoint();
  std::array<Matrix3c, 8> rotated;
  for (int s = 0; s < 8; ++s) rotated[s] = m * l[s] * mdag;
  Matrix8 d;
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      d(r, s) = 0.5 * (l[r].transpose().cwiseProduct(rotated[s])).sum().real();
    }
  }
  return AdjointImage(d);
}

}  // namespace su3holo
