#pragma once

// Independent reference computations used by the tests. Nothing here calls the
// closed-form spectrum or the diagonalizer; eigen-decompositions go through
// Eigen's dense self-adjoint solver.

#include <array>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "su3holo/types.hpp"

namespace oracle {

using su3holo::Complex;
using su3holo::Matrix3c;
using su3holo::Octet;

inline Octet random_octet(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Octet xi;
  for (int r = 0; r < 8; ++r) xi(r) = normal(rng);
  return xi;
}

/// Gell-Mann matrix lambda_r, written out so the oracle does not share the
/// library table.
inline Matrix3c lambda(int r) {
  const Complex i{0.0, 1.0};
  Matrix3c m = Matrix3c::Zero();
  switch (r) {
    case 1: m(0, 1) = m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -i; m(1, 0) = i; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 4: m(0, 2) = m(2, 0) = 1.0; break;
    case 5: m(0, 2) = -i; m(2, 0) = i; break;
    case 6: m(1, 2) = m(2, 1) = 1.0; break;
    case 7: m(1, 2) = -i; m(2, 1) = i; break;
    case 8:
      m(0, 0) = m(1, 1) = 1.0 / std::sqrt(3.0);
      m(2, 2) = -2.0 / std::sqrt(3.0);
      break;
  }
  return m;
}

inline Matrix3c hamiltonian(const Octet& xi) {
  Matrix3c h = Matrix3c::Zero();
  for (int r = 0; r < 8; ++r) h += 0.5 * xi(r) * lambda(r + 1);
  return h;
}

inline Eigen::MatrixXcd random_hermitian(std::mt19937_64& rng, int n, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::MatrixXcd m(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) m(j, k) = Complex(normal(rng), normal(rng));
  }
  return 0.5 * (m + m.adjoint());
}

/// exp(i K) for a random Hermitian K, by spectral decomposition.
inline Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, int n, double scale = 2.0) {
  const Eigen::MatrixXcd k = random_hermitian(rng, n, scale);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(k);
  Eigen::VectorXcd phases(n);
  for (int j = 0; j < n; ++j) phases(j) = std::exp(Complex(0.0, solver.eigenvalues()(j)));
  return solver.eigenvectors() * phases.asDiagonal() * solver.eigenvectors().adjoint();
}

inline Matrix3c random_special_unitary(std::mt19937_64& rng) {
  Matrix3c u = random_unitary(rng, 3);
  const Complex det = u.determinant();
  return u * std::pow(det, -1.0 / 3.0);
}

/// Eigenvalues of H(xi) in descending order.
inline Eigen::Vector3d dense_eigenvalues(const Octet& xi) {
  Eigen::SelfAdjointEigenSolver<Matrix3c> solver(hamiltonian(xi));
  return solver.eigenvalues().reverse();
}

/// Eigenvectors of H(xi) in descending eigenvalue order, arbitrary phases.
inline Matrix3c dense_eigenvectors(const Octet& xi) {
  Eigen::SelfAdjointEigenSolver<Matrix3c> solver(hamiltonian(xi));
  return solver.eigenvectors().rowwise().reverse();
}

/// Rest-frame octet (0,0,e12,0,0,0,0,(e13+e23)/sqrt3).
inline Octet rest_point(double e12, double e23) {
  Octet xi = Octet::Zero();
  xi(2) = e12;
  xi(7) = (2.0 * e23 + e12) / std::sqrt(3.0);
  return xi;
}

/// Random point with both gaps above min_rel |xi|.
inline Octet random_generic(std::mt19937_64& rng, double scale = 1.0, double min_rel = 1e-2) {
  for (;;) {
    const Octet xi = random_octet(rng, scale);
    const Eigen::Vector3d e = dense_eigenvalues(xi);
    if (e(0) - e(1) > min_rel * xi.norm() && e(1) - e(2) > min_rel * xi.norm()) return xi;
  }
}

/// Curvature V_rs from the Pancharatnam phase of a small square in the (r, s)
/// plane centered at xi, using dense-solver eigenvectors. The square is
/// traversed counterclockwise, and the flux equals arg of the overlap product.
inline double plaquette_curvature(const Octet& xi, int level, int r, int s, double h) {
  const Octet er = Octet::Unit(r);
  const Octet es = Octet::Unit(s);
  const Octet corners[4] = {xi - 0.5 * h * er - 0.5 * h * es, xi + 0.5 * h * er - 0.5 * h * es,
                            xi + 0.5 * h * er + 0.5 * h * es, xi - 0.5 * h * er + 0.5 * h * es};
  Complex product{1.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    const Eigen::Vector3cd a = dense_eigenvectors(corners[k]).col(level - 1);
    const Eigen::Vector3cd b = dense_eigenvectors(corners[(k + 1) % 4]).col(level - 1);
    product *= a.dot(b);
  }
  return std::arg(product) / (h * h);
}

inline std::array<Octet, 3> orthonormal_triple(std::mt19937_64& rng) {
  std::array<Octet, 3> out;
  for (int i = 0; i < 3; ++i) {
    Octet v = random_octet(rng);
    for (int j = 0; j < i; ++j) v -= v.dot(out[j]) * out[j];
    out[i] = v.normalized();
  }
  return out;
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
