#pragma once

// Generic n-level kinematics on the space of Hermitian matrices: basis,
// Jordan/Lie products, trace pairing, characteristic polynomial and the
// classification of unitary conjugation orbits.

#include <vector>

#include <Eigen/Dense>

#include "su3holo/types.hpp"

namespace su3holo {

/// Square Hermitian matrix of dimension n >= 1.
///
/// Construction checks Hermiticity elementwise at the given tolerance and
/// then stores the exactly Hermitian part (M + M^dagger)/2.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Eigen::MatrixXcd& m, double tol = 1e-12);

  static HermitianMatrix zero(int n);
  static HermitianMatrix identity(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  Complex operator()(int j, int k) const { return m_(j, k); }

  Complex trace() const { return m_.trace(); }

 private:
  struct Unchecked {};
  HermitianMatrix(Eigen::MatrixXcd m, Unchecked) : m_(std::move(m)) {}
  friend HermitianMatrix make_hermitian_unchecked(Eigen::MatrixXcd m);

  Eigen::MatrixXcd m_;
};

/// Multiplicity structure of a conjugation orbit.
struct OrbitDescriptor {
  std::vector<int> multiplicities;  // nonincreasing, sums to n
  std::vector<int> stabilizer;      // U(m1) x U(m2) x ... factor sizes
  int orbit_dimension = 0;          // n^2 - sum m_i^2
};

/// n^2 basis matrices: projectors E_aa, then E_ab (a<b, lexicographic), then
/// E'_ab = i(|a><b| - |b><a|).
std::vector<HermitianMatrix> hermitian_basis(int n);

/// (H1 H2 + H2 H1) / 2
HermitianMatrix jordan_product(const HermitianMatrix& h1, const HermitianMatrix& h2);

/// i (H1 H2 - H2 H1)
HermitianMatrix lie_wedge(const HermitianMatrix& h1, const HermitianMatrix& h2);

/// Tr(H1 H2), always real for Hermitian arguments.
double trace_inner(const HermitianMatrix& h1, const HermitianMatrix& h2);

/// U^dagger H U for a unitary U of matching dimension.
HermitianMatrix conjugated(const HermitianMatrix& h, const Eigen::MatrixXcd& u);

/// Coefficients c_1..c_n of P(x) = x^n + c_1 x^{n-1} + ... + c_n, obtained from
/// power traces by Newton's recursion c_k = -(p_k + c_1 p_{k-1} + ... + c_{k-1} p_1)/k.
std::vector<double> char_poly_coeffs(const HermitianMatrix& h);

/// Eigenvalues clustered at relative gap tol * max(1, r), where r is the
/// spectral radius of the traceless part (so adding c*I changes nothing).
OrbitDescriptor orbit_type(const HermitianMatrix& h, double tol);

/// Orbit dimension n^2 - sum m_i^2 for a multiplicity signature.
int orbit_dimension(const std::vector<int>& multiplicities);

/// True iff every characteristic-polynomial coefficient agrees within
/// tol * max(1, |c|).
bool same_orbit(const HermitianMatrix& h1, const HermitianMatrix& h2, double tol);

}  // namespace su3holo
