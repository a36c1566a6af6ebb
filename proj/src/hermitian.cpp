#include "su3holo/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "su3holo/errors.hpp"

namespace su3holo {

HermitianMatrix make_hermitian_unchecked(Eigen::MatrixXcd m) {
  Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
  return HermitianMatrix(std::move(sym), HermitianMatrix::Unchecked{});
}

HermitianMatrix::HermitianMatrix(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw std::invalid_argument("Hermitian matrix must be square with n >= 1");
  }
  const Eigen::Index n = m.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = j; k < n; ++k) {
      if (std::abs(m(j, k) - std::conj(m(k, j))) > tol) {
        throw std::invalid_argument("matrix is not Hermitian at (" + std::to_string(j) + "," +
                                    std::to_string(k) + ")");
      }
    }
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::zero(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return make_hermitian_unchecked(Eigen::MatrixXcd::Zero(n, n));
}

HermitianMatrix HermitianMatrix::identity(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return make_hermitian_unchecked(Eigen::MatrixXcd::Identity(n, n));
}

namespace {

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

Eigen::VectorXd sorted_eigenvalues(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();  // ascending
}

}  // namespace

std::vector<HermitianMatrix> hermitian_basis(int n) {
  if (n < 1) throw std::invalid_argument("hermitian_basis requires n >= 1");
  std::vector<HermitianMatrix> basis;
  basis.reserve(static_cast<std::size_t>(n) * n);
  const Complex i{0.0, 1.0};
  for (int a = 0; a < n; ++a) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
    e(a, a) = 1.0;
    basis.push_back(make_hermitian_unchecked(e));
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
      e(a, b) = 1.0;
      e(b, a) = 1.0;
      basis.push_back(make_hermitian_unchecked(e));
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(n, n);
      e(a, b) = i;
      e(b, a) = -i;
      basis.push_back(make_hermitian_unchecked(e));
    }
  }
  return basis;
}

HermitianMatrix jordan_product(const HermitianMatrix& h1, const HermitianMatrix& h2) {
  require_same_dim(h1, h2);
  const auto& a = h1.matrix();
  const auto& b = h2.matrix();
  return make_hermitian_unchecked(0.5 * (a * b + b * a));
}

HermitianMatrix lie_wedge(const HermitianMatrix& h1, const HermitianMatrix& h2) {
  require_same_dim(h1, h2);
  const auto& a = h1.matrix();
  const auto& b = h2.matrix();
  return make_hermitian_unchecked(Complex{0.0, 1.0} * (a * b - b * a));
}

double trace_inner(const HermitianMatrix& h1, const HermitianMatrix& h2) {
  require_same_dim(h1, h2);
  // Tr(AB) = sum_jk A_jk B_kj
  return (h1.matrix().transpose().cwiseProduct(h2.matrix())).sum().real();
}

HermitianMatrix conjugated(const HermitianMatrix& h, const Eigen::MatrixXcd& u) {
  if (u.rows() != h.dim() || u.cols() != h.dim()) {
    throw DimensionMismatch(h.dim(), static_cast<int>(u.rows()));
  }
  return make_hermitian_unchecked(u.adjoint() * h.matrix() * u);
}

std::vector<double> char_poly_coeffs(const HermitianMatrix& h) {
  const int n = h.dim();
  std::vector<double> power_traces(n + 1, 0.0);
  Eigen::MatrixXcd power = Eigen::MatrixXcd::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    power = power * h.matrix();
    power_traces[k] = power.trace().real();
  }
  std::vector<double> c(n + 1, 0.0);
  c[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    double acc = power_traces[k];
    for (int j = 1; j < k; ++j) acc += c[j] * power_traces[k - j];
    c[k] = -acc / k;
  }
  return {c.begin() + 1, c.end()};
}

int orbit_dimension(const std::vector<int>& multiplicities) {
  int n = 0;
  int sq = 0;
  for (int m : multiplicities) {
    n += m;
    sq += m * m;
  }
  return n * n - sq;
}

OrbitDescriptor orbit_type(const HermitianMatrix& h, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("orbit_type requires tol > 0");
  const Eigen::VectorXd ev = sorted_eigenvalues(h);
  const double mean = ev.mean();
  const double radius = (ev.array() - mean).abs().maxCoeff();
  const double threshold = tol * std::max(1.0, radius);

  OrbitDescriptor out;
  int run = 1;
  for (Eigen::Index k = 1; k < ev.size(); ++k) {
    if (ev(k) - ev(k - 1) <= threshold) {
      ++run;
    } else {
      out.multiplicities.push_back(run);
      run = 1;
    }
  }
  out.multiplicities.push_back(run);
  std::sort(out.multiplicities.begin(), out.multiplicities.end(), std::greater<>());
  out.stabilizer = out.multiplicities;
  out.orbit_dimension = orbit_dimension(out.multiplicities);
  return out;
}

bool same_orbit(const HermitianMatrix& h1, const HermitianMatrix& h2, double tol) {
  require_same_dim(h1, h2);
  if (!(tol > 0.0)) throw std::invalid_argument("same_orbit requires tol > 0");
  const auto c1 = char_poly_coeffs(h1);
  const auto c2 = char_poly_coeffs(h2);
  for (std::size_t k = 0; k < c1.size(); ++k) {
    const double scale = std::max({1.0, std::abs(c1[k]), std::abs(c2[k])});
    if (std::abs(c1[k] - c2[k]) > tol * scale) return false;
  }
  return true;
}

}  // namespace su3holo
