#include "su3holo/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "su3holo/berry_curvature.hpp"
#include "su3holo/kernels.hpp"
#include "su3holo/spectrum.hpp"
#include "su3holo/su3_algebra.hpp"
#include "su3holo/tensor_decomposition.hpp"

namespace su3holo {

namespace {

double rel(const Matrix8& a, const Matrix8& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1e-300, b.cwiseAbs().maxCoeff());
}

std::vector<Octet> random_generic_points(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> log_scale(-1.0, 1.0);
  std::vector<Octet> out;
  while (static_cast<int>(out.size()) < n) {
    Octet xi;
    for (int r = 0; r < 8; ++r) xi(r) = normal(rng);
    xi *= std::pow(10.0, log_scale(rng));
    const SpectralData s = eigenvalues(xi);
    if (s.e12 > 1e-2 * xi.norm() && s.e23 > 1e-2 * xi.norm()) out.push_back(xi);
  }
  return out;
}

CheckResult make(std::string name, double error, double threshold) {
  return {std::move(name), error < threshold, error, threshold};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed);
  const std::vector<Octet> points = random_generic_points(rng, samples);
  const auto& sc = structure_constants();
  std::vector<CheckResult> out;

  {
    double err = 0.0;
    for (int r = 1; r <= 8; ++r) {
      for (int s = 1; s <= 8; ++s) {
        const Matrix3c comm = gellmann(r) * gellmann(s) - gellmann(s) * gellmann(r);
        const Matrix3c anti = gellmann(r) * gellmann(s) + gellmann(s) * gellmann(r);
        Matrix3c fsum = Matrix3c::Zero();
        Matrix3c dsum = (4.0 / 3.0) * (r == s ? 1.0 : 0.0) * Matrix3c::Identity();
        for (int t = 1; t <= 8; ++t) {
          fsum += Complex(0.0, 2.0 * sc.f(r, s, t)) * gellmann(t);
          dsum += 2.0 * sc.d(r, s, t) * gellmann(t);
        }
        err = std::max({err, (comm - fsum).cwiseAbs().maxCoeff(), (anti - dsum).cwiseAbs().maxCoeff()});
      }
    }
    out.push_back(make("structure_constants_reconstruct_products", err, 1e-14));
  }

  {
    double err = 0.0;
    for (const Octet& xi : points) {
      Eigen::SelfAdjointEigenSolver<Matrix3c> solver(traceless_matrix(xi));
      const SpectralData s = eigenvalues(xi);
      for (int k = 0; k < 3; ++k) {
        err = std::max(err, std::abs(s.energies[k] - solver.eigenvalues()(2 - k)) / xi.norm());
      }
    }
    out.push_back(make("closed_form_spectrum_vs_dense_solver", err, 1e-10));
  }

  {
    // det of the traceless part equals cubic / (12 sqrt3)
    double err = 0.0;
    for (const Octet& xi : points) {
      const double det = traceless_matrix(xi).determinant().real();
      const double cubic = invariants(xi).cubic;
      err = std::max(err, std::abs(det - cubic / (12.0 * std::numbers::sqrt3)) / std::pow(xi.norm(), 3));
    }
    out.push_back(make("determinant_equals_cubic_over_12_sqrt3", err, 1e-12));
  }

  {
    // rest-frame xi8 equals (E13 + E23) / sqrt3 and reproduces the spectrum
    double err = 0.0;
    for (const Octet& xi : points) {
      const SpectralData s = eigenvalues(xi);
      const Octet rest = rest_frame(xi);
      err = std::max(err, std::abs(rest(7) - (s.e13 + s.e23) / std::numbers::sqrt3) / xi.norm());
      const SpectralData r = eigenvalues(rest);
      for (int k = 0; k < 3; ++k) err = std::max(err, std::abs(r.energies[k] - s.energies[k]) / xi.norm());
    }
    out.push_back(make("rest_frame_xi8_equals_gap_sum_over_sqrt3", err, 1e-10));
  }

  {
    double err = 0.0;
    for (const Octet& xi : points) {
      const Matrix3c a = diagonalizer(xi).matrix();
      const SpectralData s = eigenvalues(xi);
      Matrix3c expected = Matrix3c::Zero();
      for (int k = 0; k < 3; ++k) expected(k, k) = s.energies[k];
      err = std::max(err, (a.adjoint() * traceless_matrix(xi) * a - expected).cwiseAbs().maxCoeff() / xi.norm());
      err = std::max(err, std::abs(a.determinant() - 1.0));
    }
    out.push_back(make("diagonalizer_special_unitary_and_diagonalizes", err, 1e-10));
  }

  {
    double err = 0.0;
    for (int k = 0; k < std::min(samples, 20); ++k) {
      const GroupElement a = random_group_element(rng);
      const GroupElement b = random_group_element(rng);
      const Matrix8 da = adjoint_matrix(a).matrix();
      err = std::max(err, (da * da.transpose() - Matrix8::Identity()).cwiseAbs().maxCoeff());
      err = std::max(err, (adjoint_matrix(a * b).matrix() - da * adjoint_matrix(b).matrix()).cwiseAbs().maxCoeff());
    }
    out.push_back(make("adjoint_image_orthogonal_homomorphism", err, 1e-12));
  }

  {
    double routes = 0.0, level_sum = 0.0;
    for (const Octet& xi : points) {
      Matrix8 sum = Matrix8::Zero();
      double scale = 0.0;
      for (Level a : kLevels) {
        const Matrix8 v = curvature_spectral(xi, a).coefficients;
        routes = std::max({routes, rel(curvature_transported(xi, a).coefficients, v),
                           rel(curvature_from_parts(xi, a).coefficients, v)});
        sum += v;
        scale = std::max(scale, v.cwiseAbs().maxCoeff());
      }
      level_sum = std::max(level_sum, sum.cwiseAbs().maxCoeff() / scale);
    }
    out.push_back(make("curvature_three_routes_agree", routes, 1e-9));
    out.push_back(make("curvature_level_sum_vanishes", level_sum, 1e-10));
  }

  {
    double err = 0.0;
    for (const Octet& xi : points) {
      const Octet rest = rest_frame(xi);
      const SpectralData s = eigenvalues(rest);
      const Matrix8 w = weighted_sum(rest);
      err = std::max({err, std::abs(w(0, 1) - 0.5 / s.e12) * s.e12, std::abs(w(3, 4) - 0.5 / s.e13) * s.e13,
                      std::abs(w(5, 6) - 0.5 / s.e23) * s.e23});
    }
    out.push_back(make("weighted_sum_rest_frame_slots", err, 1e-10));
  }

  {
    double err = 0.0;
    for (int r = 0; r < 8; ++r) {
      for (int s = r + 1; s < 8; ++s) {
        Matrix8 t = Matrix8::Zero();
        t(r, s) = 1.0;
        t(s, r) = -1.0;
        const AntisymTensor tensor(t);
        const Matrix8 back = from_tensor_components(reconstitute(project_irreducible(tensor)));
        err = std::max(err, (back - t).cwiseAbs().maxCoeff());
      }
    }
    out.push_back(make("irreducible_decomposition_round_trip", err, 1e-12));
  }

  if (kernels::avx2_available()) {
    std::vector<kernels::ClosedFormSpectrum> scalar(points.size()), simd(points.size());
    kernels::closed_form_spectra(points, scalar, kernels::Backend::Scalar);
    kernels::closed_form_spectra(points, simd, kernels::Backend::Avx2);
    double err = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
      const double n = points[k].norm();
      err = std::max({err, std::abs(scalar[k].e1 - simd[k].e1) / n, std::abs(scalar[k].e2 - simd[k].e2) / n,
                      std::abs(scalar[k].e3 - simd[k].e3) / n});
    }
    out.push_back(make("avx2_spectra_match_scalar", err, 1e-12));
  }
  return out;
}

}  // namespace su3holo
