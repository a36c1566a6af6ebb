#include "su3holo/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "su3holo/berry_curvature.hpp"
#include "su3holo/errors.hpp"
#include "su3holo/quadrature.hpp"

namespace su3holo {

namespace {

void require_generic(const Octet& xi, double tol, const char* what) {
  const DegeneracyClass c = classify(xi, tol);
  if (c != DegeneracyClass::Generic) {
    throw DegenerateInput(std::string(what) + " sample is " + std::string(to_string(c)));
  }
}

std::vector<Matrix3c> frames(const std::vector<Octet>& samples, double tol) {
  std::vector<Matrix3c> out;
  out.reserve(samples.size());
  for (const Octet& xi : samples) out.push_back(diagonalizer(xi, tol).matrix());
  return out;
}

double phase_from_frames(const std::vector<Matrix3c>& f, int column) {
  Complex running{1.0, 0.0};
  const std::size_t n = f.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex overlap = f[k].col(column).dot(f[(k + 1) % n].col(column));
    if (std::abs(overlap) <= kOverlapGuard) {
      throw UnderResolvedPath("overlap " + std::to_string(std::abs(overlap)) + " at sample " +
                              std::to_string(k) + " is below the resolution guard");
    }
    running *= overlap;
    running /= std::abs(running);
  }
  return wrap_angle(-std::arg(running));
}

}  // namespace

double wrap_angle(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(x, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

LoopPath::LoopPath(std::vector<Octet> samples, double tol) : samples_(std::move(samples)), tol_(tol) {
  if (samples_.empty()) throw std::invalid_argument("loop path needs at least one sample");
  for (const Octet& xi : samples_) require_generic(xi, tol_, "loop");
}

LoopPath LoopPath::reversed() const {
  return LoopPath(std::vector<Octet>(samples_.rbegin(), samples_.rend()), tol_);
}

LoopPath circle(const Octet& center, const Octet& u, const Octet& w, double radius, int samples,
                double tol) {
  if (samples < 1) throw std::invalid_argument("circle needs at least one sample");
  std::vector<Octet> pts;
  pts.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / samples;
    pts.push_back(center + radius * (std::cos(t) * u + std::sin(t) * w));
  }
  return LoopPath(std::move(pts), tol);
}

double loop_phase(const LoopPath& path, Level a, double tol) {
  return phase_from_frames(frames(path.samples(), tol), index(a));
}

PhaseSumRule phase_sum_rule_check(const LoopPath& path, double tol) {
  const std::vector<Matrix3c> f = frames(path.samples(), tol);
  PhaseSumRule out;
  double total = 0.0;
  for (Level a : kLevels) {
    out.phases[index(a)] = phase_from_frames(f, index(a));
    total += out.phases[index(a)];
  }
  out.sum = wrap_angle(total);
  return out;
}

SurfacePatch::SurfacePatch(int nu, int nv, std::vector<Octet> grid, double tol)
    : nu_(nu), nv_(nv), grid_(std::move(grid)), tol_(tol) {
  if (nu < 1 || nv < 1) throw std::invalid_argument("surface grid needs at least one cell");
  if (grid_.size() != static_cast<std::size_t>((nu + 1) * (nv + 1))) {
    throw DimensionMismatch(static_cast<int>(grid_.size()), (nu + 1) * (nv + 1));
  }
  for (const Octet& xi : grid_) require_generic(xi, tol_, "surface grid");
}

SurfacePatch SurfacePatch::sample(const std::function<Octet(double, double)>& f, int nu, int nv,
                                  double tol) {
  if (nu < 1 || nv < 1) throw std::invalid_argument("surface grid needs at least one cell");
  std::vector<Octet> grid;
  grid.reserve((nu + 1) * (nv + 1));
  for (int i = 0; i <= nu; ++i) {
    for (int j = 0; j <= nv; ++j) grid.push_back(f(double(i) / nu, double(j) / nv));
  }
  return SurfacePatch(nu, nv, std::move(grid), tol);
}

std::pair<int, double> SurfacePatch::locate(double x, int n) const {
  const double scaled = std::clamp(x, 0.0, 1.0) * n;
  const int cell = std::min(static_cast<int>(scaled), n - 1);
  return {cell, scaled - cell};
}

Octet SurfacePatch::eval(double u, double v) const {
  const auto [i, s] = locate(u, nu_);
  const auto [j, t] = locate(v, nv_);
  return (1 - s) * (1 - t) * node(i, j) + s * (1 - t) * node(i + 1, j) +
         (1 - s) * t * node(i, j + 1) + s * t * node(i + 1, j + 1);
}

std::array<Octet, 2> SurfacePatch::tangents(double u, double v) const {
  const auto [i, s] = locate(u, nu_);
  const auto [j, t] = locate(v, nv_);
  const Octet du = ((1 - t) * (node(i + 1, j) - node(i, j)) + t * (node(i + 1, j + 1) - node(i, j + 1))) * nu_;
  const Octet dv = ((1 - s) * (node(i, j + 1) - node(i, j)) + s * (node(i + 1, j + 1) - node(i + 1, j))) * nv_;
  return {du, dv};
}

LoopPath SurfacePatch::boundary(int refine) const {
  if (refine < 1) throw std::invalid_argument("boundary refinement must be positive");
  std::vector<Octet> pts;
  auto edge = [&](const Octet& p, const Octet& q) {
    for (int k = 0; k < refine; ++k) pts.push_back(p + (q - p) * (double(k) / refine));
  };
  for (int i = 0; i < nu_; ++i) edge(node(i, 0), node(i + 1, 0));
  for (int j = 0; j < nv_; ++j) edge(node(nu_, j), node(nu_, j + 1));
  for (int i = nu_; i > 0; --i) edge(node(i, nv_), node(i - 1, nv_));
  for (int j = nv_; j > 0; --j) edge(node(0, j), node(0, j - 1));
  return LoopPath(std::move(pts), tol_);
}

SurfacePatch sphere_patch(const Octet& center, const std::array<Octet, 3>& frame, double radius,
                          double theta0, double theta1, int nu, int nv, double tol) {
  const double two_pi = 2.0 * std::numbers::pi;
  return SurfacePatch::sample(
      [&](double u, double v) {
        const double t = theta0 + (theta1 - theta0) * u;
        const double p = two_pi * v;
        return Octet(center + radius * (std::sin(t) * std::cos(p) * frame[0] +
                                        std::sin(t) * std::sin(p) * frame[1] +
                                        std::cos(t) * frame[2]));
      },
      nu, nv, tol);
}

double surface_flux(const SurfacePatch& patch, Level a, int order, unsigned threads, double tol) {
  const GaussLegendre rule = gauss_legendre(order);
  const int nu = patch.nu();
  const int nv = patch.nv();
  const double hu = 1.0 / nu;
  const double hv = 1.0 / nv;

  std::vector<double> row_sums(nu, 0.0);
  auto row = [&](int i) {
    double acc = 0.0;
    for (int j = 0; j < nv; ++j) {
      for (int p = 0; p < order; ++p) {
        const double u = (i + 0.5 * (rule.nodes[p] + 1.0)) * hu;
        for (int q = 0; q < order; ++q) {
          const double v = (j + 0.5 * (rule.nodes[q] + 1.0)) * hv;
          const auto [du, dv] = patch.tangents(u, v);
          const double w = 0.25 * rule.weights[p] * rule.weights[q] * hu * hv;
          acc += w * curvature_spectral(patch.eval(u, v), a, tol).pair(du, dv);
        }
      }
    }
    row_sums[i] = acc;
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, nu);
  if (threads <= 1) {
    for (int i = 0; i < nu; ++i) row(i);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (int i = static_cast<int>(t); i < nu; i += static_cast<int>(threads)) row(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    pool.clear();
    if (failure) std::rethrow_exception(failure);
  }
  double flux = 0.0;
  for (double s : row_sums) flux += s;
  return flux;
}

}  // namespace su3holo
