#pragma once

// Discrete geometric phases of closed loops and curvature fluxes through
// parameterized surfaces.

#include <array>
#include <functional>
#include <vector>

#include "su3holo/spectrum.hpp"
#include "su3holo/types.hpp"

namespace su3holo {

/// Closed polygon of octet samples; the last sample connects back to the first.
class LoopPath {
 public:
  /// Throws std::invalid_argument when empty, DegenerateInput when a sample is
  /// not Generic.
  explicit LoopPath(std::vector<Octet> samples, double tol = kDefaultTolerance);

  const std::vector<Octet>& samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  LoopPath reversed() const;

 private:
  std::vector<Octet> samples_;
  double tol_;
};

/// center + radius (cos t u + sin t w), t = 2 pi k / samples.
LoopPath circle(const Octet& center, const Octet& u, const Octet& w, double radius, int samples,
                double tol = kDefaultTolerance);

inline constexpr double kOverlapGuard = 0.1;

/// -arg prod_k <a; xi_k | a; xi_k+1> in (-pi, pi]. Throws UnderResolvedPath
/// if some |overlap| <= kOverlapGuard.
double loop_phase(const LoopPath& path, Level a, double tol = kDefaultTolerance);

struct PhaseSumRule {
  std::array<double, 3> phases{};
  double sum = 0.0;  // reduced to (-pi, pi]
};

PhaseSumRule phase_sum_rule_check(const LoopPath& path, double tol = kDefaultTolerance);

/// Map [0,1]^2 -> R^8 sampled on a (nu+1) x (nv+1) grid and bilinearly
/// interpolated in between.
class SurfacePatch {
 public:
  /// grid[i * (nv + 1) + j] = xi(i / nu, j / nv). Throws DegenerateInput when
  /// a grid point is not Generic.
  SurfacePatch(int nu, int nv, std::vector<Octet> grid, double tol = kDefaultTolerance);

  static SurfacePatch sample(const std::function<Octet(double, double)>& f, int nu, int nv,
                             double tol = kDefaultTolerance);

  int nu() const { return nu_; }
  int nv() const { return nv_; }
  const Octet& node(int i, int j) const { return grid_[i * (nv_ + 1) + j]; }

  Octet eval(double u, double v) const;
  /// (d/du, d/dv) of the bilinear interpolant, taken inside the cell that
  /// contains (u, v).
  std::array<Octet, 2> tangents(double u, double v) const;

  /// Boundary traversed counterclockwise in (u, v) starting at (0, 0), each
  /// grid edge split into `refine` segments.
  LoopPath boundary(int refine = 1) const;

 private:
  std::pair<int, double> locate(double x, int n) const;

  int nu_;
  int nv_;
  std::vector<Octet> grid_;
  double tol_;
};

/// Spherical patch center + radius (sin t cos p f1 + sin t sin p f2 + cos t f3)
/// with u -> t in [theta0, theta1] and v -> p in [0, 2 pi].
SurfacePatch sphere_patch(const Octet& center, const std::array<Octet, 3>& frame, double radius,
                          double theta0, double theta1, int nu, int nv,
                          double tol = kDefaultTolerance);

/// Integral of V^(a)(d/du, d/dv) du dv over the patch with an order x order
/// Gauss-Legendre rule per grid cell. threads = 0 picks the hardware count.
double surface_flux(const SurfacePatch& patch, Level a, int order = 2, unsigned threads = 0,
                    double tol = kDefaultTolerance);

/// Reduces an angle to (-pi, pi].
double wrap_angle(double x);

}  // namespace su3holo
