#include "su3holo/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace su3holo::kernels {

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(SU3HOLO_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  return ok;
#else
  return false;
#endif
}

Backend best_backend() { return avx2_available() ? Backend::Avx2 : Backend::Scalar; }

double cubic_invariant(const Octet& x) {
  const double sqrt3 = std::numbers::sqrt3;
  const double a = x(0) * x(0) + x(1) * x(1) + x(2) * x(2);
  const double b = x(3) * x(3) + x(4) * x(4) + x(5) * x(5) + x(6) * x(6);
  const double mixed = x(0) * x(3) * x(5) + x(0) * x(4) * x(6) - x(1) * x(3) * x(6) +
                       x(1) * x(4) * x(5);
  const double split = x(3) * x(3) + x(4) * x(4) - x(5) * x(5) - x(6) * x(6);
  return 3.0 * a * x(7) - x(7) * x(7) * x(7) - 1.5 * b * x(7) + 3.0 * sqrt3 * mixed +
         1.5 * sqrt3 * x(2) * split;
}

ClosedFormSpectrum closed_form_spectrum(const Octet& xi) {
  using std::numbers::pi;
  ClosedFormSpectrum s;
  s.norm = xi.norm();
  s.cubic = cubic_invariant(xi);
  if (s.norm == 0.0) return s;
  // sin(3 phi) = -cubic / |xi|^3 with 3 phi in [pi/2, 3 pi/2]
  const double sin3phi = std::clamp(-s.cubic / (s.norm * s.norm * s.norm), -1.0, 1.0);
  s.phi = (pi - std::asin(sin3phi)) / 3.0;
  const double scale = s.norm / std::numbers::sqrt3;
  s.e1 = scale * std::sin(s.phi);
  s.e2 = scale * std::sin(s.phi + 2.0 * pi / 3.0);
  s.e3 = scale * std::sin(s.phi + 4.0 * pi / 3.0);
  s.e12 = s.norm * std::sin(s.phi - pi / 6.0);
  s.e23 = s.norm * std::cos(s.phi);
  return s;
}

namespace detail {

void closed_form_spectra_scalar(std::span<const Octet> points, std::span<ClosedFormSpectrum> out) {
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = closed_form_spectrum(points[i]);
}

Matrix8 congruence_scalar(const Matrix8& d, const Matrix8& v) {
  Matrix8 tmp;
  for (int r = 0; r < 8; ++r) {
    for (int v_col = 0; v_col < 8; ++v_col) {
      double acc = 0.0;
      for (int u = 0; u < 8; ++u) acc += d(r, u) * v(u, v_col);
      tmp(r, v_col) = acc;
    }
  }
  Matrix8 out;
  for (int r = 0; r < 8; ++r) {
    for (int s = 0; s < 8; ++s) {
      double acc = 0.0;
      for (int w = 0; w < 8; ++w) acc += tmp(r, w) * d(s, w);
      out(r, s) = acc;
    }
  }
  return out;
}

}  // namespace detail

void closed_form_spectra(std::span<const Octet> points, std::span<ClosedFormSpectrum> out,
                         Backend backend) {
  if (points.size() != out.size()) {
    throw std::invalid_argument("closed_form_spectra: output size mismatch");
  }
#if defined(SU3HOLO_HAVE_AVX2)
  if (backend == Backend::Avx2 && avx2_available()) {
    detail::closed_form_spectra_avx2(points, out);
    return;
  }
#endif
  (void)backend;
  detail::closed_form_spectra_scalar(points, out);
}

Matrix8 congruence(const Matrix8& d, const Matrix8& v, Backend backend) {
#if defined(SU3HOLO_HAVE_AVX2)
  if (backend == Backend::Avx2 && avx2_available()) return detail::congruence_avx2(d, v);
#endif
  (void)backend;
  return detail::congruence_scalar(d, v);
}

}  // namespace su3holo::kernels
