#pragma once

// Data-parallel inner kernels. Every kernel has a scalar reference
// implementation and, on x86-64 hosts with AVX2+FMA, a vectorized variant
// selected at runtime. The two are equivalence-tested against each other.

#include <span>
#include <string_view>

#include "su3holo/types.hpp"

namespace su3holo::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view to_string(Backend b);

/// True when the running CPU supports the AVX2 kernels and they were compiled in.
bool avx2_available();

/// Fastest backend usable on this host.
Backend best_backend();

/// (xi * xi) . xi written out from the d-symbol table:
///   3 (x1^2 + x2^2 + x3^2) x8 - x8^3 - (3/2)(x4^2 + x5^2 + x6^2 + x7^2) x8
///   + 3 sqrt3 (x1 x4 x6 + x1 x5 x7 - x2 x4 x7 + x2 x5 x6)
///   + (3 sqrt3 / 2) x3 (x4^2 + x5^2 - x6^2 - x7^2)
double cubic_invariant(const Octet& xi);

/// Closed-form spectral data of H(0, xi) from the two invariants.
struct ClosedFormSpectrum {
  double norm = 0.0;   // |xi|
  double cubic = 0.0;  // (xi * xi) . xi
  double phi = 0.0;    // in [pi/6, pi/2]; 0 for xi = 0
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;
  double e12 = 0.0, e23 = 0.0;
};

/// Scalar reference for one point.
ClosedFormSpectrum closed_form_spectrum(const Octet& xi);

/// Batched evaluation; out.size() must equal points.size().
void closed_form_spectra(std::span<const Octet> points, std::span<ClosedFormSpectrum> out,
                         Backend backend = best_backend());

/// D V D^T for 8x8 real matrices.
Matrix8 congruence(const Matrix8& d, const Matrix8& v, Backend backend = best_backend());

namespace detail {
void closed_form_spectra_scalar(std::span<const Octet> points, std::span<ClosedFormSpectrum> out);
Matrix8 congruence_scalar(const Matrix8& d, const Matrix8& v);
#if defined(SU3HOLO_HAVE_AVX2)
void closed_form_spectra_avx2(std::span<const Octet> points, std::span<ClosedFormSpectrum> out);
Matrix8 congruence_avx2(const Matrix8& d, const Matrix8& v);
#endif
}  // namespace detail

}  // namespace su3holo::kernels
