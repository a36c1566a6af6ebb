// AVX2+FMA variants of the batched kernels. This translation unit is built
// with -mavx2 -mfma and only entered after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "su3holo/kernels.hpp"

namespace su3holo::kernels::detail {

namespace {

// component k of four consecutive octets
inline __m256d load_component(const double* base, int k) {
  const __m256i idx = _mm256_set_epi64x(24, 16, 8, 0);
  return _mm256_i64gather_pd(base + k, idx, 8);
}

}  // namespace

void closed_form_spectra_avx2(std::span<const Octet> points, std::span<ClosedFormSpectrum> out) {
  using std::numbers::pi;
  const std::size_t n = points.size();
  const std::size_t blocked = n - n % 4;

  const __m256d three = _mm256_set1_pd(3.0);
  const __m256d half3 = _mm256_set1_pd(1.5);
  const __m256d c3s3 = _mm256_set1_pd(3.0 * std::numbers::sqrt3);
  const __m256d c32s3 = _mm256_set1_pd(1.5 * std::numbers::sqrt3);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d half_sqrt3 = _mm256_set1_pd(0.5 * std::numbers::sqrt3);
  const __m256d inv_sqrt3 = _mm256_set1_pd(1.0 / std::numbers::sqrt3);
  const __m256d zero = _mm256_setzero_pd();

  alignas(32) double norm_l[4], cubic_l[4], s3_l[4], phi_l[4], sin_l[4], cos_l[4];
  alignas(32) double e1_l[4], e2_l[4], e3_l[4], e12_l[4], e23_l[4];

  for (std::size_t i = 0; i < blocked; i += 4) {
    static_assert(sizeof(Octet) == 8 * sizeof(double));
    const double* base = points[i].data();
    __m256d x[8];
    for (int k = 0; k < 8; ++k) x[k] = load_component(base, k);

    __m256d a = _mm256_mul_pd(x[0], x[0]);
    a = _mm256_fmadd_pd(x[1], x[1], a);
    a = _mm256_fmadd_pd(x[2], x[2], a);
    __m256d b = _mm256_mul_pd(x[3], x[3]);
    b = _mm256_fmadd_pd(x[4], x[4], b);
    b = _mm256_fmadd_pd(x[5], x[5], b);
    b = _mm256_fmadd_pd(x[6], x[6], b);
    const __m256d x8sq = _mm256_mul_pd(x[7], x[7]);
    const __m256d norm2 = _mm256_add_pd(_mm256_add_pd(a, b), x8sq);

    __m256d mixed = _mm256_mul_pd(_mm256_mul_pd(x[0], x[3]), x[5]);
    mixed = _mm256_fmadd_pd(_mm256_mul_pd(x[0], x[4]), x[6], mixed);
    mixed = _mm256_fnmadd_pd(_mm256_mul_pd(x[1], x[3]), x[6], mixed);
    mixed = _mm256_fmadd_pd(_mm256_mul_pd(x[1], x[4]), x[5], mixed);
    __m256d split = _mm256_fmadd_pd(x[3], x[3], _mm256_mul_pd(x[4], x[4]));
    split = _mm256_fnmadd_pd(x[5], x[5], split);
    split = _mm256_fnmadd_pd(x[6], x[6], split);

    // 3 a x8 - x8^3 - 1.5 b x8 + 3 sqrt3 mixed + 1.5 sqrt3 x3 split
    __m256d cubic = _mm256_mul_pd(_mm256_fmsub_pd(three, a, x8sq), x[7]);
    cubic = _mm256_fnmadd_pd(_mm256_mul_pd(half3, b), x[7], cubic);
    cubic = _mm256_fmadd_pd(c3s3, mixed, cubic);
    cubic = _mm256_fmadd_pd(_mm256_mul_pd(c32s3, x[2]), split, cubic);

    const __m256d norm = _mm256_sqrt_pd(norm2);
    const __m256d norm3 = _mm256_mul_pd(norm2, norm);
    const __m256d nonzero = _mm256_cmp_pd(norm, zero, _CMP_GT_OQ);
    __m256d sin3 = _mm256_div_pd(_mm256_sub_pd(zero, cubic), norm3);
    sin3 = _mm256_max_pd(_mm256_set1_pd(-1.0), _mm256_min_pd(_mm256_set1_pd(1.0), sin3));
    sin3 = _mm256_and_pd(sin3, nonzero);

    _mm256_store_pd(norm_l, norm);
    _mm256_store_pd(cubic_l, cubic);
    _mm256_store_pd(s3_l, sin3);
    for (int l = 0; l < 4; ++l) {
      phi_l[l] = norm_l[l] > 0.0 ? (pi - std::asin(s3_l[l])) / 3.0 : 0.0;
      sin_l[l] = std::sin(phi_l[l]);
      cos_l[l] = std::cos(phi_l[l]);
    }
    const __m256d sphi = _mm256_and_pd(_mm256_load_pd(sin_l), nonzero);
    const __m256d cphi = _mm256_and_pd(_mm256_load_pd(cos_l), nonzero);
    const __m256d scale = _mm256_mul_pd(norm, inv_sqrt3);
    const __m256d hs = _mm256_mul_pd(half, sphi);
    const __m256d rc = _mm256_mul_pd(half_sqrt3, cphi);
    _mm256_store_pd(e1_l, _mm256_mul_pd(scale, sphi));
    _mm256_store_pd(e2_l, _mm256_mul_pd(scale, _mm256_sub_pd(rc, hs)));
    _mm256_store_pd(e3_l, _mm256_mul_pd(scale, _mm256_sub_pd(_mm256_sub_pd(zero, hs), rc)));
    _mm256_store_pd(e12_l,
                    _mm256_mul_pd(norm, _mm256_fmsub_pd(half_sqrt3, sphi, _mm256_mul_pd(half, cphi))));
    _mm256_store_pd(e23_l, _mm256_mul_pd(norm, cphi));

    for (int l = 0; l < 4; ++l) {
      ClosedFormSpectrum& s = out[i + l];
      s.norm = norm_l[l];
      s.cubic = cubic_l[l];
      s.phi = phi_l[l];
      s.e1 = e1_l[l];
      s.e2 = e2_l[l];
      s.e3 = e3_l[l];
      s.e12 = e12_l[l];
      s.e23 = e23_l[l];
    }
  }
  for (std::size_t i = blocked; i < n; ++i) out[i] = closed_form_spectrum(points[i]);
}

Matrix8 congruence_avx2(const Matrix8& d, const Matrix8& v) {
  // Column-major: column j occupies two __m256d halves.
  const double* dp = d.data();
  const double* vp = v.data();
  alignas(32) double tmp[64];
  for (int j = 0; j < 8; ++j) {
    __m256d lo = _mm256_setzero_pd();
    __m256d hi = _mm256_setzero_pd();
    for (int u = 0; u < 8; ++u) {
      const __m256d w = _mm256_set1_pd(vp[j * 8 + u]);
      lo = _mm256_fmadd_pd(_mm256_loadu_pd(dp + u * 8), w, lo);
      hi = _mm256_fmadd_pd(_mm256_loadu_pd(dp + u * 8 + 4), w, hi);
    }
    _mm256_store_pd(tmp + j * 8, lo);
    _mm256_store_pd(tmp + j * 8 + 4, hi);
  }
  Matrix8 out;
  double* op = out.data();
  for (int s = 0; s < 8; ++s) {
    __m256d lo = _mm256_setzero_pd();
    __m256d hi = _mm256_setzero_pd();
    for (int w = 0; w < 8; ++w) {
      const __m256d c = _mm256_set1_pd(dp[w * 8 + s]);  // d(s, w)
      lo = _mm256_fmadd_pd(_mm256_load_pd(tmp + w * 8), c, lo);
      hi = _mm256_fmadd_pd(_mm256_load_pd(tmp + w * 8 + 4), c, hi);
    }
    _mm256_storeu_pd(op + s * 8, lo);
    _mm256_storeu_pd(op + s * 8 + 4, hi);
  }
  return out;
}

}  // namespace su3holo::kernels::detail
