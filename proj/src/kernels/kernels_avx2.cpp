#include "tq/kernels.hpp"

#include "kernels_common.hpp"

// This translation unit is compiled with -mavx2 on x86-64 (see CMake); the
// function pointers below are only installed after a runtime CPU check.
#if defined(__AVX2__)

#include <immintrin.h>

namespace tq::kernels {
namespace {

void avx2_general_map(const double* P, const double* Q, double* u, double* v,
                      std::size_t count) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d p = _mm256_loadu_pd(P + i);
    __m256d q = _mm256_loadu_pd(Q + i);
    // den = (P + Q) * (P*Q - 1)
    __m256d den = _mm256_mul_pd(_mm256_add_pd(p, q),
                                _mm256_sub_pd(_mm256_mul_pd(p, q), one));
    // u = P * (Q*Q - 1) / den
    __m256d un =
        _mm256_mul_pd(p, _mm256_sub_pd(_mm256_mul_pd(q, q), one));
    _mm256_storeu_pd(u + i, _mm256_div_pd(un, den));
    // v = 2*P*Q / den, associated as (2*P)*Q like the scalar lane
    __m256d vn = _mm256_mul_pd(_mm256_mul_pd(two, p), q);
    _mm256_storeu_pd(v + i, _mm256_div_pd(vn, den));
  }
  for (; i < count; ++i) detail::general_map_one(P[i], Q[i], u[i], v[i]);
}

void avx2_trapezoid_map(const double* P, const double* Q, double* u, double* v,
                        std::size_t count) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256d p = _mm256_loadu_pd(P + i);
    __m256d q = _mm256_loadu_pd(Q + i);
    _mm256_storeu_pd(u + i, p);
    // v = (0.5*P) * (Q - 1/Q)
    __m256d vv = _mm256_mul_pd(_mm256_mul_pd(half, p),
                               _mm256_sub_pd(q, _mm256_div_pd(one, q)));
    _mm256_storeu_pd(v + i, vv);
  }
  for (; i < count; ++i) detail::trapezoid_map_one(P[i], Q[i], u[i], v[i]);
}

inline __m256d vlen(__m256d du, __m256d dv) {
  return _mm256_sqrt_pd(
      _mm256_add_pd(_mm256_mul_pd(du, du), _mm256_mul_pd(dv, dv)));
}

void avx2_cell_defects(const double* u, const double* v, std::size_t n,
                       double* defect, double* perim) {
  const std::size_t w = n + 1;
  for (std::size_t j = 0; j < n; ++j) {
    const double* u0 = u + j * w;
    const double* v0 = v + j * w;
    const double* u1 = u0 + w;
    const double* v1 = v0 + w;
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
      __m256d u0a = _mm256_loadu_pd(u0 + k), u0b = _mm256_loadu_pd(u0 + k + 1);
      __m256d v0a = _mm256_loadu_pd(v0 + k), v0b = _mm256_loadu_pd(v0 + k + 1);
      __m256d u1a = _mm256_loadu_pd(u1 + k), u1b = _mm256_loadu_pd(u1 + k + 1);
      __m256d v1a = _mm256_loadu_pd(v1 + k), v1b = _mm256_loadu_pd(v1 + k + 1);
      __m256d ab = vlen(_mm256_sub_pd(u0b, u0a), _mm256_sub_pd(v0b, v0a));
      __m256d bc = vlen(_mm256_sub_pd(u1b, u0b), _mm256_sub_pd(v1b, v0b));
      __m256d cd = vlen(_mm256_sub_pd(u1a, u1b), _mm256_sub_pd(v1a, v1b));
      __m256d da = vlen(_mm256_sub_pd(u0a, u1a), _mm256_sub_pd(v0a, v1a));
      _mm256_storeu_pd(defect + j * n + k,
                       _mm256_sub_pd(_mm256_add_pd(ab, cd), _mm256_add_pd(bc, da)));
      _mm256_storeu_pd(perim + j * n + k,
                       _mm256_add_pd(_mm256_add_pd(ab, bc), _mm256_add_pd(cd, da)));
    }
    for (; k < n; ++k)
      detail::cell_defect_one(u0, v0, u1, v1, k, defect[j * n + k],
                              perim[j * n + k]);
  }
}

}  // namespace

const Backend& avx2_backend() {
  static constexpr Backend b{"avx2", &avx2_general_map, &avx2_trapezoid_map,
                             &avx2_cell_defects};
  return b;
}

}  // namespace tq::kernels

#else  // !__AVX2__

namespace tq::kernels {
const Backend& avx2_backend() { return scalar_backend(); }
}  // namespace tq::kernels

#endif
