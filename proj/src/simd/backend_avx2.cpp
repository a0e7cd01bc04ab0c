// AVX2 + FMA variants of the resampler inner loops. This translation unit is
// compiled with -mavx2 -mfma; callers reach it only through the runtime
// dispatch in backend.cpp.
#include "l2interp/simd.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace l2i::simd {

namespace {

double dot_delta_avx2(const double* s, const double* w, int n, double base) noexcept {
    const __m256d vb = _mm256_set1_pd(base);
    __m256d acc = _mm256_setzero_pd();
    int i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vs = _mm256_loadu_pd(s + i);
        const __m256d vw = _mm256_loadu_pd(w + i);
        acc = _mm256_fmadd_pd(vw, _mm256_sub_pd(vs, vb), acc);
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    lo = _mm_add_pd(lo, hi);
    double out = _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
    for (; i < n; ++i) out += w[i] * (s[i] - base);
    return out;
}

void conv_rows_avx2(double* dst, const double* base, const double* const* rows,
                    const double* w, int ntaps, int width) noexcept {
    int x = 0;
    for (; x + 4 <= width; x += 4) {
        const __m256d vb = _mm256_loadu_pd(base + x);
        __m256d acc = vb;
        for (int j = 0; j < ntaps; ++j) {
            const __m256d vr = _mm256_loadu_pd(rows[j] + x);
            acc = _mm256_fmadd_pd(_mm256_set1_pd(w[j]), _mm256_sub_pd(vr, vb), acc);
        }
        _mm256_storeu_pd(dst + x, acc);
    }
    for (; x < width; ++x) {
        const double b = base[x];
        double acc = b;
        for (int j = 0; j < ntaps; ++j) acc += w[j] * (rows[j][x] - b);
        dst[x] = acc;
    }
}

constexpr Backend kAvx2{"avx2", dot_delta_avx2, conv_rows_avx2};

} // namespace

const Backend* avx2_backend() noexcept {
    static const Backend* detected =
        (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) ? &kAvx2 : nullptr;
    return detected;
}

} // namespace l2i::simd

#endif // x86_64
