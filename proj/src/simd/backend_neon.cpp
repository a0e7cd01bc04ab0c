// NEON variants of the resampler inner loops (aarch64 baseline, no runtime
// feature probe needed).
#include "l2interp/simd.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace l2i::simd {

namespace {

double dot_delta_neon(const double* s, const double* w, int n, double base) noexcept {
    const float64x2_t vb = vdupq_n_f64(base);
    float64x2_t acc = vdupq_n_f64(0.0);
    int i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t vs = vld1q_f64(s + i);
        const float64x2_t vw = vld1q_f64(w + i);
        acc = vfmaq_f64(acc, vw, vsubq_f64(vs, vb));
    }
    double out = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
    for (; i < n; ++i) out += w[i] * (s[i] - base);
    return out;
}

void conv_rows_neon(double* dst, const double* base, const double* const* rows,
                    const double* w, int ntaps, int width) noexcept {
    int x = 0;
    for (; x + 2 <= width; x += 2) {
        const float64x2_t vb = vld1q_f64(base + x);
        float64x2_t acc = vb;
        for (int j = 0; j < ntaps; ++j) {
            const float64x2_t vr = vld1q_f64(rows[j] + x);
            acc = vfmaq_f64(acc, vdupq_n_f64(w[j]), vsubq_f64(vr, vb));
        }
        vst1q_f64(dst + x, acc);
    }
    for (; x < width; ++x) {
        const double b = base[x];
        double acc = b;
        for (int j = 0; j < ntaps; ++j) acc += w[j] * (rows[j][x] - b);
        dst[x] = acc;
    }
}

constexpr Backend kNeon{"neon", dot_delta_neon, conv_rows_neon};

} // namespace

const Backend* neon_backend() noexcept { return &kNeon; }

} // namespace l2i::simd

#endif // aarch64
