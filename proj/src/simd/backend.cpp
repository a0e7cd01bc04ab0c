#include "l2interp/simd.hpp"

#include <cstdlib>
#include <cstring>

namespace l2i::simd {

namespace {

double dot_delta_scalar(const double* s, const double* w, int n, double base) noexcept {
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += w[i] * (s[i] - base);
    return acc;
}

void conv_rows_scalar(double* dst, const double* base, const double* const* rows,
                      const double* w, int ntaps, int width) noexcept {
    for (int x = 0; x < width; ++x) {
        const double b = base[x];
        double acc = b;
        for (int j = 0; j < ntaps; ++j) acc += w[j] * (rows[j][x] - b);
        dst[x] = acc;
    }
}

constexpr Backend kScalar{"scalar", dot_delta_scalar, conv_rows_scalar};

} // namespace

const Backend& scalar_backend() noexcept { return kScalar; }

#if defined(__x86_64__) || defined(_M_X64)
const Backend* avx2_backend() noexcept;  // backend_avx2.cpp; null when unsupported
#endif
#if defined(__aarch64__)
const Backend* neon_backend() noexcept;  // backend_neon.cpp
#endif

std::vector<const Backend*> available_backends() {
    std::vector<const Backend*> out{&kScalar};
#if defined(__x86_64__) || defined(_M_X64)
    if (const Backend* b = avx2_backend()) out.push_back(b);
#endif
#if defined(__aarch64__)
    if (const Backend* b = neon_backend()) out.push_back(b);
#endif
    return out;
}

namespace {

const Backend* select_backend() {
    const auto all = available_backends();
    const char* pin = std::getenv("L2I_SIMD");
    if (pin && std::strcmp(pin, "auto") != 0) {
        for (const Backend* b : all)
            if (std::strcmp(b->name, pin) == 0) return b;
        return &kScalar;  // unknown pin: fail safe
    }
    return all.back();
}

} // namespace

const Backend& active_backend() noexcept {
    static const Backend* chosen = select_backend();
    return *chosen;
}

} // namespace l2i::simd
