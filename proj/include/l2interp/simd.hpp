#pragma once

#include <vector>

namespace l2i::simd {

// Inner-loop primitives of the resampler. dot_delta accumulates
// sum_i w[i] * (s[i] - base) over n contiguous taps (the base-relative form
// keeps constant neighbourhoods exact). conv_rows computes a full output
// line dst[x] = base[x] + sum_j w[j] * (rows[j][x] - base[x]).
struct Backend {
    const char* name;
    double (*dot_delta)(const double* s, const double* w, int n, double base) noexcept;
    void (*conv_rows)(double* dst, const double* base, const double* const* rows,
                      const double* w, int ntaps, int width) noexcept;
};

// Portable reference implementation; always available.
const Backend& scalar_backend() noexcept;

// Every backend usable on this machine (scalar first).
std::vector<const Backend*> available_backends();

// Backend selected at startup: the widest supported vector variant, unless
// the L2I_SIMD environment variable pins one by name ("scalar", "avx2",
// "neon", "auto").
const Backend& active_backend() noexcept;

} // namespace l2i::simd
