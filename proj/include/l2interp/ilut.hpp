#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "l2interp/image.hpp"
#include "l2interp/kernels.hpp"

namespace l2i {

// Q-rational interpolation look-up table: one-sided kernel samples at
// x = r/Q for r = 0..Q*L, symmetry and finite support supplying the rest.
struct Ilut {
    int Q = 100;
    int L = 1;
    std::vector<double> weights;  // Q*L + 1 entries
    KernelId source;

    double lookup(long long r) const {
        const long long a = r < 0 ? -r : r;
        return a <= static_cast<long long>(Q) * L ? weights[static_cast<size_t>(a)] : 0.0;
    }
};

struct IlutOptions {
    // Rescale each phase class {r, |r - Q|, r + Q, ...} to sum exactly to 1.
    // The raw residual is already tiny for conforming kernels; disable to get
    // bit-for-bit agreement with direct kernel evaluation.
    bool renormalize = true;
};

Ilut build_ilut(const Kernel& k, int Q, IlutOptions opts = {});

double lookup(const Ilut& t, long long r);

// CSV rows "r,x,weight" (x = r/Q), 9 significant digits.
void write_ilut_csv(const Ilut& t, std::ostream& out);

// Compact blob: magic "ILUT", then Q and L as 32-bit little-endian unsigned,
// then the weights as 64-bit little-endian IEEE doubles.
void write_ilut_blob(const Ilut& t, std::ostream& out);
Ilut read_ilut_blob(std::istream& in);

// Zooms test_image by m/Q once with weights recomputed from the kernel and
// once with weights fetched from the table, and returns the largest absolute
// pixel difference before quantization (0 up to floating rounding).
double verify_theorem2(const Kernel& k, int Q, int m, const ImageBuffer& test_image);

} // namespace l2i
