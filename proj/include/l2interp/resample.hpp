#pragma once

#include <span>
#include <vector>

#include "l2interp/ilut.hpp"
#include "l2interp/image.hpp"
#include "l2interp/kernels.hpp"

namespace l2i {

enum class Boundary { Clamp, Mirror };

// Separable Q-rational zoom by factor m/Q. Output pixel u interpolates
// source coordinate u*Q/m, tracked in exact integer arithmetic so every
// interpolation phase is a table index.
struct ZoomSpec {
    long long m = 100;
    long long Q = 100;
    KernelId kernel;
    Boundary boundary = Boundary::Clamp;
    bool use_ilut = true;
    bool columns_first = false;  // pass-order swap, used by separability tests
};

// Full-precision raster used between the separable passes.
struct RealImage {
    int width = 0;
    int height = 0;
    std::vector<double> samples;

    RealImage() = default;
    RealImage(int w, int h) : width(w), height(h), samples(static_cast<size_t>(w) * h, 0.0) {}
    double at(int row, int col) const { return samples[static_cast<size_t>(row) * width + col]; }
    double& at(int row, int col) { return samples[static_cast<size_t>(row) * width + col]; }
};

RealImage to_real(const ImageBuffer& img);

// Rounds half away from zero, then clamps into the bit-depth range (the
// negative lobes of every L >= 2 kernel make the clamp load-bearing).
ImageBuffer quantize(const RealImage& img, int bit_depth);

RealImage zoom_real(const ImageBuffer& img, const ZoomSpec& spec);
ImageBuffer zoom(const ImageBuffer& img, const ZoomSpec& spec);

// One interpolated sample of a 1D row at position r/Q via table lookups.
double convolve_sample(std::span<const double> row, long long center_offset_r, const Ilut& t,
                       Boundary boundary = Boundary::Clamp);

// Lossless sample permutations; Rot90/Rot270 swap the canvas dimensions.
enum class Orthogonal { Rot90, Rot180, Rot270, FlipH, FlipV };
ImageBuffer orthogonal_transform(const ImageBuffer& img, Orthogonal op);

// Q-rational approximation of a rotation by angle_deg: n = round(Q cos a),
// m = round(Q sin a), with the reported angle and scale deviations.
struct RationalRotation {
    long long n = 1;
    long long m = 0;
    long long Q = 1;
    double requested_angle_deg = 0.0;
    double angle_deviation_deg = 0.0;
    double implied_scale = 1.0;
};

RationalRotation approximate_rotation(double angle_deg, long long Q);

// Inverse-maps every output pixel through the rational rotation matrix
// (exact integer grid arithmetic), sampling with the separable kernel
// product about the image centre; canvas keeps the input dimensions.
ImageBuffer rotate(const ImageBuffer& img, const RationalRotation& rot, const KernelId& kernel,
                   Boundary boundary = Boundary::Clamp);

} // namespace l2i
