#include "l2interp/resample.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "l2interp/simd.hpp"

namespace l2i {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr long long kMaxRatio = 1'000'000;

long long floordiv(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

int resolve_index(long long i, int size, Boundary bd) {
    if (i >= 0 && i < size) return static_cast<int>(i);
    if (size == 1) return 0;
    if (bd == Boundary::Clamp) return i < 0 ? 0 : size - 1;
    const long long period = 2LL * (size - 1);
    long long r = i % period;
    if (r < 0) r += period;
    return static_cast<int>(r < size ? r : period - r);
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Per-output-index tap weights for one separable pass. base[u] is the
// integer source position whose 2L neighbours get convolved.
struct PassPlan {
    int taps = 2;
    std::vector<long long> base;
    std::vector<double> w;
};

// Table entries and direct kernel evaluation share one expression so the
// ILUT and continuous paths stay bit-identical.
struct WeightSource {
    const Kernel* kernel = nullptr;
    const std::vector<double>* table = nullptr;
    long long denom = 1;

    double get(long long abs_index) const {
        if (table) return (*table)[static_cast<size_t>(abs_index)];
        return (*kernel)(static_cast<double>(abs_index) / static_cast<double>(denom));
    }
};

PassPlan build_pass_plan(long long out_count, long long num_step, long long denom, int L,
                         const WeightSource& ws) {
    PassPlan plan;
    plan.taps = 2 * L;
    plan.base.resize(static_cast<size_t>(out_count));
    plan.w.resize(static_cast<size_t>(out_count) * plan.taps);
    for (long long u = 0; u < out_count; ++u) {
        const long long num = u * num_step;
        const long long base = num / denom;
        const long long rem = num - base * denom;
        plan.base[static_cast<size_t>(u)] = base;
        double* wrow = &plan.w[static_cast<size_t>(u) * plan.taps];
        for (int t = 0; t < plan.taps; ++t) {
            const long long jp = t - (L - 1);
            const long long idx = rem - jp * denom;
            wrow[t] = ws.get(idx < 0 ? -idx : idx);
        }
    }
    return plan;
}

void apply_horizontal(const RealImage& src, RealImage& dst, const PassPlan& plan, Boundary bd,
                      const simd::Backend& be) {
    const int in_w = src.width;
    const int taps = plan.taps;
    const int L = taps / 2;
    for (int r = 0; r < src.height; ++r) {
        const double* srow = &src.samples[static_cast<size_t>(r) * in_w];
        double* drow = &dst.samples[static_cast<size_t>(r) * dst.width];
        for (int u = 0; u < dst.width; ++u) {
            const long long base = plan.base[static_cast<size_t>(u)];
            const long long start = base - L + 1;
            const double* wrow = &plan.w[static_cast<size_t>(u) * taps];
            if (start >= 0 && start + taps <= in_w) {
                const double bv = srow[base];
                drow[u] = bv + be.dot_delta(srow + start, wrow, taps, bv);
            } else {
                const double bv = srow[resolve_index(base, in_w, bd)];
                double acc = bv;
                for (int t = 0; t < taps; ++t)
                    acc += wrow[t] * (srow[resolve_index(start + t, in_w, bd)] - bv);
                drow[u] = acc;
            }
        }
    }
}

void apply_vertical(const RealImage& src, RealImage& dst, const PassPlan& plan, Boundary bd,
                    const simd::Backend& be) {
    const int in_h = src.height;
    const int taps = plan.taps;
    const int L = taps / 2;
    std::vector<const double*> rows(static_cast<size_t>(taps));
    for (int v = 0; v < dst.height; ++v) {
        const long long base = plan.base[static_cast<size_t>(v)];
        for (int t = 0; t < taps; ++t) {
            const int rr = resolve_index(base - L + 1 + t, in_h, bd);
            rows[static_cast<size_t>(t)] = &src.samples[static_cast<size_t>(rr) * src.width];
        }
        const double* baserow =
            &src.samples[static_cast<size_t>(resolve_index(base, in_h, bd)) * src.width];
        be.conv_rows(&dst.samples[static_cast<size_t>(v) * dst.width], baserow, rows.data(),
                     &plan.w[static_cast<size_t>(v) * taps], taps, src.width);
    }
}

} // namespace

RealImage to_real(const ImageBuffer& img) {
    RealImage out(img.width, img.height);
    for (size_t i = 0; i < img.samples.size(); ++i)
        out.samples[i] = static_cast<double>(img.samples[i]);
    return out;
}

ImageBuffer quantize(const RealImage& img, int bit_depth) {
    ImageBuffer out(img.width, img.height, bit_depth);
    const long long maxv = out.maxval();
    for (size_t i = 0; i < img.samples.size(); ++i) {
        long long v = std::llround(img.samples[i]);
        if (v < 0) v = 0;
        if (v > maxv) v = maxv;
        out.samples[i] = static_cast<uint16_t>(v);
    }
    return out;
}

RealImage zoom_real(const ImageBuffer& img, const ZoomSpec& spec) {
    if (spec.m < 1 || spec.Q < 1) throw std::invalid_argument("zoom requires m >= 1 and Q >= 1");
    if (spec.m > kMaxRatio || spec.Q > kMaxRatio)
        throw std::invalid_argument("zoom ratio terms must stay <= 1000000");
    if (img.width < 1 || img.height < 1) throw std::invalid_argument("zoom input is empty");

    const long long out_w = ceil_div(static_cast<long long>(img.width) * spec.m, spec.Q);
    const long long out_h = ceil_div(static_cast<long long>(img.height) * spec.m, spec.Q);
    if (out_w < 1 || out_h < 1) throw std::invalid_argument("zoom output would be empty");
    if (out_w > (1 << 20) || out_h > (1 << 20))
        throw std::invalid_argument("zoom output exceeds the size cap");

    const Kernel kernel = make_kernel(spec.kernel);
    const long long g = std::gcd(spec.m, spec.Q);
    const long long num_step = spec.Q / g;  // source numerator advance per output pixel
    const long long denom = spec.m / g;     // phase denominator

    Ilut table;
    WeightSource ws;
    ws.kernel = &kernel;
    ws.denom = denom;
    if (spec.use_ilut) {
        table = build_ilut(kernel, static_cast<int>(denom), IlutOptions{.renormalize = false});
        ws.table = &table.weights;
    }

    const PassPlan plan_w = build_pass_plan(out_w, num_step, denom, kernel.support, ws);
    const PassPlan plan_h = build_pass_plan(out_h, num_step, denom, kernel.support, ws);

    const simd::Backend& be = simd::active_backend();
    const RealImage src = to_real(img);
    if (!spec.columns_first) {
        RealImage tmp(static_cast<int>(out_w), img.height);
        apply_horizontal(src, tmp, plan_w, spec.boundary, be);
        RealImage dst(static_cast<int>(out_w), static_cast<int>(out_h));
        apply_vertical(tmp, dst, plan_h, spec.boundary, be);
        return dst;
    }
    RealImage tmp(img.width, static_cast<int>(out_h));
    apply_vertical(src, tmp, plan_h, spec.boundary, be);
    RealImage dst(static_cast<int>(out_w), static_cast<int>(out_h));
    apply_horizontal(tmp, dst, plan_w, spec.boundary, be);
    return dst;
}

ImageBuffer zoom(const ImageBuffer& img, const ZoomSpec& spec) {
    return quantize(zoom_real(img, spec), img.bit_depth);
}

double convolve_sample(std::span<const double> row, long long center_offset_r, const Ilut& t,
                       Boundary boundary) {
    if (row.empty()) throw std::invalid_argument("convolve_sample requires a nonempty row");
    const int size = static_cast<int>(row.size());
    const long long Q = t.Q;
    const long long base = floordiv(center_offset_r, Q);
    const double bv = row[static_cast<size_t>(resolve_index(base, size, boundary))];
    double acc = bv;
    for (long long k = base - t.L + 1; k <= base + t.L; ++k) {
        const double wk = t.lookup(center_offset_r - k * Q);
        acc += wk * (row[static_cast<size_t>(resolve_index(k, size, boundary))] - bv);
    }
    return acc;
}

ImageBuffer orthogonal_transform(const ImageBuffer& img, Orthogonal op) {
    const int W = img.width;
    const int H = img.height;
    switch (op) {
        case Orthogonal::Rot90: {
            ImageBuffer out(H, W, img.bit_depth);
            for (int r = 0; r < W; ++r)
                for (int c = 0; c < H; ++c) out.at(r, c) = img.at(c, W - 1 - r);
            return out;
        }
        case Orthogonal::Rot270: {
            ImageBuffer out(H, W, img.bit_depth);
            for (int r = 0; r < W; ++r)
                for (int c = 0; c < H; ++c) out.at(r, c) = img.at(H - 1 - c, r);
            return out;
        }
        case Orthogonal::Rot180: {
            ImageBuffer out(W, H, img.bit_depth);
            for (int r = 0; r < H; ++r)
                for (int c = 0; c < W; ++c) out.at(r, c) = img.at(H - 1 - r, W - 1 - c);
            return out;
        }
        case Orthogonal::FlipH: {
            ImageBuffer out(W, H, img.bit_depth);
            for (int r = 0; r < H; ++r)
                for (int c = 0; c < W; ++c) out.at(r, c) = img.at(r, W - 1 - c);
            return out;
        }
        case Orthogonal::FlipV: {
            ImageBuffer out(W, H, img.bit_depth);
            for (int r = 0; r < H; ++r)
                for (int c = 0; c < W; ++c) out.at(r, c) = img.at(H - 1 - r, c);
            return out;
        }
    }
    throw std::invalid_argument("unknown orthogonal transform");
}

RationalRotation approximate_rotation(double angle_deg, long long Q) {
    if (Q < 1) throw std::invalid_argument("rotation requires Q >= 1");
    if (Q > kMaxRatio) throw std::invalid_argument("rotation Q must stay <= 1000000");
    const double rad = angle_deg * kPi / 180.0;
    RationalRotation rot;
    rot.Q = Q;
    rot.requested_angle_deg = angle_deg;
    rot.n = std::llround(static_cast<double>(Q) * std::cos(rad));
    rot.m = std::llround(static_cast<double>(Q) * std::sin(rad));
    rot.angle_deviation_deg =
        angle_deg - std::atan2(static_cast<double>(rot.m), static_cast<double>(rot.n)) * 180.0 / kPi;
    rot.implied_scale = std::hypot(static_cast<double>(rot.n), static_cast<double>(rot.m)) /
                        static_cast<double>(Q);
    return rot;
}

ImageBuffer rotate(const ImageBuffer& img, const RationalRotation& rot, const KernelId& kernel_id,
                   Boundary boundary) {
    const long long n = rot.n;
    const long long m = rot.m;
    const long long R = n * n + m * m;
    if (R == 0) throw std::invalid_argument("degenerate rotation (n = m = 0)");
    if (rot.Q < 1 || rot.Q > kMaxRatio) throw std::invalid_argument("rotation Q out of range");

    const Kernel kernel = make_kernel(kernel_id);
    const int L = kernel.support;
    const int taps = 2 * L;
    const long long denom = 2 * R;  // half-pixel centre offsets double the grid

    // Phase table when it fits; the huge-Q fall-back evaluates the same
    // expression directly, so results do not depend on which path ran.
    std::vector<double> table;
    const long long table_len = denom * L + 1;
    if (table_len <= 4'000'000) {
        table.resize(static_cast<size_t>(table_len));
        for (long long r = 0; r < table_len; ++r)
            table[static_cast<size_t>(r)] =
                kernel(static_cast<double>(r) / static_cast<double>(denom));
    }
    const auto weight_at = [&](long long a) {
        if (!table.empty()) return table[static_cast<size_t>(a)];
        return kernel(static_cast<double>(a) / static_cast<double>(denom));
    };

    const int W = img.width;
    const int H = img.height;
    const RealImage src = to_real(img);
    RealImage dst(W, H);
    const simd::Backend& be = simd::active_backend();

    std::vector<double> wx(static_cast<size_t>(taps));
    std::vector<double> wy(static_cast<size_t>(taps));
    for (int v = 0; v < H; ++v) {
        const long long dv2 = 2LL * v - (H - 1);
        for (int u = 0; u < W; ++u) {
            const long long du2 = 2LL * u - (W - 1);
            const long long nx = R * static_cast<long long>(W - 1) + rot.Q * (n * du2 - m * dv2);
            const long long ny = R * static_cast<long long>(H - 1) + rot.Q * (m * du2 + n * dv2);
            const long long bx = floordiv(nx, denom);
            const long long by = floordiv(ny, denom);
            const long long rx = nx - bx * denom;
            const long long ry = ny - by * denom;
            for (int t = 0; t < taps; ++t) {
                const long long jp = t - (L - 1);
                const long long ix = rx - jp * denom;
                const long long iy = ry - jp * denom;
                wx[static_cast<size_t>(t)] = weight_at(ix < 0 ? -ix : ix);
                wy[static_cast<size_t>(t)] = weight_at(iy < 0 ? -iy : iy);
            }
            const long long startx = bx - L + 1;
            const long long starty = by - L + 1;
            const double bv = src.at(resolve_index(by, H, boundary), resolve_index(bx, W, boundary));
            double acc = bv;
            if (startx >= 0 && startx + taps <= W && starty >= 0 && starty + taps <= H) {
                for (int ty = 0; ty < taps; ++ty) {
                    const double* rowp =
                        &src.samples[static_cast<size_t>(starty + ty) * W + startx];
                    acc += wy[static_cast<size_t>(ty)] * be.dot_delta(rowp, wx.data(), taps, bv);
                }
            } else {
                for (int ty = 0; ty < taps; ++ty) {
                    const int yy = resolve_index(starty + ty, H, boundary);
                    double rowacc = 0.0;
                    for (int tx = 0; tx < taps; ++tx) {
                        const int xx = resolve_index(startx + tx, W, boundary);
                        rowacc += wx[static_cast<size_t>(tx)] * (src.at(yy, xx) - bv);
                    }
                    acc += wy[static_cast<size_t>(ty)] * rowacc;
                }
            }
            dst.at(v, u) = acc;
        }
    }
    return quantize(dst, img.bit_depth);
}

} // namespace l2i
