#include "l2interp/ilut.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "l2interp/errors.hpp"
#include "l2interp/resample.hpp"

namespace l2i {

Ilut build_ilut(const Kernel& k, int Q, IlutOptions opts) {
    if (Q < 1) throw std::invalid_argument("ILUT requires Q >= 1");
    const int L = k.support;
    const long long count = static_cast<long long>(Q) * L + 1;
    if (count > 50'000'000) throw std::invalid_argument("ILUT size exceeds the cap");

    Ilut t;
    t.Q = Q;
    t.L = L;
    t.source = k.id;
    t.weights.resize(static_cast<size_t>(count));
    for (long long r = 0; r < count; ++r)
        t.weights[static_cast<size_t>(r)] = k(static_cast<double>(r) / static_cast<double>(Q));

    if (opts.renormalize) {
        // Each phase class is the tap set of one interpolation phase; classes
        // p and Q-p alias onto the same table entries, so touch each pair once.
        std::vector<long long> idx;
        for (int p = 0; p <= Q / 2; ++p) {
            double sum = 0.0;
            idx.clear();
            for (int j = -(L - 1); j <= L; ++j) {
                const long long a = std::llabs(static_cast<long long>(p) -
                                               static_cast<long long>(j) * Q);
                sum += t.weights[static_cast<size_t>(a)];
                idx.push_back(a);
            }
            if (sum == 1.0 || sum == 0.0) continue;
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            for (long long a : idx) t.weights[static_cast<size_t>(a)] /= sum;
        }
    }
    return t;
}

double lookup(const Ilut& t, long long r) { return t.lookup(r); }

void write_ilut_csv(const Ilut& t, std::ostream& out) {
    out << "r,x,weight\n";
    char line[96];
    for (size_t r = 0; r < t.weights.size(); ++r) {
        const double x = static_cast<double>(r) / static_cast<double>(t.Q);
        std::snprintf(line, sizeof(line), "%zu,%.9g,%.9g\n", r, x, t.weights[r]);
        out << line;
    }
    if (!out) throw IoError("failed to write ILUT CSV");
}

namespace {

void put_u32le(std::ostream& out, uint32_t v) {
    const unsigned char b[4] = {
        static_cast<unsigned char>(v & 0xff),
        static_cast<unsigned char>((v >> 8) & 0xff),
        static_cast<unsigned char>((v >> 16) & 0xff),
        static_cast<unsigned char>((v >> 24) & 0xff),
    };
    out.write(reinterpret_cast<const char*>(b), 4);
}

uint32_t get_u32le(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    if (in.gcount() != 4) throw IoError("truncated ILUT blob");
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

} // namespace

void write_ilut_blob(const Ilut& t, std::ostream& out) {
    out.write("ILUT", 4);
    put_u32le(out, static_cast<uint32_t>(t.Q));
    put_u32le(out, static_cast<uint32_t>(t.L));
    for (double w : t.weights) {
        const uint64_t bits = std::bit_cast<uint64_t>(w);
        unsigned char b[8];
        for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
        out.write(reinterpret_cast<const char*>(b), 8);
    }
    if (!out) throw IoError("failed to write ILUT blob");
}

Ilut read_ilut_blob(std::istream& in) {
    char magic[4];
    in.read(magic, 4);
    if (in.gcount() != 4 || std::memcmp(magic, "ILUT", 4) != 0)
        throw IoError("not an ILUT blob (bad magic)");
    Ilut t;
    t.Q = static_cast<int>(get_u32le(in));
    t.L = static_cast<int>(get_u32le(in));
    if (t.Q < 1 || t.L < 1) throw IoError("ILUT blob header out of range");
    const long long count = static_cast<long long>(t.Q) * t.L + 1;
    if (count > 50'000'000) throw IoError("ILUT blob size exceeds the cap");
    t.weights.resize(static_cast<size_t>(count));
    for (long long r = 0; r < count; ++r) {
        unsigned char b[8];
        in.read(reinterpret_cast<char*>(b), 8);
        if (in.gcount() != 8) throw IoError("truncated ILUT blob");
        uint64_t bits = 0;
        for (int i = 0; i < 8; ++i) bits |= static_cast<uint64_t>(b[i]) << (8 * i);
        t.weights[static_cast<size_t>(r)] = std::bit_cast<double>(bits);
    }
    return t;
}

double verify_theorem2(const Kernel& k, int Q, int m, const ImageBuffer& test_image) {
    if (Q < 1 || m < 1) throw std::invalid_argument("verify_theorem2 requires m, Q >= 1");
    if (test_image.samples.empty()) throw std::invalid_argument("test image is empty");
    ZoomSpec via_table;
    via_table.m = m;
    via_table.Q = Q;
    via_table.kernel = k.id;
    via_table.use_ilut = true;
    ZoomSpec continuous = via_table;
    continuous.use_ilut = false;

    const RealImage a = zoom_real(test_image, via_table);
    const RealImage b = zoom_real(test_image, continuous);
    double worst = 0.0;
    for (size_t i = 0; i < a.samples.size(); ++i)
        worst = std::max(worst, std::fabs(a.samples[i] - b.samples[i]));
    return worst;
}

} // namespace l2i
