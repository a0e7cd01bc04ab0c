#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace l2i {

// Row-major grayscale raster, 8- or 16-bit samples.
struct ImageBuffer {
    int width = 0;
    int height = 0;
    int bit_depth = 8;  // 8 or 16
    std::vector<uint16_t> samples;

    ImageBuffer() = default;
    ImageBuffer(int w, int h, int depth);

    int maxval() const { return bit_depth == 8 ? 255 : 65535; }
    uint16_t at(int row, int col) const {
        return samples[static_cast<size_t>(row) * width + col];
    }
    uint16_t& at(int row, int col) {
        return samples[static_cast<size_t>(row) * width + col];
    }
    bool operator==(const ImageBuffer&) const = default;
};

// PGM (P2 ASCII / P5 binary) reader. maxval <= 255 loads as 8-bit, anything
// up to 65535 as 16-bit with big-endian P5 payload. Throws IoError on
// malformed headers, truncated payloads, or non-PGM magics.
ImageBuffer read_pgm(const std::string& path);
ImageBuffer read_pgm(std::istream& in, const std::string& name = "<stream>");

// Binary P5 writer; round trips read_pgm(write_pgm(x)) bit-exactly.
void write_pgm(const ImageBuffer& img, const std::string& path);
void write_pgm(const ImageBuffer& img, std::ostream& out);

// Objective comparison metrics. Dimensions must match.
double image_mae(const ImageBuffer& a, const ImageBuffer& b);
long long image_max_abs(const ImageBuffer& a, const ImageBuffer& b);
// 10*log10(maxval^2 / MSE); +infinity when the images are identical.
double image_psnr(const ImageBuffer& a, const ImageBuffer& b);

} // namespace l2i
