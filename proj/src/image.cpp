#include "l2interp/image.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "l2interp/errors.hpp"

namespace l2i {

ImageBuffer::ImageBuffer(int w, int h, int depth) : width(w), height(h), bit_depth(depth) {
    if (w < 1 || h < 1) throw std::invalid_argument("image dimensions must be positive");
    if (depth != 8 && depth != 16) throw std::invalid_argument("bit depth must be 8 or 16");
    samples.assign(static_cast<size_t>(w) * h, 0);
}

namespace {

// Reads the next header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in, const std::string& name) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (!std::isspace(c)) {
            tok.push_back(static_cast<char>(c));
            break;
        }
    }
    while ((c = in.get()) != EOF && !std::isspace(c) && c != '#') tok.push_back(static_cast<char>(c));
    if (c != EOF) in.unget();  // leave the terminator for the payload separator
    if (tok.empty()) throw IoError(name + ": truncated PGM header");
    return tok;
}

long parse_header_int(std::istream& in, const std::string& name, const char* what) {
    const std::string tok = next_token(in, name);
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw IoError(name + ": malformed " + what + " in PGM header");
    }
}

} // namespace

ImageBuffer read_pgm(std::istream& in, const std::string& name) {
    std::string magic = next_token(in, name);
    if (magic == "P6" || magic == "P3")
        throw IoError(name + ": color PNM is not supported, expected grayscale PGM");
    if (magic != "P2" && magic != "P5")
        throw IoError(name + ": unsupported format (expected P2 or P5)");

    const long w = parse_header_int(in, name, "width");
    const long h = parse_header_int(in, name, "height");
    const long maxval = parse_header_int(in, name, "maxval");
    if (w < 1 || h < 1 || w > 1 << 20 || h > 1 << 20)
        throw IoError(name + ": invalid PGM dimensions");
    if (maxval < 1 || maxval > 65535)
        throw IoError(name + ": PGM maxval out of range [1,65535]");

    ImageBuffer img(static_cast<int>(w), static_cast<int>(h), maxval <= 255 ? 8 : 16);
    const size_t count = img.samples.size();

    if (magic == "P2") {
        for (size_t i = 0; i < count; ++i) {
            const long v = parse_header_int(in, name, "sample");
            if (v < 0 || v > maxval) throw IoError(name + ": sample value exceeds maxval");
            img.samples[i] = static_cast<uint16_t>(v);
        }
        return img;
    }

    // P5: exactly one whitespace byte separates the header from the payload.
    const int sep = in.get();
    if (sep == EOF || !std::isspace(sep)) throw IoError(name + ": malformed P5 header");
    if (maxval <= 255) {
        std::vector<unsigned char> raw(count);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(count));
        if (static_cast<size_t>(in.gcount()) != count)
            throw IoError(name + ": truncated P5 payload");
        for (size_t i = 0; i < count; ++i) {
            if (raw[i] > maxval) throw IoError(name + ": sample value exceeds maxval");
            img.samples[i] = raw[i];
        }
    } else {
        std::vector<unsigned char> raw(count * 2);
        in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
        if (static_cast<size_t>(in.gcount()) != raw.size())
            throw IoError(name + ": truncated P5 payload");
        for (size_t i = 0; i < count; ++i) {
            const unsigned v = (static_cast<unsigned>(raw[2 * i]) << 8) | raw[2 * i + 1];
            if (v > static_cast<unsigned>(maxval))
                throw IoError(name + ": sample value exceeds maxval");
            img.samples[i] = static_cast<uint16_t>(v);
        }
    }
    return img;
}

ImageBuffer read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open for reading");
    return read_pgm(in, path);
}

void write_pgm(const ImageBuffer& img, std::ostream& out) {
    out << "P5\n" << img.width << " " << img.height << "\n" << img.maxval() << "\n";
    if (img.bit_depth == 8) {
        std::vector<unsigned char> raw(img.samples.size());
        for (size_t i = 0; i < raw.size(); ++i) raw[i] = static_cast<unsigned char>(img.samples[i]);
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    } else {
        std::vector<unsigned char> raw(img.samples.size() * 2);
        for (size_t i = 0; i < img.samples.size(); ++i) {
            raw[2 * i] = static_cast<unsigned char>(img.samples[i] >> 8);
            raw[2 * i + 1] = static_cast<unsigned char>(img.samples[i] & 0xff);
        }
        out.write(reinterpret_cast<const char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    }
    if (!out) throw IoError("failed to write PGM payload");
}

void write_pgm(const ImageBuffer& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError(path + ": cannot open for writing");
    write_pgm(img, out);
    out.flush();
    if (!out) throw IoError(path + ": write failed");
}

namespace {

void require_same_shape(const ImageBuffer& a, const ImageBuffer& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("image dimensions do not match");
}

} // namespace

double image_mae(const ImageBuffer& a, const ImageBuffer& b) {
    require_same_shape(a, b);
    double acc = 0.0;
    for (size_t i = 0; i < a.samples.size(); ++i)
        acc += std::fabs(static_cast<double>(a.samples[i]) - b.samples[i]);
    return acc / static_cast<double>(a.samples.size());
}

long long image_max_abs(const ImageBuffer& a, const ImageBuffer& b) {
    require_same_shape(a, b);
    long long worst = 0;
    for (size_t i = 0; i < a.samples.size(); ++i)
        worst = std::max(worst, std::llabs(static_cast<long long>(a.samples[i]) -
                                           static_cast<long long>(b.samples[i])));
    return worst;
}

double image_psnr(const ImageBuffer& a, const ImageBuffer& b) {
    require_same_shape(a, b);
    double mse = 0.0;
    for (size_t i = 0; i < a.samples.size(); ++i) {
        const double d = static_cast<double>(a.samples[i]) - b.samples[i];
        mse += d * d;
    }
    mse /= static_cast<double>(a.samples.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    const double peak = static_cast<double>(std::max(a.maxval(), b.maxval()));
    return 10.0 * std::log10(peak * peak / mse);
}

} // namespace l2i
