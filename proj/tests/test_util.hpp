#pragma once

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "l2interp/image.hpp"

namespace testutil {

inline l2i::ImageBuffer random_image(std::mt19937& rng, int w, int h, int depth) {
    l2i::ImageBuffer img(w, h, depth);
    std::uniform_int_distribution<int> dist(0, img.maxval());
    for (auto& s : img.samples) s = static_cast<uint16_t>(dist(rng));
    return img;
}

inline l2i::ImageBuffer ramp_image(int w, int h, int depth) {
    l2i::ImageBuffer img(w, h, depth);
    const int maxv = img.maxval();
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c)
            img.at(r, c) = static_cast<uint16_t>(((r + c) * maxv) / (w + h - 2));
    return img;
}

inline l2i::ImageBuffer constant_image(int w, int h, int depth, uint16_t value) {
    l2i::ImageBuffer img(w, h, depth);
    for (auto& s : img.samples) s = value;
    return img;
}

// Band-limited-ish smooth content for round-trip quality checks.
inline l2i::ImageBuffer smooth_image(int w, int h, int depth) {
    l2i::ImageBuffer img(w, h, depth);
    const double peak = img.maxval();
    const double cx = 0.5 * (w - 1);
    const double cy = 0.5 * (h - 1);
    const double s2 = 0.055 * w * h;
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            const double g = std::exp(-((c - cx) * (c - cx) + (r - cy) * (r - cy)) / s2);
            const double wave = std::sin(2 * 3.14159265358979 * c / 19.0) *
                                std::cos(2 * 3.14159265358979 * r / 23.0);
            double v = peak * (0.5 + 0.31 * g + 0.12 * wave);
            if (v < 0) v = 0;
            if (v > peak) v = peak;
            img.at(r, c) = static_cast<uint16_t>(std::llround(v));
        }
    return img;
}

inline std::filesystem::path temp_file(const std::string& stem) {
    static std::mt19937_64 rng{std::random_device{}()};
    return std::filesystem::temp_directory_path() /
           (stem + "-" + std::to_string(rng()) + ".tmp");
}

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace testutil
