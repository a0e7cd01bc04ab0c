#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "l2interp/simd.hpp"

using namespace l2i;

TEST_CASE("backend roster") {
    const auto all = simd::available_backends();
    REQUIRE(!all.empty());
    CHECK(std::strcmp(all.front()->name, "scalar") == 0);
#if defined(__x86_64__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
        bool found = false;
        for (const auto* b : all) found = found || std::strcmp(b->name, "avx2") == 0;
        CHECK(found);
    }
#endif
    CHECK(simd::active_backend().dot_delta != nullptr);
    CHECK(simd::active_backend().conv_rows != nullptr);
    // dispatch is stable
    CHECK(&simd::active_backend() == &simd::active_backend());
}

TEST_CASE("vector variants match the scalar reference") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-100.0, 100.0);
    const auto& ref = simd::scalar_backend();

    for (const auto* be : simd::available_backends()) {
        CAPTURE(be->name);

        SUBCASE("tap dot products") {
            for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 12, 16}) {
                for (int trial = 0; trial < 50; ++trial) {
                    std::vector<double> s(static_cast<size_t>(n));
                    std::vector<double> w(static_cast<size_t>(n));
                    for (auto& v : s) v = dist(rng);
                    for (auto& v : w) v = dist(rng) / 100.0;
                    const double base = dist(rng);
                    const double got = be->dot_delta(s.data(), w.data(), n, base);
                    const double want = ref.dot_delta(s.data(), w.data(), n, base);
                    CHECK(std::fabs(got - want) <= 1e-10 * (1.0 + std::fabs(want)));
                    // determinism of the variant itself
                    CHECK(got == be->dot_delta(s.data(), w.data(), n, base));
                }
            }
        }

        SUBCASE("line convolutions") {
            for (int width : {1, 3, 4, 7, 32, 67}) {
                for (int taps : {2, 4, 6}) {
                    std::vector<std::vector<double>> rows(static_cast<size_t>(taps));
                    std::vector<const double*> rowp(static_cast<size_t>(taps));
                    for (int j = 0; j < taps; ++j) {
                        rows[static_cast<size_t>(j)].resize(static_cast<size_t>(width));
                        for (auto& v : rows[static_cast<size_t>(j)]) v = dist(rng);
                        rowp[static_cast<size_t>(j)] = rows[static_cast<size_t>(j)].data();
                    }
                    std::vector<double> base(static_cast<size_t>(width));
                    for (auto& v : base) v = dist(rng);
                    std::vector<double> w(static_cast<size_t>(taps));
                    for (auto& v : w) v = dist(rng) / 50.0;

                    std::vector<double> got(static_cast<size_t>(width));
                    std::vector<double> want(static_cast<size_t>(width));
                    be->conv_rows(got.data(), base.data(), rowp.data(), w.data(), taps, width);
                    ref.conv_rows(want.data(), base.data(), rowp.data(), w.data(), taps, width);
                    for (int x = 0; x < width; ++x)
                        CHECK(std::fabs(got[static_cast<size_t>(x)] - want[static_cast<size_t>(x)]) <=
                              1e-10 * (1.0 + std::fabs(want[static_cast<size_t>(x)])));
                }
            }
        }

        SUBCASE("constant neighbourhoods are exact in every variant") {
            std::vector<double> s(8, 37.25);
            std::vector<double> w = {0.1, -0.2, 0.55, 0.71, -0.31, 0.15, 0.07, -0.07};
            CHECK(be->dot_delta(s.data(), w.data(), 8, 37.25) == 0.0);
        }
    }
}
