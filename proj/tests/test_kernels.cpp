#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "l2interp/kernels.hpp"
#include "l2interp/l2opt.hpp"

using namespace l2i;

TEST_CASE("sinc point values") {
    CHECK(sinc(0.0) == 1.0);
    CHECK(std::fabs(sinc(1.0)) < 1e-15);
    CHECK(sinc(0.5) == doctest::Approx(0.636619772).epsilon(1e-9));
    CHECK(sinc(2.5) == doctest::Approx(0.127323954).epsilon(1e-9));
    CHECK(sinc(-0.5) == sinc(0.5));
}

TEST_CASE("linear kernel") {
    CHECK(eval_linear(0.0) == 1.0);
    CHECK(eval_linear(0.5) == 0.5);
    CHECK(eval_linear(1.0) == 0.0);
    CHECK(eval_linear(1.7) == 0.0);
    CHECK(eval_linear(-0.25) == 0.75);
}

TEST_CASE("keys kernel, canonical a = -1/2") {
    CHECK(eval_keys(-0.5, 0.0) == 1.0);
    CHECK(eval_keys(-0.5, 0.5) == doctest::Approx(0.5625).epsilon(1e-15));
    CHECK(eval_keys(-0.5, 1.5) == doctest::Approx(-0.0625).epsilon(1e-15));
    CHECK(eval_keys(-0.5, 2.0) == 0.0);
    CHECK(eval_keys(-0.5, 2.4) == 0.0);
    // continuity across the segment junction at |x| = 1 for several a values
    for (double a : {-1.0, -0.75, -0.5, -0.25}) {
        CHECK(std::fabs(eval_keys(a, 1.0 - 1e-12) - eval_keys(a, 1.0 + 1e-12)) < 1e-10);
        CHECK(std::fabs(eval_keys(a, 1.0)) < 1e-12);
    }
}

TEST_CASE("cubic6 kernel") {
    CHECK(eval_cubic6(0.0) == 1.0);
    CHECK(eval_cubic6(1.0) == 0.0);
    CHECK(std::fabs(eval_cubic6(1.0 - 1e-12) - eval_cubic6(1.0 + 1e-12)) < 1e-10);
    CHECK(eval_cubic6(2.0) == 0.0);
    CHECK(eval_cubic6(3.0) == 0.0);
    CHECK(eval_cubic6(0.5) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(eval_cubic6(3.2) == 0.0);
}

TEST_CASE("truncated sinc kernel") {
    CHECK(eval_truncated_sinc(3, 0.0) == 1.0);
    CHECK(eval_truncated_sinc(3, 2.5) == doctest::Approx(0.127323954).epsilon(1e-9));
    CHECK(eval_truncated_sinc(3, 3.5) == 0.0);
    CHECK_THROWS_AS(eval_truncated_sinc(0, 0.5), std::invalid_argument);
}

TEST_CASE("blend evaluation") {
    const Kernel lin = make_kernel(KernelId::linear());
    CHECK(eval_blend(0.5, lin, lin, 0.3) == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(eval_blend(0.25, lin, lin, 0.0) == 1.0);
    CHECK_THROWS_AS(eval_blend(0.0, lin, lin, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(eval_blend(1.0, lin, lin, 0.1), std::invalid_argument);

    const Kernel h3 = make_kernel(KernelId::l2opt(3));
    const Kernel c6 = make_kernel(KernelId::cubic6());
    CHECK(eval_blend(0.5, h3, c6, 0.5) == doctest::Approx(0.609687030).epsilon(1e-9));
    const Kernel mix = make_kernel(KernelId::blend(0.5, KernelId::l2opt(3), KernelId::cubic6()));
    CHECK(mix.support == 3);
    CHECK(mix(0.5) == doctest::Approx(0.609687030).epsilon(1e-9));
    CHECK(mix(0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evenness and support are exact") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> dist(0.0, 4.0);
    const std::vector<KernelId> ids = {
        KernelId::linear(), KernelId::keys(), KernelId::cubic6(),
        KernelId::truncated_sinc(3), KernelId::l2opt(2),
        KernelId::blend(0.3, KernelId::l2opt(3), KernelId::cubic6())};
    for (const auto& id : ids) {
        const Kernel k = make_kernel(id);
        for (int i = 0; i < 200; ++i) {
            const double x = dist(rng);
            CHECK(k(x) == k(-x));  // |x| handling makes this exact
        }
        CHECK(k(k.support + 1e-12 + 1e-9) == 0.0);
        CHECK(k(static_cast<double>(k.support) + 0.5) == 0.0);
        CHECK(k(100.0) == 0.0);
    }
}

TEST_CASE("kernel condition checks") {
    SUBCASE("linear is exact") {
        const auto rep = check_kernel_conditions(make_kernel(KernelId::linear()), 1e-3);
        CHECK(rep.cardinality_dev == 0.0);
        CHECK(rep.partition_dev == 0.0);
    }
    SUBCASE("keys holds to rounding") {
        const auto rep = check_kernel_conditions(make_kernel(KernelId::keys()), 1e-3);
        CHECK(rep.cardinality_dev <= 1e-12);
        CHECK(rep.partition_dev <= 1e-12);
    }
    SUBCASE("all conforming ids stay under 1e-9") {
        const std::vector<KernelId> ids = {
            KernelId::linear(), KernelId::keys(), KernelId::keys(-1.0), KernelId::cubic6(),
            KernelId::l2opt(1), KernelId::l2opt(2), KernelId::l2opt(3),
            KernelId::blend(0.5, KernelId::l2opt(3), KernelId::cubic6())};
        for (const auto& id : ids) {
            const auto rep = check_kernel_conditions(make_kernel(id), 1e-3);
            CAPTURE(id.to_string());
            CHECK(rep.cardinality_dev <= 1e-9);
            CHECK(rep.partition_dev <= 1e-9);
        }
    }
    SUBCASE("zero function reports full partition loss") {
        Kernel zero;
        zero.support = 1;
        zero.fn = [](double) { return 0.0; };
        const auto rep = check_kernel_conditions(zero, 1e-2);
        CHECK(rep.partition_dev == 1.0);
        CHECK(rep.cardinality_dev == 1.0);
    }
    SUBCASE("truncated sinc is interpolating but not a partition of unity") {
        const auto rep = check_kernel_conditions(make_kernel(KernelId::truncated_sinc(3)), 1e-2);
        CHECK(rep.cardinality_dev <= 1e-9);
        CHECK(rep.partition_dev > 0.05);
        CHECK(rep.partition_dev < 0.2);
    }
}

TEST_CASE("kernel id parsing and formatting") {
    SUBCASE("round trips") {
        for (const char* text : {"linear", "cubic6", "keys:a=-0.5", "keys:a=-1", "tsinc:L=3",
                                 "l2opt:L=2", "blend:w=0.5,l2opt:L=3,cubic6",
                                 "blend:w=0.25,blend:w=0.5,linear,cubic6,keys:a=-0.5"}) {
            const KernelId id = KernelId::parse(text);
            CHECK(id.to_string() == text);
            CHECK(KernelId::parse(id.to_string()).to_string() == text);
        }
    }
    SUBCASE("defaults") {
        CHECK(KernelId::parse("keys").a == -0.5);
        CHECK(KernelId::parse("keys").to_string() == "keys:a=-0.5");
    }
    SUBCASE("structure") {
        const KernelId id = KernelId::parse("blend:w=0.5,l2opt:L=3,cubic6");
        CHECK(id.kind == KernelKind::Blend);
        CHECK(id.w == 0.5);
        CHECK(id.left->kind == KernelKind::L2Optimal);
        CHECK(id.left->L == 3);
        CHECK(id.right->kind == KernelKind::Cubic6);
    }
    SUBCASE("rejects") {
        for (const char* text :
             {"", "gauss", "keys:a=", "keys:b=1", "tsinc", "tsinc:L=0", "l2opt:L=-2",
              "l2opt:L=2.5", "blend:w=1.5,linear,cubic6", "blend:w=0,linear,cubic6",
              "blend:w=0.5,linear", "linear,extra", "l2opt:L=2junk"}) {
            CAPTURE(text);
            CHECK_THROWS_AS(KernelId::parse(text), std::invalid_argument);
        }
    }
}
