#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace l2i {

// sin(pi*x)/(pi*x), with the removable singularity handled at x = 0.
double sinc(double x);

enum class KernelKind {
    Linear,
    Keys,
    Cubic6,
    TruncatedSinc,
    L2Optimal,
    Blend,
};

// Parsed identity of an interpolation kernel. Canonical textual forms:
//   linear | keys:a=-0.5 | cubic6 | tsinc:L=3 | l2opt:L=2
//   blend:w=0.5,<left>,<right>        (left/right may themselves be blends)
struct KernelId {
    KernelKind kind = KernelKind::Linear;
    double a = -0.5;  // Keys parameter
    int L = 1;        // TruncatedSinc / L2Optimal support
    double w = 0.5;   // Blend weight, strictly in (0,1)
    std::shared_ptr<KernelId> left;   // Blend only
    std::shared_ptr<KernelId> right;  // Blend only

    static KernelId parse(std::string_view text);
    std::string to_string() const;

    static KernelId linear();
    static KernelId keys(double a = -0.5);
    static KernelId cubic6();
    static KernelId truncated_sinc(int L);
    static KernelId l2opt(int L);
    static KernelId blend(double w, KernelId lhs, KernelId rhs);
};

// A symmetric finite-support interpolation kernel: support half-width L plus
// an even evaluation function that is identically zero for |x| > L.
struct Kernel {
    int support = 1;
    KernelId id;
    std::function<double(double)> fn;

    double operator()(double x) const { return fn(x); }
};

Kernel make_kernel(const KernelId& id);

// Piecewise evaluations of the classical kernels (all take |x| internally).
double eval_linear(double x);
double eval_keys(double a, double x);
double eval_cubic6(double x);
double eval_truncated_sinc(int L, double x);

// w*k1(x) + (1-w)*k2(x); throws std::invalid_argument unless 0 < w < 1.
double eval_blend(double w, const Kernel& k1, const Kernel& k2, double x);

// Measured deviation from the two interpolating-kernel conditions:
// cardinality max|h(n) - delta| over integers |n| <= L, and partition of
// unity max|sum_k h(x+k) - 1| over x in [0,1] sampled at grid_step.
struct ConditionReport {
    double cardinality_dev = 0.0;
    double partition_dev = 0.0;
};

ConditionReport check_kernel_conditions(const Kernel& k, double grid_step);

} // namespace l2i
