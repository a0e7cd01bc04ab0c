#pragma once

#include <vector>

namespace l2i {

// Least-squares-optimal interpolating kernel H_L of support L, evaluated via
// its closed form: Sinc(x) plus an alternating sum of shifted sincs on each
// half-unit segment [n/2, (n+1)/2). Even in x, zero for |x| >= L.
double eval_hl(int L, double x);

// Same formula with the segment index forced, for probing one-sided limits
// at the half-unit junctions. x must lie in the closed segment
// [segment/2, (segment+1)/2].
double eval_hl_on_segment(int L, int segment, double x);

// Explicit closed forms of H_1, H_2, H_3 (unit-wide segments, prefactors
// 1/2, 1/4, 1/6). Throws std::invalid_argument unless L is 1, 2 or 3.
double eval_cor2(int L, double x);

// Aliasing term T_L(x) = H_L(x) - Sinc(x), continuous on [0, L) and
// shrinking as L grows.
double aliasing_term(int L, double x);

// Samples of a kernel on the uniform grid x = 0, step, 2*step, ..., L.
struct DiscretizedKernel {
    int support = 0;
    double grid_step = 0.0;
    std::vector<double> samples;
};

// Independent validation oracle: minimizes the discretized near-field
// mismatch against sinc subject to the partition-of-unity constraint, by
// solving at every grid point the (2L-1)-dimensional linear system that the
// pointwise quadratic decouples into (Gaussian elimination, no closed form).
// grid_step must divide 1/2 evenly and be <= 1/8.
DiscretizedKernel solve_discrete_optimal(int L, double grid_step);

} // namespace l2i
