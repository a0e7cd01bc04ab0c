#include "l2interp/l2opt.hpp"

#include <cmath>
#include <stdexcept>

#include "l2interp/kernels.hpp"

namespace l2i {

namespace {

// Sum over k of Sinc((-1)^(k+n) x + floor((k+1)/2) + (-1)^(k+n+1) floor((n+1)/2)),
// with the floor terms kept in integer arithmetic.
double aliasing_sum(int L, int n, double ax) {
    const int fn = (n + 1) / 2;
    double s = 0.0;
    for (int k = 0; k < 2 * L; ++k) {
        const bool flip = ((k + n) & 1) != 0;
        const int fk = (k + 1) / 2;
        const double arg = flip ? (-ax + static_cast<double>(fk + fn))
                                : (ax + static_cast<double>(fk - fn));
        s += sinc(arg);
    }
    return (1.0 - s) / (2.0 * L);
}

int segment_of(int L, double ax) {
    int n = static_cast<int>(ax * 2.0);
    if (n > 2 * L - 1) n = 2 * L - 1;
    return n;
}

} // namespace

double eval_hl(int L, double x) {
    if (L < 1) throw std::invalid_argument("eval_hl requires L >= 1");
    const double ax = std::fabs(x);
    if (ax >= static_cast<double>(L)) return 0.0;
    const int n = segment_of(L, ax);
    return sinc(ax) + aliasing_sum(L, n, ax);
}

double eval_hl_on_segment(int L, int segment, double x) {
    if (L < 1) throw std::invalid_argument("eval_hl_on_segment requires L >= 1");
    if (segment < 0 || segment > 2 * L - 1)
        throw std::invalid_argument("segment index out of range");
    const double ax = std::fabs(x);
    return sinc(ax) + aliasing_sum(L, segment, ax);
}

double aliasing_term(int L, double x) {
    if (L < 1) throw std::invalid_argument("aliasing_term requires L >= 1");
    const double ax = std::fabs(x);
    if (ax >= static_cast<double>(L)) return -sinc(ax);  // H_L is 0 out there
    return aliasing_sum(L, segment_of(L, ax), ax);
}

double eval_cor2(int L, double x) {
    const double ax = std::fabs(x);
    if (L == 1) {
        if (ax >= 1.0) return 0.0;
        return 0.5 * (1.0 + sinc(ax) - sinc(1.0 - ax));
    }
    if (L == 2) {
        if (ax >= 2.0) return 0.0;
        if (ax <= 1.0)
            return 0.25 * (1.0 + 3.0 * sinc(ax) - sinc(1.0 - ax) - sinc(1.0 + ax) - sinc(2.0 - ax));
        return 0.25 * (1.0 + 3.0 * sinc(ax) - sinc(1.0 - ax) - sinc(2.0 - ax) - sinc(3.0 - ax));
    }
    if (L == 3) {
        if (ax >= 3.0) return 0.0;
        if (ax <= 1.0)
            return (1.0 + 5.0 * sinc(ax) - sinc(1.0 - ax) - sinc(1.0 + ax) - sinc(2.0 - ax) -
                    sinc(2.0 + ax) - sinc(3.0 - ax)) / 6.0;
        if (ax <= 2.0)
            return (1.0 + 5.0 * sinc(ax) - sinc(1.0 - ax) - sinc(1.0 + ax) - sinc(2.0 - ax) -
                    sinc(3.0 - ax) - sinc(4.0 - ax)) / 6.0;
        return (1.0 + 5.0 * sinc(ax) - sinc(1.0 - ax) - sinc(2.0 - ax) - sinc(3.0 - ax) -
                sinc(4.0 - ax) - sinc(5.0 - ax)) / 6.0;
    }
    throw std::invalid_argument("eval_cor2 covers L in {1,2,3} only");
}

namespace {

// Dense solve with partial pivoting; the systems here are tiny (<= 2L-1).
void solve_linear(std::vector<double>& A, std::vector<double>& b, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(A[r * n + col]) > std::fabs(A[piv * n + col])) piv = r;
        if (std::fabs(A[piv * n + col]) < 1e-14)
            throw std::runtime_error("singular system in discrete kernel solve");
        if (piv != col) {
            for (int c = col; c < n; ++c) std::swap(A[piv * n + c], A[col * n + c]);
            std::swap(b[piv], b[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            const double f = A[r * n + col] / A[col * n + col];
            if (f == 0.0) continue;
            for (int c = col; c < n; ++c) A[r * n + c] -= f * A[col * n + c];
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= A[r * n + c] * b[c];
        b[r] = acc / A[r * n + r];
    }
}

} // namespace

DiscretizedKernel solve_discrete_optimal(int L, double grid_step) {
    if (L < 1) throw std::invalid_argument("solve_discrete_optimal requires L >= 1");
    if (!(grid_step > 0.0))
        throw std::invalid_argument("grid_step must be positive");
    const double half_count = 0.5 / grid_step;
    const long long K = std::llround(half_count);
    if (K < 1 || std::fabs(half_count - static_cast<double>(K)) > 1e-9)
        throw std::invalid_argument("grid_step must divide 1/2 evenly");
    if (grid_step > 0.125 + 1e-15)
        throw std::invalid_argument("grid_step must be <= 1/8");

    const int seg_count = 2 * L;
    const int M = seg_count - 1;

    // Pointwise solves on [0, 1/2]: h_sol[j][k] is segment k's value at x' = j*step.
    std::vector<std::vector<double>> h_sol(static_cast<size_t>(K) + 1,
                                           std::vector<double>(seg_count, 0.0));
    std::vector<double> s(seg_count);
    for (long long j = 0; j <= K; ++j) {
        const double xp = static_cast<double>(j) * grid_step;
        for (int k = 0; k < seg_count; ++k) {
            const double xk = static_cast<double>((k + 1) / 2) + ((k & 1) ? -xp : xp);
            s[k] = sinc(xk);
        }
        std::vector<double> A(static_cast<size_t>(M) * M, 1.0);
        std::vector<double> rhs(M);
        for (int r = 0; r < M; ++r) {
            A[static_cast<size_t>(r) * M + r] = 2.0;
            rhs[r] = 1.0 + s[r] - s[seg_count - 1];
        }
        solve_linear(A, rhs, M);
        double total = 0.0;
        for (int k = 0; k < M; ++k) {
            h_sol[j][k] = rhs[k];
            total += rhs[k];
        }
        h_sol[j][seg_count - 1] = 1.0 - total;  // constraint closes the system
    }

    DiscretizedKernel out;
    out.support = L;
    out.grid_step = grid_step;
    const long long total = 2 * L * K;
    out.samples.resize(static_cast<size_t>(total) + 1);
    for (long long i = 0; i <= total; ++i) {
        int n = static_cast<int>(i / K);
        if (n > seg_count - 1) n = seg_count - 1;
        const long long ii = i - static_cast<long long>(n) * K;
        const long long j = (n & 1) ? K - ii : ii;
        out.samples[static_cast<size_t>(i)] = h_sol[static_cast<size_t>(j)][n];
    }
    return out;
}

} // namespace l2i
