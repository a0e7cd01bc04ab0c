#include "l2interp/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "l2interp/l2opt.hpp"

namespace l2i {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = kPi * x;
    return std::sin(px) / px;
}

double eval_linear(double x) {
    const double ax = std::fabs(x);
    return ax <= 1.0 ? 1.0 - ax : 0.0;
}

double eval_keys(double a, double x) {
    const double ax = std::fabs(x);
    if (ax <= 1.0) return ((a + 2.0) * ax - (a + 3.0)) * ax * ax + 1.0;
    if (ax <= 2.0) return ((a * ax - 5.0 * a) * ax + 8.0 * a) * ax - 4.0 * a;
    return 0.0;
}

double eval_cubic6(double x) {
    const double ax = std::fabs(x);
    if (ax <= 1.0) return ((6.0 * ax - 11.0) * ax * ax + 5.0) / 5.0;
    if (ax <= 2.0) return (((-3.0 * ax + 16.0) * ax - 27.0) * ax + 14.0) / 5.0;
    if (ax <= 3.0) return (((ax - 8.0) * ax + 21.0) * ax - 18.0) / 5.0;
    return 0.0;
}

double eval_truncated_sinc(int L, double x) {
    if (L < 1) throw std::invalid_argument("truncated sinc requires L >= 1");
    const double ax = std::fabs(x);
    return ax <= static_cast<double>(L) ? sinc(ax) : 0.0;
}

double eval_blend(double w, const Kernel& k1, const Kernel& k2, double x) {
    if (!(w > 0.0 && w < 1.0))
        throw std::invalid_argument("blend weight must lie strictly in (0,1)");
    return w * k1(x) + (1.0 - w) * k2(x);
}

// --- KernelId -------------------------------------------------------------

KernelId KernelId::linear() { return KernelId{}; }

KernelId KernelId::keys(double a) {
    KernelId id;
    id.kind = KernelKind::Keys;
    id.a = a;
    id.L = 2;
    return id;
}

KernelId KernelId::cubic6() {
    KernelId id;
    id.kind = KernelKind::Cubic6;
    id.L = 3;
    return id;
}

KernelId KernelId::truncated_sinc(int L) {
    if (L < 1) throw std::invalid_argument("tsinc requires L >= 1");
    KernelId id;
    id.kind = KernelKind::TruncatedSinc;
    id.L = L;
    return id;
}

KernelId KernelId::l2opt(int L) {
    if (L < 1) throw std::invalid_argument("l2opt requires L >= 1");
    KernelId id;
    id.kind = KernelKind::L2Optimal;
    id.L = L;
    return id;
}

KernelId KernelId::blend(double w, KernelId lhs, KernelId rhs) {
    if (!(w > 0.0 && w < 1.0))
        throw std::invalid_argument("blend weight must lie strictly in (0,1)");
    KernelId id;
    id.kind = KernelKind::Blend;
    id.w = w;
    id.left = std::make_shared<KernelId>(std::move(lhs));
    id.right = std::make_shared<KernelId>(std::move(rhs));
    return id;
}

namespace {

std::string fmt_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Recursive-descent parser over a cursor; each id form is self-delimiting.
struct IdParser {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("bad kernel id '" + std::string(s) + "': " + why);
    }

    bool consume(std::string_view tok) {
        if (s.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    double parse_double() {
        size_t start = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '-' || s[pos] == '+' || s[pos] == '.' ||
                                  s[pos] == 'e' || s[pos] == 'E'))
            ++pos;
        if (pos == start) fail("expected a number");
        try {
            size_t used = 0;
            double v = std::stod(std::string(s.substr(start, pos - start)), &used);
            if (used != pos - start) fail("malformed number");
            return v;
        } catch (const std::exception&) {
            fail("malformed number");
        }
    }

    int parse_int() {
        double v = parse_double();
        int i = static_cast<int>(v);
        if (static_cast<double>(i) != v) fail("expected an integer");
        return i;
    }

    KernelId parse_id() {
        if (consume("linear")) return KernelId::linear();
        if (consume("cubic6")) return KernelId::cubic6();
        if (consume("keys")) {
            double a = -0.5;
            if (consume(":")) {
                if (!consume("a=")) fail("keys expects ':a=<value>'");
                a = parse_double();
            }
            return KernelId::keys(a);
        }
        if (consume("tsinc")) {
            if (!consume(":L=")) fail("tsinc expects ':L=<n>'");
            int L = parse_int();
            if (L < 1) fail("tsinc support must be >= 1");
            return KernelId::truncated_sinc(L);
        }
        if (consume("l2opt")) {
            if (!consume(":L=")) fail("l2opt expects ':L=<n>'");
            int L = parse_int();
            if (L < 1) fail("l2opt support must be >= 1");
            return KernelId::l2opt(L);
        }
        if (consume("blend")) {
            if (!consume(":w=")) fail("blend expects ':w=<value>,<id>,<id>'");
            double w = parse_double();
            if (!(w > 0.0 && w < 1.0)) fail("blend weight must lie strictly in (0,1)");
            if (!consume(",")) fail("blend expects a first child kernel");
            KernelId lhs = parse_id();
            if (!consume(",")) fail("blend expects a second child kernel");
            KernelId rhs = parse_id();
            return KernelId::blend(w, std::move(lhs), std::move(rhs));
        }
        fail("unknown kernel name");
    }
};

} // namespace

KernelId KernelId::parse(std::string_view text) {
    IdParser p{text};
    KernelId id = p.parse_id();
    if (p.pos != text.size()) p.fail("trailing characters");
    return id;
}

std::string KernelId::to_string() const {
    switch (kind) {
        case KernelKind::Linear: return "linear";
        case KernelKind::Keys: return "keys:a=" + fmt_num(a);
        case KernelKind::Cubic6: return "cubic6";
        case KernelKind::TruncatedSinc: return "tsinc:L=" + std::to_string(L);
        case KernelKind::L2Optimal: return "l2opt:L=" + std::to_string(L);
        case KernelKind::Blend:
            return "blend:w=" + fmt_num(w) + "," + left->to_string() + "," + right->to_string();
    }
    return "?";
}

Kernel make_kernel(const KernelId& id) {
    Kernel k;
    k.id = id;
    switch (id.kind) {
        case KernelKind::Linear:
            k.support = 1;
            k.fn = [](double x) { return eval_linear(x); };
            break;
        case KernelKind::Keys: {
            const double a = id.a;
            k.support = 2;
            k.fn = [a](double x) { return eval_keys(a, x); };
            break;
        }
        case KernelKind::Cubic6:
            k.support = 3;
            k.fn = [](double x) { return eval_cubic6(x); };
            break;
        case KernelKind::TruncatedSinc: {
            const int L = id.L;
            if (L < 1) throw std::invalid_argument("tsinc requires L >= 1");
            k.support = L;
            k.fn = [L](double x) { return eval_truncated_sinc(L, x); };
            break;
        }
        case KernelKind::L2Optimal: {
            const int L = id.L;
            if (L < 1) throw std::invalid_argument("l2opt requires L >= 1");
            k.support = L;
            k.fn = [L](double x) { return eval_hl(L, x); };
            break;
        }
        case KernelKind::Blend: {
            if (!(id.w > 0.0 && id.w < 1.0))
                throw std::invalid_argument("blend weight must lie strictly in (0,1)");
            if (!id.left || !id.right)
                throw std::invalid_argument("blend requires two child kernels");
            auto lhs = std::make_shared<Kernel>(make_kernel(*id.left));
            auto rhs = std::make_shared<Kernel>(make_kernel(*id.right));
            const double w = id.w;
            k.support = std::max(lhs->support, rhs->support);
            k.fn = [w, lhs, rhs](double x) {
                return w * (*lhs)(x) + (1.0 - w) * (*rhs)(x);
            };
            break;
        }
    }
    return k;
}

ConditionReport check_kernel_conditions(const Kernel& k, double grid_step) {
    if (!(grid_step > 0.0)) throw std::invalid_argument("grid_step must be positive");
    ConditionReport rep;
    const int L = k.support;
    for (int n = -L; n <= L; ++n) {
        const double want = n == 0 ? 1.0 : 0.0;
        rep.cardinality_dev = std::max(rep.cardinality_dev, std::fabs(k(static_cast<double>(n)) - want));
    }
    const long long steps = static_cast<long long>(std::ceil(1.0 / grid_step));
    for (long long i = 0; i <= steps; ++i) {
        const double x = std::min(1.0, static_cast<double>(i) * grid_step);
        double sum = 0.0;
        for (int j = -L; j <= L; ++j) sum += k(x + static_cast<double>(j));
        rep.partition_dev = std::max(rep.partition_dev, std::fabs(sum - 1.0));
    }
    return rep;
}

} // namespace l2i
