// Command-line front end: kernel curves, Fourier curves, FAE reports, ILUT
// construction, separable zoom, rational rotation, and image comparison.
#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "l2interp/errors.hpp"
#include "l2interp/ilut.hpp"
#include "l2interp/image.hpp"
#include "l2interp/kernels.hpp"
#include "l2interp/resample.hpp"
#include "l2interp/spectral.hpp"

namespace {

using namespace l2i;

std::string g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

// Output sink: --out file or stdout.
struct Sink {
    std::ofstream file;
    std::ostream* out = &std::cout;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path, std::ios::binary);
        if (!file) throw IoError(path + ": cannot open for writing");
        out = &file;
    }
};

Boundary parse_boundary(const std::string& s) {
    if (s == "clamp") return Boundary::Clamp;
    if (s == "mirror") return Boundary::Mirror;
    throw std::invalid_argument("boundary must be 'clamp' or 'mirror'");
}

// Expands `l2opt:L=a..b` / `tsinc:L=a..b` range ids into individual ids.
std::vector<std::string> expand_kernel_ids(const std::vector<std::string>& ids) {
    std::vector<std::string> out;
    for (const std::string& id : ids) {
        const size_t eq = id.find(":L=");
        const size_t dots = id.find("..");
        if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
            out.push_back(id);
            continue;
        }
        const std::string prefix = id.substr(0, eq + 3);
        int lo = 0;
        int hi = 0;
        try {
            lo = std::stoi(id.substr(eq + 3, dots - eq - 3));
            hi = std::stoi(id.substr(dots + 2));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad kernel range '" + id + "'");
        }
        if (lo < 1 || hi < lo) throw std::invalid_argument("bad kernel range '" + id + "'");
        for (int L = lo; L <= hi; ++L) out.push_back(prefix + std::to_string(L));
    }
    return out;
}

double median5(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

// --- subcommand bodies ------------------------------------------------------

void cmd_kernel(const std::string& id_text, double step, int L_override, const std::string& out_path) {
    if (!(step > 0.0)) throw std::invalid_argument("--step must be positive");
    const Kernel k = make_kernel(KernelId::parse(id_text));
    const int L = L_override > 0 ? L_override : k.support;
    Sink sink;
    sink.open(out_path);
    *sink.out << "x,h\n";
    for (long long i = 0;; ++i) {
        const double x = -static_cast<double>(L) + static_cast<double>(i) * step;
        if (x > static_cast<double>(L) + 1e-12) break;
        *sink.out << g9(x) << "," << g9(k(x)) << "\n";
    }
}

void cmd_ft(const std::string& id_text, double t_max, double step, const std::string& out_path) {
    if (!(step > 0.0)) throw std::invalid_argument("--step must be positive");
    if (!(t_max > 0.0)) throw std::invalid_argument("--tmax must be positive");
    const Kernel k = make_kernel(KernelId::parse(id_text));
    Sink sink;
    sink.open(out_path);
    *sink.out << "t,F\n";
    for (long long i = 0;; ++i) {
        const double t = static_cast<double>(i) * step;
        if (t > t_max + 1e-12) break;
        *sink.out << g9(t) << "," << g9(fourier_sample(k, t)) << "\n";
    }
}

void cmd_fae(const std::vector<std::string>& ids, int optimal_sweep, const std::string& out_path) {
    Sink sink;
    sink.open(out_path);
    if (optimal_sweep > 0) {
        *sink.out << "L,E,E_approx\n";
        for (int L = 1; L <= optimal_sweep; ++L)
            *sink.out << L << "," << g9(optimal_fae(L)) << "," << g9(fae_approx(L)) << "\n";
        return;
    }
    if (ids.empty()) throw std::invalid_argument("fae needs at least one kernel id");
    *sink.out << "kernel,L,E1,E2,E\n";
    for (const std::string& text : expand_kernel_ids(ids)) {
        const Kernel k = make_kernel(KernelId::parse(text));
        const FAEReport rep = fae(k);
        *sink.out << rep.kernel_id.to_string() << "," << rep.L << "," << g9(rep.E1) << ","
                  << g9(rep.E2) << "," << g9(rep.E) << "\n";
    }
}

void cmd_ilut(const std::string& id_text, int Q, const std::string& format, bool no_renorm,
              const std::string& out_path) {
    const Kernel k = make_kernel(KernelId::parse(id_text));
    const Ilut t = build_ilut(k, Q, IlutOptions{.renormalize = !no_renorm});
    Sink sink;
    sink.open(out_path);
    if (format == "csv") {
        write_ilut_csv(t, *sink.out);
    } else if (format == "bin") {
        write_ilut_blob(t, *sink.out);
    } else {
        throw std::invalid_argument("--format must be 'csv' or 'bin'");
    }
}

void cmd_zoom(const std::string& in_path, const std::string& out_path, long long m, long long Q,
              const std::string& kernel_text, const std::string& boundary_text, bool use_ilut,
              int timing_runs) {
    const ImageBuffer img = read_pgm(in_path);
    ZoomSpec spec;
    spec.m = m;
    spec.Q = Q;
    spec.kernel = KernelId::parse(kernel_text);
    spec.boundary = parse_boundary(boundary_text);
    spec.use_ilut = use_ilut;

    ImageBuffer result;
    std::vector<double> times;
    for (int run = 0; run < std::max(1, timing_runs); ++run) {
        const auto t0 = std::chrono::steady_clock::now();
        result = zoom(img, spec);
        const auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    write_pgm(result, out_path);
    std::cout << "path=" << (use_ilut ? "ilut" : "analytic")
              << " out=" << result.width << "x" << result.height
              << " interp_ms=" << g9(median5(times)) << "\n";
}

void cmd_rotate(const std::string& in_path, const std::string& out_path, double angle, long long Q,
                const std::string& kernel_text, const std::string& boundary_text) {
    const ImageBuffer img = read_pgm(in_path);
    const RationalRotation rot = approximate_rotation(angle, Q);
    const ImageBuffer result =
        rotate(img, rot, KernelId::parse(kernel_text), parse_boundary(boundary_text));
    write_pgm(result, out_path);
    std::cout << "n=" << rot.n << " m=" << rot.m
              << " angle_deviation_deg=" << g9(rot.angle_deviation_deg)
              << " implied_scale=" << g9(rot.implied_scale) << "\n";
}

// Box-average downscale by an integer factor (reference construction that
// favours no interpolation kernel). Crops to a multiple of the factor.
ImageBuffer box_downscale(const ImageBuffer& img, int factor) {
    const int w = img.width / factor;
    const int h = img.height / factor;
    if (w < 1 || h < 1) throw std::invalid_argument("image too small for the reference protocol");
    ImageBuffer out(w, h, img.bit_depth);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) {
            double acc = 0.0;
            for (int dr = 0; dr < factor; ++dr)
                for (int dc = 0; dc < factor; ++dc)
                    acc += img.at(r * factor + dr, c * factor + dc);
            out.at(r, c) = static_cast<uint16_t>(
                std::llround(acc / (static_cast<double>(factor) * factor)));
        }
    return out;
}

ImageBuffer crop(const ImageBuffer& img, int w, int h) {
    ImageBuffer out(w, h, img.bit_depth);
    for (int r = 0; r < h; ++r)
        for (int c = 0; c < w; ++c) out.at(r, c) = img.at(r, c);
    return out;
}

void print_compare_row(std::ostream& out, const std::string& tag, const ImageBuffer& a,
                       const ImageBuffer& b) {
    const double psnr = image_psnr(a, b);
    out << tag << "," << g9(image_mae(a, b)) << ","
        << (std::isinf(psnr) ? "inf" : g9(psnr)) << "," << image_max_abs(a, b) << "\n";
}

void cmd_compare(const std::string& in_path, long long m, long long Q,
                 const std::string& kernel_a, const std::string& kernel_b,
                 const std::string& boundary_text, bool with_reference,
                 const std::string& out_path) {
    const ImageBuffer img = read_pgm(in_path);
    ZoomSpec spec;
    spec.m = m;
    spec.Q = Q;
    spec.boundary = parse_boundary(boundary_text);
    Sink sink;
    sink.open(out_path);
    *sink.out << "comparison,mae,psnr,max_abs\n";

    if (!with_reference) {
        spec.kernel = KernelId::parse(kernel_a);
        const ImageBuffer za = zoom(img, spec);
        spec.kernel = KernelId::parse(kernel_b);
        const ImageBuffer zb = zoom(img, spec);
        print_compare_row(*sink.out, "a_vs_b", za, zb);
        return;
    }

    if (m % Q != 0 || m / Q < 2)
        throw std::invalid_argument("--reference needs an integer zoom factor >= 2");
    const int factor = static_cast<int>(m / Q);
    const ImageBuffer ref =
        crop(img, (img.width / factor) * factor, (img.height / factor) * factor);
    const ImageBuffer small = box_downscale(ref, factor);

    spec.kernel = KernelId::parse(kernel_a);
    const ImageBuffer za = crop(zoom(small, spec), ref.width, ref.height);
    spec.kernel = KernelId::parse(kernel_b);
    const ImageBuffer zb = crop(zoom(small, spec), ref.width, ref.height);
    print_compare_row(*sink.out, "a_vs_b", za, zb);
    print_compare_row(*sink.out, "a_vs_ref", za, ref);
    print_compare_row(*sink.out, "b_vs_ref", zb, ref);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"L2-optimal interpolation kernels, ILUT resampling, and analytics"};
    app.require_subcommand(1);

    std::string kernel_id = "l2opt:L=2";
    std::string kernel_b = "cubic6";
    std::string in_path;
    std::string out_path;
    std::string out_file;  // CSV sink
    std::string boundary = "clamp";
    std::string format = "csv";
    double step = 0.01;
    double t_max = 2.0;
    double angle = 0.0;
    long long m = 100;
    long long Q = 100;
    int L_override = 0;
    int sweep = 0;
    bool use_ilut = true;
    bool no_renorm = false;
    bool with_reference = false;
    std::vector<std::string> fae_ids;

    CLI::App* c_kernel = app.add_subcommand("kernel", "Emit (x, h(x)) samples of a kernel");
    c_kernel->add_option("kernel", kernel_id, "kernel id")->required();
    c_kernel->add_option("--step", step, "sample spacing (default 0.01)");
    c_kernel->add_option("--L", L_override, "override the plotted half-range");
    c_kernel->add_option("--out", out_file, "write CSV here instead of stdout");

    CLI::App* c_ft = app.add_subcommand("ft", "Emit (t, F_h(t)) Fourier samples");
    c_ft->add_option("kernel", kernel_id, "kernel id")->required();
    c_ft->add_option("--tmax", t_max, "upper frequency bound (default 2)");
    double ft_step = 0.005;
    c_ft->add_option("--step", ft_step, "frequency spacing (default 0.005)");
    c_ft->add_option("--out", out_file, "write CSV here instead of stdout");

    CLI::App* c_fae = app.add_subcommand("fae", "Report frequency approximation errors");
    c_fae->add_option("kernels", fae_ids, "kernel ids (ranges like l2opt:L=1..20 expand)");
    c_fae->add_option("--optimal-sweep", sweep, "emit (L, E_L, approx) series up to this L");
    c_fae->add_option("--out", out_file, "write CSV here instead of stdout");

    CLI::App* c_ilut = app.add_subcommand("ilut", "Build and serialize an interpolation LUT");
    c_ilut->add_option("--kernel", kernel_id, "kernel id")->required();
    c_ilut->add_option("--Q", Q, "rational denominator (default 100)");
    c_ilut->add_option("--format", format, "csv or bin (default csv)");
    c_ilut->add_flag("--no-renorm", no_renorm, "skip the phase-class renormalization");
    c_ilut->add_option("--out", out_file, "write here instead of stdout");

    CLI::App* c_zoom = app.add_subcommand("zoom", "Zoom a PGM image by m/Q");
    c_zoom->add_option("input", in_path, "input PGM")->required();
    c_zoom->add_option("output", out_path, "output PGM")->required();
    c_zoom->add_option("--m", m, "zoom numerator")->required();
    c_zoom->add_option("--Q", Q, "zoom denominator (default 100)");
    c_zoom->add_option("--kernel", kernel_id, "kernel id (default l2opt:L=2)");
    c_zoom->add_option("--boundary", boundary, "clamp or mirror (default clamp)");
    c_zoom->add_flag("--ilut,!--no-ilut", use_ilut, "use the lookup-table path (default on)");
    int timing_runs = 5;
    c_zoom->add_option("--timing-runs", timing_runs, "interpolation timing repetitions");

    CLI::App* c_rotate = app.add_subcommand("rotate", "Rotate a PGM image via a Q-rational matrix");
    c_rotate->add_option("input", in_path, "input PGM")->required();
    c_rotate->add_option("output", out_path, "output PGM")->required();
    c_rotate->add_option("--angle", angle, "rotation angle in degrees")->required();
    c_rotate->add_option("--Q", Q, "rational denominator (default 100)");
    c_rotate->add_option("--kernel", kernel_id, "kernel id (default l2opt:L=2)");
    c_rotate->add_option("--boundary", boundary, "clamp or mirror (default clamp)");

    CLI::App* c_compare = app.add_subcommand("compare", "Zoom with two kernels and report metrics");
    c_compare->add_option("input", in_path, "input PGM")->required();
    c_compare->add_option("--m", m, "zoom numerator")->required();
    c_compare->add_option("--Q", Q, "zoom denominator (default 100)");
    c_compare->add_option("--kernel-a", kernel_id, "first kernel")->required();
    c_compare->add_option("--kernel-b", kernel_b, "second kernel")->required();
    c_compare->add_option("--boundary", boundary, "clamp or mirror (default clamp)");
    c_compare->add_flag("--reference", with_reference,
                        "score against a box-downscaled-then-upscaled reference");
    c_compare->add_option("--out", out_file, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_kernel)) cmd_kernel(kernel_id, step, L_override, out_file);
        else if (app.got_subcommand(c_ft)) cmd_ft(kernel_id, t_max, ft_step, out_file);
        else if (app.got_subcommand(c_fae)) cmd_fae(fae_ids, sweep, out_file);
        else if (app.got_subcommand(c_ilut)) cmd_ilut(kernel_id, static_cast<int>(Q), format, no_renorm, out_file);
        else if (app.got_subcommand(c_zoom))
            cmd_zoom(in_path, out_path, m, Q, kernel_id, boundary, use_ilut, timing_runs);
        else if (app.got_subcommand(c_rotate))
            cmd_rotate(in_path, out_path, angle, Q, kernel_id, boundary);
        else if (app.got_subcommand(c_compare))
            cmd_compare(in_path, m, Q, kernel_id, kernel_b, boundary, with_reference, out_file);
        return 0;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
