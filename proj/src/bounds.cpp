#include "advlab/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace advlab {

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("binary_entropy: argument must lie in [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double convolve(double omega, double p) { return (1.0 - omega) * p + omega * (1.0 - p); }

double constrained_rate(double p, double omega) {
    const double v = binary_entropy(convolve(omega, p)) - binary_entropy(p);
    if (v < 0.0 && v > -1e-12) return 0.0;
    return v;
}

double strong_adversary_upper(double p) {
    if (!(p >= 0.0 && p <= 0.5))
        throw std::invalid_argument("strong_adversary_upper: p must lie in [0, 1/2]");
    if (p <= 0.25) return 1.0 - binary_entropy(p);
    return binary_entropy(1.0 - 3.0 * p + 4.0 * p * p) - binary_entropy(p);
}

double erasure_strong_upper(double p) {
    if (!(p >= 0.5 && p <= 1.0))
        throw std::invalid_argument("erasure_strong_upper: p must lie in [1/2, 1]");
    return (1.0 - p) * binary_entropy(p);
}

namespace {

// 0, step, 2*step, ... strictly below `hi`, then `hi` itself exactly.
std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(step > 0.0 && step <= 0.5))
        throw std::invalid_argument("grid step must lie in (0, 1/2]");
    std::vector<double> grid;
    for (std::size_t k = 0;; ++k) {
        const double p = lo + static_cast<double>(k) * step;
        if (p >= hi - 1e-12) break;
        grid.push_back(p);
    }
    grid.push_back(hi);
    return grid;
}

void write_row(std::ostream& out, const double* vals, std::size_t count) {
    char buf[64];
    for (std::size_t i = 0; i < count; ++i) {
        std::snprintf(buf, sizeof(buf), "%.12f", vals[i]);
        if (i) out << ',';
        out << buf;
    }
    out << '\n';
}

}  // namespace

BoundCurve curve_emit(double grid_step) {
    BoundCurve curve;
    curve.grid = make_grid(0.0, 0.5, grid_step);
    curve.bsc_capacity.reserve(curve.grid.size());
    curve.strong_adv_upper.reserve(curve.grid.size());
    for (const double p : curve.grid) {
        curve.bsc_capacity.push_back(1.0 - binary_entropy(p));
        curve.strong_adv_upper.push_back(strong_adversary_upper(p));
    }
    for (std::size_t i = 0; i + 1 < curve.grid.size(); ++i) {
        if (curve.grid[i] >= 0.25 - 1e-12 &&
            curve.strong_adv_upper[i + 1] > curve.strong_adv_upper[i] + 1e-12)
            curve.nonincreasing_after_knee = false;
    }
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        const double p = curve.grid[i];
        if (p >= 0.26 - 1e-12 && p <= 0.49 + 1e-12 &&
            curve.bsc_capacity[i] - curve.strong_adv_upper[i] <= 1e-6)
            curve.strictly_below_bsc = false;
    }
    return curve;
}

ErasureCurve erasure_curve(double grid_step) {
    ErasureCurve curve;
    curve.grid = make_grid(0.5, 1.0, grid_step);
    curve.erasure_upper.reserve(curve.grid.size());
    for (const double p : curve.grid) curve.erasure_upper.push_back(erasure_strong_upper(p));
    return curve;
}

void write_curve_csv(const BoundCurve& curve, std::ostream& out) {
    out << "p,bsc_capacity,strong_adv_upper\n";
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        const double row[3] = {curve.grid[i], curve.bsc_capacity[i], curve.strong_adv_upper[i]};
        write_row(out, row, 3);
    }
}

void write_erasure_csv(const ErasureCurve& curve, std::ostream& out) {
    out << "p,erasure_upper\n";
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
        const double row[2] = {curve.grid[i], curve.erasure_upper[i]};
        write_row(out, row, 2);
    }
}

namespace {

constexpr double kWidth = 640.0, kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 20.0, kBottom = 50.0;

double map_x(double p) { return kLeft + p / 0.5 * (kWidth - kLeft - kRight); }
double map_y(double v) { return kHeight - kBottom - v * (kHeight - kTop - kBottom); }

void write_polyline(std::ostream& out, const std::vector<double>& xs,
                    const std::vector<double>& ys, const char* color) {
    out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    char buf[64];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.2f,%.2f ", map_x(xs[i]), map_y(ys[i]));
        out << buf;
    }
    out << "\"/>\n";
}

}  // namespace

void write_curve_svg(const BoundCurve& curve, std::ostream& out) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    out << "  <line x1=\"" << map_x(0) << "\" y1=\"" << map_y(0) << "\" x2=\"" << map_x(0.5)
        << "\" y2=\"" << map_y(0) << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << map_x(0) << "\" y1=\"" << map_y(0) << "\" x2=\"" << map_x(0)
        << "\" y2=\"" << map_y(1) << "\" stroke=\"black\"/>\n";
    char buf[160];
    for (int i = 0; i <= 5; ++i) {
        const double p = 0.1 * i;
        std::snprintf(buf, sizeof(buf),
                      "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" text-anchor=\"middle\">"
                      "%.1f</text>\n",
                      map_x(p), map_y(0) + 16.0, p);
        out << buf;
    }
    for (int i = 0; i <= 5; ++i) {
        const double v = 0.2 * i;
        std::snprintf(buf, sizeof(buf),
                      "  <text x=\"%.1f\" y=\"%.1f\" font-size=\"11\" text-anchor=\"end\">"
                      "%.1f</text>\n",
                      map_x(0) - 6.0, map_y(v) + 4.0, v);
        out << buf;
    }
    out << "  <text x=\"" << (kLeft + (kWidth - kLeft - kRight) / 2) << "\" y=\""
        << (kHeight - 12.0) << "\" font-size=\"12\" text-anchor=\"middle\">p</text>\n"
        << "  <text x=\"16\" y=\"" << (kTop + (kHeight - kTop - kBottom) / 2)
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << (kTop + (kHeight - kTop - kBottom) / 2) << ")\">rate</text>\n";
    write_polyline(out, curve.grid, curve.bsc_capacity, "#1f77b4");
    write_polyline(out, curve.grid, curve.strong_adv_upper, "#d62728");
    out << "  <text x=\"" << (kWidth - 230.0) << "\" y=\"" << (kTop + 16.0)
        << "\" font-size=\"12\" fill=\"#1f77b4\">BSC capacity 1 - h(p)</text>\n"
        << "  <text x=\"" << (kWidth - 230.0) << "\" y=\"" << (kTop + 32.0)
        << "\" font-size=\"12\" fill=\"#d62728\">strong adversary upper bound</text>\n"
        << "</svg>\n";
}

}  // namespace advlab
