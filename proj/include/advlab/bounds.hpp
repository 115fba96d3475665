#ifndef ADVLAB_BOUNDS_HPP
#define ADVLAB_BOUNDS_HPP

#include <iosfwd>
#include <vector>

namespace advlab {

// h(x) = -x log2 x - (1-x) log2 (1-x), with h(0) = h(1) = 0.
double binary_entropy(double x);

// omega * p convolution: (1-omega) p + omega (1-p).
double convolve(double omega, double p);

// Largest rate of a code whose words all have relative weight <= omega that
// still permits reliable BSC(p) communication: h(omega * p) - h(p). Tiny
// negative rounding residues are clamped to zero.
double constrained_rate(double p, double omega);

// Upper bound on the strongly-limited adversary capacity:
//   1 - h(p)                 for p <= 1/4,
//   h(1 - 3p + 4p^2) - h(p)  for 1/4 < p <= 1/2,
// the second piece being constrained_rate(p, 1 - 2p).
double strong_adversary_upper(double p);

// Erasure-style upper bound (1-p) h(p), stated for p >= 1/2 only.
double erasure_strong_upper(double p);

struct BoundCurve {
    std::vector<double> grid;  // strictly increasing, from 0 to 1/2
    std::vector<double> bsc_capacity;
    std::vector<double> strong_adv_upper;
    // Grid-level diagnostics, recomputed on every emission.
    bool nonincreasing_after_knee = true;  // strong curve on [1/4, 1/2]
    bool strictly_below_bsc = true;        // gap > 1e-6 on [0.26, 0.49]
};

// Grid 0, step, 2*step, ... with the final point pinned to exactly 1/2.
BoundCurve curve_emit(double grid_step);

struct ErasureCurve {
    std::vector<double> grid;  // from 1/2 to 1
    std::vector<double> erasure_upper;
};

ErasureCurve erasure_curve(double grid_step);

// CSV with 12 fractional digits and LF endings.
void write_curve_csv(const BoundCurve& curve, std::ostream& out);
void write_erasure_csv(const ErasureCurve& curve, std::ostream& out);

// Self-contained SVG with both curves (BSC capacity and the adversary bound).
void write_curve_svg(const BoundCurve& curve, std::ostream& out);

}  // namespace advlab

#endif
