#ifndef ADVLAB_SPECTRUM_HPP
#define ADVLAB_SPECTRUM_HPP

#include <cstdint>
#include <vector>

#include "advlab/code.hpp"
#include "advlab/rational.hpp"

namespace advlab {

// Binary Krawtchouk polynomial K_i(j) over length n, evaluated exactly from
// the defining sum K_i(j) = sum_k (-1)^k C(j,k) C(n-j,i-k).
// Throws std::out_of_range unless 0 <= i,j <= n.
BigInt krawtchouk(int n, int i, int j);

// Full table K[i][j] for 0 <= i,j <= n via the three-term recurrence
// (i+1) K_{i+1}(j) = (n-2j) K_i(j) - (n-i+1) K_{i-1}(j).
// Used for bulk transforms; tests pin it against the defining sum.
std::vector<std::vector<BigInt>> krawtchouk_table(int n);

// Distance distribution {A_i}: A_i = (1/M) |{(c1,c2) in C^2 : d(c1,c2) = i}|.
// Exact rationals; A_0 = 1 and sum A_i = M for any valid code.
class DistanceDistribution {
   public:
    DistanceDistribution(int n, std::size_t m, std::vector<Rational> a);

    int length() const { return n_; }
    std::size_t code_size() const { return m_; }
    const std::vector<Rational>& values() const { return a_; }
    const Rational& at(int i) const { return a_[i]; }

   private:
    int n_;
    std::size_t m_;
    std::vector<Rational> a_;
};

// Dual distribution {A\perp_i} = Krawtchouk transform of {A_i} scaled by 1/M,
// plus the dual distance: smallest i > 0 with A\perp_i != 0, or the sentinel
// n+1 when no such index exists (the full space).
class DualDistribution {
   public:
    DualDistribution(int n, std::vector<Rational> b, int dual_distance);

    int length() const { return n_; }
    const std::vector<Rational>& values() const { return b_; }
    const Rational& at(int i) const { return b_[i]; }
    int dual_distance() const { return dual_distance_; }

   private:
    int n_;
    std::vector<Rational> b_;
    int dual_distance_;
};

DistanceDistribution distance_distribution(const Code& code);
DualDistribution dual_distribution(const DistanceDistribution& dist);

// Number of codewords at each distance w from x; x must be in the code.
std::vector<std::uint64_t> local_weight_distribution(const Code& code, const BitWord& x);

// L_C(p, n) = sum of A_w over w strictly greater than 2pn; the comparison is
// exact against the rational 2pn.
Rational mass_beyond(const DistanceDistribution& dist, const Rational& p);

// Expected pairwise distance (with replacement): (1/M) sum_i i * A_i.
// Always <= n/2 (Plotkin, average form).
Rational plotkin_average(const DistanceDistribution& dist);

struct PlessMoment {
    Rational lhs;   // (1/M)  sum_i (n/2 - i)^r A_i
    Rational rhs;   // (1/2^n) sum_i (n/2 - i)^r C(n,i)
    bool applies;   // r < dual distance; equality is guaranteed only then
};
PlessMoment pless_moment(const DistanceDistribution& dist, int r);

struct ConcentrationTail {
    Rational exact_tail;       // (1/M) sum over i >= n(1/2 + eps) of A_i
    Rational chebyshev_bound;  // 1/(4 n eps^2)
};
// eps must be > 0; when the dual distance exceeds 2, exact_tail <= bound.
ConcentrationTail concentration_tail(const DistanceDistribution& dist, const Rational& eps);

}  // namespace advlab

#endif
