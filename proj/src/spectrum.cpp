#include "advlab/spectrum.hpp"

#include <stdexcept>

namespace advlab {

BigInt krawtchouk(int n, int i, int j) {
    if (n < 0 || i < 0 || i > n || j < 0 || j > n)
        throw std::out_of_range("krawtchouk requires 0 <= i,j <= n");
    BigInt sum = 0;
    for (int k = 0; k <= i; ++k) {
        const BigInt term = binomial(j, k) * binomial(n - j, i - k);
        if (k % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

std::vector<std::vector<BigInt>> krawtchouk_table(int n) {
    if (n < 0) throw std::out_of_range("krawtchouk_table requires n >= 0");
    std::vector<std::vector<BigInt>> table(n + 1, std::vector<BigInt>(n + 1));
    for (int j = 0; j <= n; ++j) table[0][j] = 1;
    if (n >= 1) {
        for (int j = 0; j <= n; ++j) table[1][j] = n - 2 * j;
        for (int i = 1; i < n; ++i) {
            for (int j = 0; j <= n; ++j) {
                // values are integers, so the division is exact
                table[i + 1][j] = ((n - 2 * j) * table[i][j] - BigInt(n - i + 1) * table[i - 1][j]) / (i + 1);
            }
        }
    }
    return table;
}

DistanceDistribution::DistanceDistribution(int n, std::size_t m, std::vector<Rational> a)
    : n_(n), m_(m), a_(std::move(a)) {
    if (n_ < 1) throw std::invalid_argument("distribution length must be positive");
    if (a_.size() != static_cast<std::size_t>(n_) + 1)
        throw std::invalid_argument("distance distribution needs n+1 entries");
    if (a_[0] != 1) throw std::invalid_argument("A_0 must equal 1");
    Rational total = 0;
    for (const Rational& v : a_) {
        if (v < 0) throw std::invalid_argument("distance distribution entries must be nonnegative");
        total += v;
    }
    if (total != Rational(m_)) throw std::invalid_argument("distance distribution must sum to M");
}

DualDistribution::DualDistribution(int n, std::vector<Rational> b, int dual_distance)
    : n_(n), b_(std::move(b)), dual_distance_(dual_distance) {
    if (b_.size() != static_cast<std::size_t>(n_) + 1)
        throw std::invalid_argument("dual distribution needs n+1 entries");
}

DistanceDistribution distance_distribution(const Code& code) {
    const int n = code.length();
    const std::size_t m = code.size();
    std::vector<std::uint64_t> counts(n + 1, 0);
    for (std::size_t i = 0; i < m; ++i) {
        ++counts[0];  // the (c,c) pair
        for (std::size_t j = i + 1; j < m; ++j) {
            counts[hamming_distance(code.word(i), code.word(j))] += 2;  // ordered pairs
        }
    }
    std::vector<Rational> a(n + 1);
    for (int i = 0; i <= n; ++i) a[i] = Rational(counts[i], m);
    return DistanceDistribution(n, m, std::move(a));
}

DualDistribution dual_distribution(const DistanceDistribution& dist) {
    const int n = dist.length();
    const auto table = krawtchouk_table(n);
    std::vector<Rational> b(n + 1);
    int dual_distance = n + 1;
    for (int i = 0; i <= n; ++i) {
        Rational sum = 0;
        for (int j = 0; j <= n; ++j) sum += Rational(table[i][j]) * dist.at(j);
        b[i] = sum / Rational(dist.code_size());
        if (i > 0 && b[i] != 0 && dual_distance == n + 1) dual_distance = i;
    }
    return DualDistribution(n, std::move(b), dual_distance);
}

std::vector<std::uint64_t> local_weight_distribution(const Code& code, const BitWord& x) {
    if (!code.contains(x)) throw std::invalid_argument("local weight distribution needs x in the code");
    std::vector<std::uint64_t> counts(code.length() + 1, 0);
    for (const BitWord& w : code.words()) ++counts[hamming_distance(w, x)];
    return counts;
}

Rational mass_beyond(const DistanceDistribution& dist, const Rational& p) {
    if (p < 0 || p > 1) throw std::invalid_argument("mass_beyond requires 0 <= p <= 1");
    const Rational threshold = 2 * p * dist.length();
    Rational sum = 0;
    for (int w = 0; w <= dist.length(); ++w) {
        if (Rational(w) > threshold) sum += dist.at(w);
    }
    return sum;
}

Rational plotkin_average(const DistanceDistribution& dist) {
    Rational sum = 0;
    for (int i = 0; i <= dist.length(); ++i) sum += Rational(i) * dist.at(i);
    return sum / Rational(dist.code_size());
}

namespace {

Rational rational_pow(const Rational& base, int e) {
    Rational r = 1;
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

}  // namespace

PlessMoment pless_moment(const DistanceDistribution& dist, int r) {
    if (r < 1) throw std::invalid_argument("pless moment needs r >= 1");
    const int n = dist.length();
    const Rational half_n(n, 2);
    Rational lhs = 0;
    for (int i = 0; i <= n; ++i) lhs += rational_pow(half_n - i, r) * dist.at(i);
    lhs /= Rational(dist.code_size());
    Rational rhs = 0;
    for (int i = 0; i <= n; ++i) rhs += rational_pow(half_n - i, r) * Rational(binomial(n, i));
    rhs /= Rational(pow2(n));
    const int dual_dist = dual_distribution(dist).dual_distance();
    return PlessMoment{std::move(lhs), std::move(rhs), r < dual_dist};
}

ConcentrationTail concentration_tail(const DistanceDistribution& dist, const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("concentration tail needs eps > 0");
    const int n = dist.length();
    const Rational threshold = Rational(n) * (Rational(1, 2) + eps);
    Rational tail = 0;
    for (int i = 0; i <= n; ++i) {
        if (Rational(i) >= threshold) tail += dist.at(i);
    }
    tail /= Rational(dist.code_size());
    const Rational bound = Rational(1) / (Rational(4 * n) * eps * eps);
    return ConcentrationTail{std::move(tail), bound};
}

}  // namespace advlab
