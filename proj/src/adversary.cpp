#include "advlab/adversary.hpp"

#include <stdexcept>

#include "advlab/rng.hpp"
#include "advlab/spectrum.hpp"

namespace advlab {

AdversarySession AdversarySession::setup_bsc(const Rational& p, std::uint64_t seed, int n) {
    if (p < 0 || p > 1) throw std::invalid_argument("BSC crossover probability must be in [0,1]");
    if (n < 1) throw std::invalid_argument("session length must be positive");
    AdversarySession s;
    s.confuser_ = false;
    s.coins_.resize(n);
    SplitMix64 rng(seed);
    const double pd = to_double(p);
    for (int i = 0; i < n; ++i) s.coins_[i] = rng.next_bernoulli(pd) ? 1 : 0;
    return s;
}

AdversarySession AdversarySession::setup_confuser(const Code& code, std::uint64_t seed) {
    AdversarySession s;
    s.confuser_ = true;
    SplitMix64 rng(seed);
    s.hidden_ = code.word(rng.next_below(code.size()));
    const int n = code.length();
    s.coins_.resize(n);
    for (int i = 0; i < n; ++i) s.coins_[i] = rng.next_bit() ? 1 : 0;
    return s;
}

StrongSelection select_strong_strategy(const Code& code, const Rational& p, const Rational& c) {
    if (p < 0 || p > 1) throw std::invalid_argument("p must be in [0,1]");
    if (c <= 0 || c >= 1) throw std::invalid_argument("decision constant c must be in (0,1)");
    const auto dist = distance_distribution(code);
    Rational mass = mass_beyond(dist, p);
    Rational ratio = mass / Rational(code.size());
    StrategyKind chosen;
    if (p <= Rational(1, 4)) {
        chosen = BscFlip{p};
    } else if (ratio < c) {
        chosen = ConfuserStrategy{};
    } else {
        chosen = BscFlip{p};
    }
    return StrongSelection{std::move(chosen), std::move(mass), std::move(ratio)};
}

StrategyResolution resolve_strategy(const Code& code, const StrategyKind& kind) {
    StrategyResolution r;
    if (const auto* bsc = std::get_if<BscFlip>(&kind)) {
        r.kind = *bsc;
    } else if (std::holds_alternative<ConfuserStrategy>(kind)) {
        r.kind = ConfuserStrategy{};
    } else {
        const auto& composite = std::get<StrongComposite>(kind);
        StrongSelection sel = select_strong_strategy(code, composite.p, composite.c);
        if (const auto* bsc = std::get_if<BscFlip>(&sel.chosen))
            r.kind = *bsc;
        else
            r.kind = ConfuserStrategy{};
        r.selection = std::move(sel);
    }
    return r;
}

ExactErrorModel::ExactErrorModel(const Code& code, const StrategyKind& kind) : code_(code) {
    if (code.size() > kMaxWords || code.length() > kMaxLength)
        throw std::length_error("exact error model supports M <= 64, n <= 16");
    const StrategyResolution res = resolve_strategy(code, kind);
    confuser_ = std::holds_alternative<ConfuserStrategy>(res.kind);
    if (!confuser_) {
        bsc_p_ = std::get<BscFlip>(res.kind).p;
        return;
    }
    const int n = code.length();
    const std::size_t m = code.size();
    numer_.assign(m, std::vector<std::uint64_t>(std::size_t(1) << n, 0));
    for (std::size_t ci = 0; ci < m; ++ci) {
        const std::uint32_t cw = code.word(ci).packed();
        for (std::size_t xi = 0; xi < m; ++xi) {
            const std::uint32_t diff = cw ^ code.word(xi).packed();
            const int d = std::popcount(diff);
            const std::uint64_t weight = std::uint64_t(1) << (n - d);
            // every error pattern e within the disagreement set, each 2^-d
            std::uint32_t sub = diff;
            for (;;) {
                numer_[ci][cw ^ sub] += weight;
                if (sub == 0) break;
                sub = (sub - 1) & diff;
            }
        }
    }
}

Rational ExactErrorModel::prob_received_given_sent(std::uint32_t received, std::size_t sent_index) const {
    const int n = code_.length();
    if (!confuser_) {
        const int w = std::popcount(received ^ code_.word(sent_index).packed());
        Rational prob = 1;
        for (int k = 0; k < w; ++k) prob *= bsc_p_;
        for (int k = 0; k < n - w; ++k) prob *= 1 - bsc_p_;
        return prob;
    }
    return Rational(BigInt(numer_[sent_index][received]), BigInt(code_.size()) * pow2(n));
}

Rational ExactErrorModel::expected_error_weight() const {
    const int n = code_.length();
    const std::size_t m = code_.size();
    if (!confuser_) {
        // weight of a Bernoulli(p)^n pattern: sum_w w C(n,w) p^w (1-p)^(n-w)
        Rational total = 0;
        for (int w = 1; w <= n; ++w) {
            Rational prob = Rational(binomial(n, w));
            for (int k = 0; k < w; ++k) prob *= bsc_p_;
            for (int k = 0; k < n - w; ++k) prob *= 1 - bsc_p_;
            total += Rational(w) * prob;
        }
        return total;
    }
    std::uint64_t weighted = 0;
    for (std::size_t ci = 0; ci < m; ++ci) {
        const std::uint32_t cw = code_.word(ci).packed();
        for (std::uint32_t y = 0; y < (std::uint32_t(1) << n); ++y)
            weighted += numer_[ci][y] * static_cast<std::uint64_t>(std::popcount(y ^ cw));
    }
    return Rational(BigInt(weighted), BigInt(m) * BigInt(m) * pow2(n));
}

Rational ExactErrorModel::exact_decode_error() const {
    const int n = code_.length();
    const std::size_t m = code_.size();
    const std::uint32_t space = std::uint32_t(1) << n;

    // minimum distance to the code and its multiplicity, for every y
    std::vector<std::uint8_t> min_dist(space), ties(space);
    std::vector<std::uint32_t> packed(m);
    for (std::size_t i = 0; i < m; ++i) packed[i] = code_.word(i).packed();
    for (std::uint32_t y = 0; y < space; ++y) {
        int best = n + 1, count = 0;
        for (std::size_t i = 0; i < m; ++i) {
            const int d = std::popcount(y ^ packed[i]);
            if (d < best) {
                best = d;
                count = 1;
            } else if (d == best) {
                ++count;
            }
        }
        min_dist[y] = static_cast<std::uint8_t>(best);
        ties[y] = static_cast<std::uint8_t>(count);
    }

    // success = sum over (c, y) of Pr(c, y) * [d(y,c) minimal] / ties(y);
    // group integer mass by tie count (and by error weight for the BSC).
    Rational success = 0;
    if (confuser_) {
        std::vector<std::uint64_t> mass_by_ties(m + 1, 0);
        for (std::size_t ci = 0; ci < m; ++ci) {
            for (std::uint32_t y = 0; y < space; ++y) {
                if (numer_[ci][y] == 0) continue;
                if (std::popcount(y ^ packed[ci]) == min_dist[y]) mass_by_ties[ties[y]] += numer_[ci][y];
            }
        }
        const BigInt denom = BigInt(m) * BigInt(m) * pow2(n);
        for (std::size_t t = 1; t <= m; ++t) {
            if (mass_by_ties[t] != 0) success += Rational(BigInt(mass_by_ties[t]), denom * t);
        }
    } else {
        std::vector<std::vector<std::uint64_t>> count(n + 1, std::vector<std::uint64_t>(m + 1, 0));
        for (std::size_t ci = 0; ci < m; ++ci) {
            for (std::uint32_t y = 0; y < space; ++y) {
                const int w = std::popcount(y ^ packed[ci]);
                if (w == min_dist[y]) ++count[w][ties[y]];
            }
        }
        for (int w = 0; w <= n; ++w) {
            Rational prob = Rational(1, m);
            for (int k = 0; k < w; ++k) prob *= bsc_p_;
            for (int k = 0; k < n - w; ++k) prob *= 1 - bsc_p_;
            for (std::size_t t = 1; t <= m; ++t) {
                if (count[w][t] != 0) success += prob * Rational(BigInt(count[w][t]), BigInt(t));
            }
        }
    }
    return 1 - success;
}

Rational ExactErrorModel::confuser_pair_weight(const BitWord& y, const BitWord& c, const BitWord& x) {
    const BitWord diff = c ^ x;
    const BitWord err = y ^ c;
    for (std::size_t k = 0; k < err.blocks().size(); ++k) {
        if (err.blocks()[k] & ~diff.blocks()[k]) return 0;  // error outside the disagreement set
    }
    return Rational(1, pow2(hamming_distance(c, x)));
}

}  // namespace advlab
