#ifndef ADVLAB_ADVERSARY_HPP
#define ADVLAB_ADVERSARY_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "advlab/code.hpp"
#include "advlab/rational.hpp"

namespace advlab {

// Strategy descriptors. StrongComposite is the two-case strategy for a
// strongly-p-limited adversary: BSC(p) for p <= 1/4, otherwise either the
// confuser or BSC(p) depending on how much distance mass lies beyond 2pn.
struct BscFlip {
    Rational p;
};
struct ConfuserStrategy {};
struct StrongComposite {
    Rational p;
    Rational c;  // decision constant, 0 < c < 1
};
using StrategyKind = std::variant<BscFlip, ConfuserStrategy, StrongComposite>;

// A configured adversary for one transmission. All randomness (hidden
// codeword, per-position coins) is drawn during setup; act(i, b) is then a
// pure function of (position, current bit), which is exactly the memoryless
// contract: the adversary never sees any other symbol.
class AdversarySession {
   public:
    // Pre-draws n Bernoulli(p) coins; act(i, b) = coin[i] regardless of b.
    static AdversarySession setup_bsc(const Rational& p, std::uint64_t seed, int n);

    // Draws a hidden codeword x uniformly from the code and n fair coins;
    // act(i, b) = coin[i] if b != x[i], else 0.
    static AdversarySession setup_confuser(const Code& code, std::uint64_t seed);

    // Error indicator for position i given the currently transmitted bit.
    int act(int position, int bit) const {
        if (confuser_ && bit == hidden_.get(position)) return 0;
        return coins_[position];
    }

    int length() const { return static_cast<int>(coins_.size()); }
    bool is_confuser() const { return confuser_; }
    const BitWord& hidden_codeword() const { return hidden_; }
    const std::vector<std::uint8_t>& coin_vector() const { return coins_; }

   private:
    AdversarySession() = default;
    bool confuser_ = false;
    BitWord hidden_;
    std::vector<std::uint8_t> coins_;
};

struct StrongSelection {
    StrategyKind chosen;  // BscFlip or ConfuserStrategy
    Rational mass;        // L_C(p, n)
    Rational ratio;       // L / M
};

// The composite strategy's offline decision: BSC(p) when p <= 1/4; otherwise
// confuser when L/M < c, else BSC(p). Diagnostics are always populated.
StrongSelection select_strong_strategy(const Code& code, const Rational& p, const Rational& c);

// A StrategyKind with any StrongComposite resolved to its concrete per-run
// strategy. selection is present iff the input was composite.
struct StrategyResolution {
    std::variant<BscFlip, ConfuserStrategy> kind;
    std::optional<StrongSelection> selection;
};
StrategyResolution resolve_strategy(const Code& code, const StrategyKind& kind);

// Exact joint law of (transmitted codeword, received word), by enumeration.
// Intended as a test oracle for small instances: M <= 64 and n <= 16
// (std::length_error otherwise).
class ExactErrorModel {
   public:
    static constexpr std::size_t kMaxWords = 64;
    static constexpr int kMaxLength = 16;

    ExactErrorModel(const Code& code, const StrategyKind& kind);

    const Code& code() const { return code_; }
    bool resolved_confuser() const { return confuser_; }

    // Pr(y received | codeword at sent_index transmitted), exact.
    Rational prob_received_given_sent(std::uint32_t received, std::size_t sent_index) const;

    // E wt(e) under a uniformly chosen transmitted codeword.
    Rational expected_error_weight() const;

    // Exact average error probability of minimum-distance decoding with
    // uniform tie-breaking, transmitted codeword uniform.
    Rational exact_decode_error() const;

    // q(y; c, x): probability that the confuser with hidden codeword x maps
    // transmitted c to received y. Symmetric under swapping c and x.
    static Rational confuser_pair_weight(const BitWord& y, const BitWord& c, const BitWord& x);

   private:
    Code code_;
    bool confuser_;
    Rational bsc_p_;
    // confuser backend: numer_[c][y] / (M * 2^n) = Pr(y | c)
    std::vector<std::vector<std::uint64_t>> numer_;
};

}  // namespace advlab

#endif
