#ifndef ADVLAB_SIMULATOR_HPP
#define ADVLAB_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "advlab/adversary.hpp"
#include "advlab/code.hpp"
#include "advlab/rational.hpp"
#include "advlab/rng.hpp"
#include "advlab/word.hpp"

namespace advlab {

// One decoded transmission.
struct TrialRecord {
    BitWord transmitted;
    BitWord error_vector;
    BitWord received;  // transmitted XOR error_vector
    std::size_t decoded = 0;  // index into the code
    bool success = false;
};

// Nearest codeword by Hamming distance, ties broken uniformly at random
// (single-pass reservoir selection over the minimizers).
std::size_t min_distance_decode(const Code& code, const BitWord& received, SplitMix64& tie_rng);

// One full transmission with its own RNG stream: draw the codeword, set up a
// fresh adversary session, apply it position by position, decode.
TrialRecord run_single_trial(const Code& code,
                             const std::variant<BscFlip, ConfuserStrategy>& resolved,
                             std::uint64_t trial_seed);

// Aggregated Monte Carlo results. All counters are exact integers so that
// merging partial tallies is associative and commutative; the floating-point
// summaries below are derived on demand from the same integers, which makes
// the report byte-identical for a fixed master seed regardless of how many
// workers produced it.
struct SimReport {
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t length = 0;      // block length n
    std::size_t code_size = 0;   // M

    std::string strategy;        // resolved: "bsc" or "confuser"
    std::string requested;       // "bsc", "confuser" or "strong_composite"
    std::optional<Rational> strategy_p;  // flip probability / limit parameter
    std::optional<Rational> composite_c;
    std::optional<StrongSelection> selection;  // present iff a composite was resolved
    Rational limit_p = Rational(1, 4);         // p used for the wt(e)/n < p + eps counts

    std::uint64_t error_count = 0;
    std::uint64_t weight_sum = 0;
    std::uint64_t weight_sq_sum = 0;
    std::vector<std::uint64_t> weight_histogram;  // indexed by wt(e), size n + 1
    std::vector<Rational> epsilons;

    double avg_error_rate() const;
    std::pair<double, double> error_rate_ci95() const;  // Wilson score, z = 1.96
    double mean_error_weight() const;                   // as a fraction of n
    double mean_weight_stderr() const;                  // as a fraction of n
    // Empirical Pr(wt(e)/n < limit_p + eps); the weight cutoff is computed by
    // exact rational comparison, never by rounding n*(p + eps).
    double strong_limit_freq(const Rational& eps) const;
    double chernoff_reference(const Rational& eps) const;  // exp(-2 n eps^2)
    std::string to_json() const;  // two-space indent, trailing newline
};

// wt(e)/n stays below p + eps for every tallied trial? Not required by the
// session contract, audited here.
struct WeakLimitCheck {
    bool ok = false;
    double margin = 0.0;  // p + 3*stderr - mean; nonnegative iff ok
};
WeakLimitCheck weak_limit_check(const SimReport& report, const Rational& p);

std::vector<Rational> default_epsilons();  // {1/100, 1/20, 1/10}

// Runs `trials` independent transmissions. Trial t derives its RNG stream
// from (master_seed, t) alone, so the report does not depend on the worker
// count; workers == 0 picks a thread count automatically. limit_p defaults to
// the strategy's own p, or 1/4 for the bare confuser (its mean error weight
// never exceeds n/4 on any code).
SimReport run_trials(const Code& code, const StrategyKind& kind, std::uint64_t trials,
                     std::uint64_t master_seed,
                     const std::vector<Rational>& epsilons = default_epsilons(),
                     std::optional<Rational> limit_p = std::nullopt, unsigned workers = 0);

}  // namespace advlab

#endif
