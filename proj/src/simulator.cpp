#include "advlab/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace advlab {

std::size_t min_distance_decode(const Code& code, const BitWord& received, SplitMix64& tie_rng) {
    if (received.length() != code.length())
        throw std::invalid_argument("min_distance_decode: received word has wrong length");
    std::size_t best = 0;
    int best_dist = hamming_distance(code.word(0), received);
    std::uint64_t ties = 1;
    for (std::size_t i = 1; i < code.size(); ++i) {
        const int d = hamming_distance(code.word(i), received);
        if (d < best_dist) {
            best = i;
            best_dist = d;
            ties = 1;
        } else if (d == best_dist) {
            // Reservoir step: the i-th minimizer seen survives w.p. 1/i.
            ++ties;
            if (tie_rng.next_below(ties) == 0) best = i;
        }
    }
    return best;
}

TrialRecord run_single_trial(const Code& code,
                             const std::variant<BscFlip, ConfuserStrategy>& resolved,
                             std::uint64_t trial_seed) {
    SplitMix64 rng(trial_seed);
    const std::size_t n = code.length();

    const std::size_t sent = static_cast<std::size_t>(rng.next_below(code.size()));
    AdversarySession session =
        std::holds_alternative<ConfuserStrategy>(resolved)
            ? AdversarySession::setup_confuser(code, rng.next())
            : AdversarySession::setup_bsc(std::get<BscFlip>(resolved).p, rng.next(),
                                          static_cast<int>(n));

    TrialRecord rec;
    rec.transmitted = code.word(sent);
    BitWord err(n);
    for (std::size_t i = 0; i < n; ++i) {
        const int pos = static_cast<int>(i);
        if (session.act(pos, rec.transmitted.get(pos)) != 0) err.set(i, true);
    }
    rec.error_vector = err;
    rec.received = rec.transmitted ^ err;
    rec.decoded = min_distance_decode(code, rec.received, rng);
    rec.success = (rec.decoded == sent);
    return rec;
}

namespace {

struct Tally {
    std::uint64_t errors = 0;
    std::uint64_t weight_sum = 0;
    std::uint64_t weight_sq_sum = 0;
    std::vector<std::uint64_t> hist;

    explicit Tally(std::size_t n) : hist(n + 1, 0) {}

    void absorb(const TrialRecord& rec) {
        const auto w = static_cast<std::uint64_t>(rec.error_vector.weight());
        if (!rec.success) ++errors;
        weight_sum += w;
        weight_sq_sum += w * w;
        ++hist[static_cast<std::size_t>(w)];
    }
};

std::string format_eps(const Rational& eps) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", to_double(eps));
    return buf;
}

}  // namespace

double SimReport::avg_error_rate() const {
    return static_cast<double>(error_count) / static_cast<double>(trials);
}

std::pair<double, double> SimReport::error_rate_ci95() const {
    const double z = 1.96;
    const double nn = static_cast<double>(trials);
    const double ph = avg_error_rate();
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double center = (ph + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(ph * (1.0 - ph) / nn + z2 / (4.0 * nn * nn)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double SimReport::mean_error_weight() const {
    return static_cast<double>(weight_sum) /
           (static_cast<double>(trials) * static_cast<double>(length));
}

double SimReport::mean_weight_stderr() const {
    if (trials < 2) return 0.0;
    const double nn = static_cast<double>(trials);
    const double sum = static_cast<double>(weight_sum);
    const double sq = static_cast<double>(weight_sq_sum);
    const double var = std::max(0.0, (sq - sum * sum / nn) / (nn - 1.0));
    return std::sqrt(var / nn) / static_cast<double>(length);
}

double SimReport::strong_limit_freq(const Rational& eps) const {
    const Rational bound = (limit_p + eps) * Rational(static_cast<long>(length));
    std::uint64_t count = 0;
    for (std::size_t w = 0; w < weight_histogram.size(); ++w)
        if (Rational(static_cast<long>(w)) < bound) count += weight_histogram[w];
    return static_cast<double>(count) / static_cast<double>(trials);
}

double SimReport::chernoff_reference(const Rational& eps) const {
    const double e = to_double(eps);
    return std::exp(-2.0 * static_cast<double>(length) * e * e);
}

std::string SimReport::to_json() const {
    nlohmann::ordered_json j;
    j["trials"] = trials;
    j["avg_error_rate"] = avg_error_rate();
    const auto [lo, hi] = error_rate_ci95();
    j["error_rate_ci95"] = nlohmann::ordered_json::array({lo, hi});
    j["mean_error_weight"] = mean_error_weight();
    j["weight_histogram"] = weight_histogram;
    nlohmann::ordered_json freq = nlohmann::ordered_json::object();
    nlohmann::ordered_json chern = nlohmann::ordered_json::object();
    for (const Rational& eps : epsilons) {
        const std::string key = format_eps(eps);
        freq[key] = strong_limit_freq(eps);
        chern[key] = chernoff_reference(eps);
    }
    j["strong_limit_freq"] = freq;
    j["chernoff_reference"] = chern;
    j["strategy"] = strategy;
    nlohmann::ordered_json diag = nlohmann::ordered_json::object();
    diag["requested"] = requested;
    if (strategy_p) diag["p"] = to_double(*strategy_p);
    if (composite_c) diag["c"] = to_double(*composite_c);
    diag["limit_p"] = to_double(limit_p);
    diag["n"] = length;
    diag["code_size"] = code_size;
    if (selection) {
        diag["mass_beyond"] = to_double(selection->mass);
        diag["mass_ratio"] = to_double(selection->ratio);
        diag["chosen"] = std::holds_alternative<ConfuserStrategy>(selection->chosen)
                             ? "confuser"
                             : "bsc";
    }
    j["diagnostics"] = diag;
    j["seed"] = seed;
    return j.dump(2) + "\n";
}

WeakLimitCheck weak_limit_check(const SimReport& report, const Rational& p) {
    WeakLimitCheck out;
    out.margin = to_double(p) + 3.0 * report.mean_weight_stderr() - report.mean_error_weight();
    out.ok = out.margin >= 0.0;
    return out;
}

std::vector<Rational> default_epsilons() {
    return {Rational(1, 100), Rational(1, 20), Rational(1, 10)};
}

SimReport run_trials(const Code& code, const StrategyKind& kind, std::uint64_t trials,
                     std::uint64_t master_seed, const std::vector<Rational>& epsilons,
                     std::optional<Rational> limit_p, unsigned workers) {
    if (trials < 1) throw std::invalid_argument("run_trials: trials must be >= 1");

    const StrategyResolution res = resolve_strategy(code, kind);
    const std::size_t n = code.length();

    SimReport report;
    report.trials = trials;
    report.seed = master_seed;
    report.length = n;
    report.code_size = code.size();
    report.strategy = std::holds_alternative<ConfuserStrategy>(res.kind) ? "confuser" : "bsc";
    report.selection = res.selection;
    report.epsilons = epsilons;
    if (const auto* b = std::get_if<BscFlip>(&kind)) {
        report.requested = "bsc";
        report.strategy_p = b->p;
    } else if (const auto* s = std::get_if<StrongComposite>(&kind)) {
        report.requested = "strong_composite";
        report.strategy_p = s->p;
        report.composite_c = s->c;
    } else {
        report.requested = "confuser";
    }
    if (limit_p)
        report.limit_p = *limit_p;
    else if (report.strategy_p)
        report.limit_p = *report.strategy_p;
    else
        report.limit_p = Rational(1, 4);

    unsigned nworkers = workers;
    if (nworkers == 0) {
        nworkers = std::thread::hardware_concurrency();
        if (nworkers == 0) nworkers = 1;
    }
    nworkers = static_cast<unsigned>(
        std::min<std::uint64_t>(nworkers, trials));

    std::vector<Tally> tallies(nworkers, Tally(n));
    auto work = [&](unsigned wi, std::uint64_t lo, std::uint64_t hi) {
        Tally& tally = tallies[wi];
        for (std::uint64_t t = lo; t < hi; ++t)
            tally.absorb(run_single_trial(code, res.kind, derive_seed(master_seed, t)));
    };

    if (nworkers == 1) {
        work(0, 0, trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nworkers);
        const std::uint64_t chunk = trials / nworkers;
        const std::uint64_t extra = trials % nworkers;
        std::uint64_t next = 0;
        for (unsigned wi = 0; wi < nworkers; ++wi) {
            const std::uint64_t len = chunk + (wi < extra ? 1 : 0);
            pool.emplace_back(work, wi, next, next + len);
            next += len;
        }
        for (auto& th : pool) th.join();
    }

    report.weight_histogram.assign(n + 1, 0);
    for (const Tally& tally : tallies) {
        report.error_count += tally.errors;
        report.weight_sum += tally.weight_sum;
        report.weight_sq_sum += tally.weight_sq_sum;
        for (std::size_t w = 0; w <= n; ++w) report.weight_histogram[w] += tally.hist[w];
    }
    return report;
}

}  // namespace advlab
