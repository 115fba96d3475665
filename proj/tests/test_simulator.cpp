#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "advlab/adversary.hpp"
#include "advlab/code.hpp"
#include "advlab/simulator.hpp"
#include "support.hpp"

using namespace advlab;

TEST_CASE("decode returns a codeword's own index") {
    const Code ham = Code::hamming74();
    SplitMix64 rng(1);
    for (std::size_t i = 0; i < ham.size(); ++i)
        CHECK(min_distance_decode(ham, ham.word(i), rng) == i);
}

TEST_CASE("decode picks the unique nearest codeword") {
    const Code rep = Code::repetition(3);
    SplitMix64 rng(2);
    CHECK(min_distance_decode(rep, BitWord::from_string("001"), rng) == 0);
    CHECK(min_distance_decode(rep, BitWord::from_string("011"), rng) == 1);
    CHECK_THROWS_AS(min_distance_decode(rep, BitWord::from_string("0011"), rng),
                    std::invalid_argument);
}

TEST_CASE("decode breaks exact ties uniformly") {
    const Code pair(4, {BitWord::from_string("0000"), BitWord::from_string("1111")});
    const BitWord midway = BitWord::from_string("0011");
    SplitMix64 rng(42);
    int ones = 0;
    for (int t = 0; t < 10000; ++t) ones += min_distance_decode(pair, midway, rng) == 1;
    CHECK(ones > 4800);
    CHECK(ones < 5200);
}

TEST_CASE("trial records are internally consistent") {
    const Code code = Code::random_code(9, 12, 5);
    for (std::uint64_t t = 0; t < 200; ++t) {
        for (const std::variant<BscFlip, ConfuserStrategy> kind :
             {std::variant<BscFlip, ConfuserStrategy>(BscFlip{Rational(1, 5)}),
              std::variant<BscFlip, ConfuserStrategy>(ConfuserStrategy{})}) {
            const TrialRecord rec = run_single_trial(code, kind, derive_seed(77, t));
            CHECK(rec.received == (rec.transmitted ^ rec.error_vector));
            CHECK(code.contains(rec.transmitted));
            CHECK(rec.decoded < code.size());
            CHECK(rec.success == (code.word(rec.decoded) == rec.transmitted));
        }
    }
}

TEST_CASE("noiseless channel never errs") {
    const Code code = Code::random_code(8, 10, 3);
    const SimReport report = run_trials(code, BscFlip{Rational(0)}, 500, 11);
    CHECK(report.error_count == 0);
    CHECK(report.avg_error_rate() == 0.0);
    CHECK(report.weight_sum == 0);
    CHECK(report.weight_histogram[0] == 500);
}

TEST_CASE("always-flip channel on the repetition pair errs every time") {
    const SimReport report = run_trials(Code::repetition(3), BscFlip{Rational(1)}, 400, 11);
    CHECK(report.error_count == 400);
    CHECK(report.weight_histogram[3] == 400);
    CHECK(report.mean_error_weight() == 1.0);
}

TEST_CASE("histogram always accounts for every trial") {
    const SimReport report = run_trials(Code::hamming74(), ConfuserStrategy{}, 3000, 9);
    std::uint64_t total = 0;
    for (auto h : report.weight_histogram) total += h;
    CHECK(total == report.trials);
    const auto [lo, hi] = report.error_rate_ci95();
    CHECK(lo >= 0.0);
    CHECK(lo <= report.avg_error_rate());
    CHECK(report.avg_error_rate() <= hi);
    CHECK(hi <= 1.0);
}

TEST_CASE("report does not depend on the worker count") {
    const Code ham = Code::hamming74();
    const SimReport one = run_trials(ham, ConfuserStrategy{}, 5001, 42, default_epsilons(),
                                     std::nullopt, 1);
    const SimReport two = run_trials(ham, ConfuserStrategy{}, 5001, 42, default_epsilons(),
                                     std::nullopt, 2);
    const SimReport many = run_trials(ham, ConfuserStrategy{}, 5001, 42, default_epsilons(),
                                      std::nullopt, 7);
    const SimReport auto_pick = run_trials(ham, ConfuserStrategy{}, 5001, 42);
    CHECK(one.to_json() == two.to_json());
    CHECK(one.to_json() == many.to_json());
    CHECK(one.to_json() == auto_pick.to_json());
}

TEST_CASE("monte carlo agrees with the exact confuser law") {
    const Code ham = Code::hamming74();
    const ExactErrorModel model(ham, ConfuserStrategy{});
    const double exact = to_double(model.exact_decode_error());
    const SimReport report = run_trials(ham, ConfuserStrategy{}, 20000, 7);
    const double se = std::sqrt(exact * (1.0 - exact) / 20000.0);
    CHECK(std::abs(report.avg_error_rate() - exact) < 5.0 * se);
    // mean error weight 7/4, i.e. 1/4 of the block
    CHECK(std::abs(report.mean_error_weight() - 0.25) < 5.0 * report.mean_weight_stderr());
}

TEST_CASE("monte carlo agrees with the exact bsc law") {
    const Code rep = Code::repetition(3);
    const ExactErrorModel model(rep, BscFlip{Rational(1, 10)});
    const double exact = to_double(model.exact_decode_error());  // 7/250
    const SimReport report = run_trials(rep, BscFlip{Rational(1, 10)}, 50000, 21);
    const double se = std::sqrt(exact * (1.0 - exact) / 50000.0);
    CHECK(std::abs(report.avg_error_rate() - exact) < 5.0 * se);
}

TEST_CASE("confuser weight concentration at block length 128") {
    const Code code = Code::random_code(128, 256, 2024);
    const Rational p(3, 10), eps(1, 20);
    const SimReport report =
        run_trials(code, StrongComposite{p, Rational(1, 10)}, 10000, 5, {eps}, p);
    REQUIRE(report.strategy == "confuser");
    // pairwise distances concentrate near n/2, so E wt(e) is close to n/4
    CHECK(report.mean_error_weight() <= 0.25 + 0.01);
    // tail decomposition: trials escaping the p+eps limit are either hidden
    // pairs beyond 2pn (ratio) or binomial deviations (Chernoff), plus noise
    const double escape = 1.0 - report.strong_limit_freq(eps);
    REQUIRE(report.selection.has_value());
    CHECK(escape <=
          report.chernoff_reference(eps) + to_double(report.selection->ratio) + 0.02);
}

TEST_CASE("weak limit audit") {
    const SimReport conf = run_trials(Code::hamming74(), ConfuserStrategy{}, 20000, 3);
    const WeakLimitCheck ok = weak_limit_check(conf, Rational(1, 4));
    CHECK(ok.ok);
    CHECK(ok.margin >= 0.0);

    const SimReport noisy = run_trials(Code::repetition(3), BscFlip{Rational(1, 2)}, 20000, 3);
    const WeakLimitCheck bad = weak_limit_check(noisy, Rational(1, 4));
    CHECK(!bad.ok);
    CHECK(bad.margin < 0.0);
}

TEST_CASE("strong limit frequency uses an exact strict cutoff") {
    SimReport report;
    report.trials = 10;
    report.length = 4;
    report.limit_p = Rational(1, 4);
    report.weight_histogram = {3, 2, 5, 0, 0};
    // cutoff 4 * (1/4 + 1/4) = 2: weight 2 is NOT below the limit
    CHECK(report.strong_limit_freq(Rational(1, 4)) == doctest::Approx(0.5));
    // nudging eps past the boundary brings weight 2 in
    CHECK(report.strong_limit_freq(Rational(26, 100)) == doctest::Approx(1.0));
}

TEST_CASE("chernoff reference value") {
    SimReport report;
    report.length = 8;
    CHECK(report.chernoff_reference(Rational(1, 10)) == doctest::Approx(std::exp(-0.16)));
}

TEST_CASE("default epsilon ladder") {
    const auto eps = default_epsilons();
    REQUIRE(eps.size() == 3);
    CHECK(eps[0] == Rational(1, 100));
    CHECK(eps[1] == Rational(1, 20));
    CHECK(eps[2] == Rational(1, 10));
}

TEST_CASE("report json carries the pinned schema") {
    const SimReport report =
        run_trials(Code::hamming74(), StrongComposite{Rational(3, 10), Rational(1, 2)}, 500, 13);
    CHECK(report.requested == "strong_composite");
    CHECK(report.strategy == "confuser");
    CHECK(report.limit_p == Rational(3, 10));

    const std::string text = report.to_json();
    CHECK(text.back() == '\n');
    const auto j = nlohmann::ordered_json::parse(text);

    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    const std::vector<std::string> expected{
        "trials",       "avg_error_rate",    "error_rate_ci95",
        "mean_error_weight", "weight_histogram", "strong_limit_freq",
        "chernoff_reference", "strategy",        "diagnostics",
        "seed"};
    CHECK(keys == expected);

    CHECK(j["trials"] == 500);
    CHECK(j["seed"] == 13);
    CHECK(j["strategy"] == "confuser");
    CHECK(j["error_rate_ci95"].size() == 2);
    CHECK(j["weight_histogram"].size() == 8);
    CHECK(j["strong_limit_freq"].contains("0.01"));
    CHECK(j["strong_limit_freq"].contains("0.05"));
    CHECK(j["strong_limit_freq"].contains("0.1"));
    CHECK(j["diagnostics"]["requested"] == "strong_composite");
    CHECK(j["diagnostics"]["n"] == 7);
    CHECK(j["diagnostics"]["code_size"] == 16);
    CHECK(j["diagnostics"]["chosen"] == "confuser");
    CHECK(j["diagnostics"]["mass_ratio"] == doctest::Approx(1.0 / 16.0));
    CHECK(j["diagnostics"]["limit_p"] == doctest::Approx(0.3));
}

TEST_CASE("confuser reports default to the quarter limit") {
    const SimReport report = run_trials(Code::repetition(3), ConfuserStrategy{}, 100, 5);
    CHECK(report.limit_p == Rational(1, 4));
    CHECK(report.strategy == "confuser");
    CHECK(report.requested == "confuser");

    const SimReport bsc = run_trials(Code::repetition(3), BscFlip{Rational(1, 10)}, 100, 5);
    CHECK(bsc.limit_p == Rational(1, 10));
    CHECK(bsc.strategy == "bsc");
}

TEST_CASE("zero trials are rejected") {
    CHECK_THROWS_AS(run_trials(Code::repetition(3), ConfuserStrategy{}, 0, 1),
                    std::invalid_argument);
}
