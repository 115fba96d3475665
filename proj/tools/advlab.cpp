// advlab: generate codes, analyze their distance spectra, simulate
// adversarial channels, emit capacity bound curves, and solve the skewed /
// classical Delsarte linear programs. Exit codes: 0 ok, 1 usage, 2 bad input
// data, 3 solver failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "advlab/adversary.hpp"
#include "advlab/bounds.hpp"
#include "advlab/code.hpp"
#include "advlab/errors.hpp"
#include "advlab/lp.hpp"
#include "advlab/rational.hpp"
#include "advlab/simulator.hpp"
#include "advlab/spectrum.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using advlab::Rational;

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw advlab::InputDataError("cannot open output file: " + path);
    return out;
}

unsigned env_workers() {
    const char* raw = std::getenv("ADVLAB_THREADS");
    if (raw == nullptr || *raw == '\0') return 0;  // auto
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1)
        throw std::invalid_argument("ADVLAB_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
}

std::string rational_str(const Rational& v) { return advlab::to_string(v); }

int run_gen(const std::string& kind, int n, std::size_t m, std::uint64_t seed,
            const std::string& out_path) {
    advlab::Code code = [&] {
        if (kind == "full") return advlab::Code::full_space(n);
        if (kind == "repetition") return advlab::Code::repetition(n);
        if (kind == "parity") return advlab::Code::parity(n);
        if (kind == "hamming74") {
            if (n != 0 && n != 7)
                throw std::invalid_argument("hamming74 has fixed length 7");
            return advlab::Code::hamming74();
        }
        if (kind == "random") {
            if (m == 0) throw std::invalid_argument("gen random requires --m");
            return advlab::Code::random_code(n, m, seed);
        }
        throw std::invalid_argument("unknown code kind: " + kind);
    }();
    if (out_path.empty() || out_path == "-") {
        advlab::save_code(code, std::cout);
    } else {
        auto out = open_output(out_path);
        advlab::save_code(code, out);
    }
    return 0;
}

int run_analyze(const std::string& code_path, const std::optional<Rational>& p, int pless_r,
                bool as_json) {
    const advlab::Code code = advlab::load_code_file(code_path);
    const auto dist = advlab::distance_distribution(code);
    const auto dual = advlab::dual_distribution(dist);
    const Rational plotkin = advlab::plotkin_average(dist);
    const auto pless = advlab::pless_moment(dist, pless_r);

    std::optional<Rational> mass;
    std::optional<Rational> ratio;
    if (p) {
        mass = advlab::mass_beyond(dist, *p);
        ratio = *mass / Rational(static_cast<unsigned long>(code.size()));
    }

    if (as_json) {
        nlohmann::ordered_json j;
        j["n"] = code.length();
        j["m"] = code.size();
        nlohmann::ordered_json da = nlohmann::ordered_json::array();
        for (int i = 0; i <= code.length(); ++i) da.push_back(rational_str(dist.at(i)));
        j["distance_distribution"] = da;
        nlohmann::ordered_json db = nlohmann::ordered_json::array();
        for (int i = 0; i <= code.length(); ++i) db.push_back(rational_str(dual.at(i)));
        j["dual_distribution"] = db;
        j["dual_distance"] = dual.dual_distance();
        j["plotkin_average"] = rational_str(plotkin);
        j["plotkin_average_value"] = advlab::to_double(plotkin);
        nlohmann::ordered_json pm;
        pm["r"] = pless_r;
        pm["applies"] = pless.applies;
        pm["lhs"] = rational_str(pless.lhs);
        pm["rhs"] = rational_str(pless.rhs);
        pm["holds"] = !pless.applies || pless.lhs == pless.rhs;
        j["pless_moment"] = pm;
        if (p) {
            j["p"] = rational_str(*p);
            j["mass_beyond"] = rational_str(*mass);
            j["mass_ratio"] = rational_str(*ratio);
            j["mass_ratio_value"] = advlab::to_double(*ratio);
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << "n: " << code.length() << "\nM: " << code.size() << "\n";
    std::cout << "distance distribution:\n";
    for (int i = 0; i <= code.length(); ++i)
        if (dist.at(i) != 0) std::cout << "  A_" << i << " = " << rational_str(dist.at(i)) << "\n";
    std::cout << "dual distribution:\n";
    for (int i = 0; i <= code.length(); ++i)
        if (dual.at(i) != 0) std::cout << "  A'_" << i << " = " << rational_str(dual.at(i)) << "\n";
    std::cout << "dual distance: " << dual.dual_distance();
    if (dual.dual_distance() > code.length()) std::cout << " (no nonzero dual component)";
    std::cout << "\nPlotkin average distance: " << rational_str(plotkin) << " (n/2 = "
              << rational_str(Rational(code.length(), 2)) << ")\n";
    std::cout << "Pless moment r=" << pless_r << ": ";
    if (pless.applies)
        std::cout << rational_str(pless.lhs) << " vs " << rational_str(pless.rhs)
                  << (pless.lhs == pless.rhs ? " (equal)" : " (UNEQUAL)") << "\n";
    else
        std::cout << "not applicable (r >= dual distance), lhs " << rational_str(pless.lhs)
                  << ", rhs " << rational_str(pless.rhs) << "\n";
    if (p) {
        std::cout << "mass beyond 2pn at p=" << rational_str(*p) << ": " << rational_str(*mass)
                  << " (ratio " << rational_str(*ratio) << ")\n";
    }
    return 0;
}

int run_simulate(const std::string& code_path, const std::string& adversary,
                 const std::optional<Rational>& p, const Rational& c, std::uint64_t trials,
                 std::uint64_t seed, const std::vector<std::string>& eps_raw,
                 const std::optional<Rational>& limit_p, const std::string& out_path) {
    const advlab::Code code = advlab::load_code_file(code_path);

    advlab::StrategyKind kind = [&]() -> advlab::StrategyKind {
        if (adversary == "bsc") {
            if (!p) throw std::invalid_argument("--adversary bsc requires --p");
            return advlab::BscFlip{*p};
        }
        if (adversary == "confuser") return advlab::ConfuserStrategy{};
        if (adversary == "strong") {
            if (!p) throw std::invalid_argument("--adversary strong requires --p");
            return advlab::StrongComposite{*p, c};
        }
        throw std::invalid_argument("unknown adversary kind: " + adversary);
    }();

    std::vector<Rational> epsilons;
    if (eps_raw.empty()) {
        epsilons = advlab::default_epsilons();
    } else {
        for (const auto& s : eps_raw) epsilons.push_back(advlab::parse_rational(s));
    }

    std::optional<Rational> lim = limit_p;
    if (!lim && std::holds_alternative<advlab::ConfuserStrategy>(kind) && p) lim = *p;

    const advlab::SimReport report =
        advlab::run_trials(code, kind, trials, seed, epsilons, lim, env_workers());
    if (out_path.empty() || out_path == "-") {
        std::cout << report.to_json();
    } else {
        auto out = open_output(out_path);
        out << report.to_json();
    }
    return 0;
}

int run_bounds(const std::string& step_raw, const std::string& out_path,
               const std::string& svg_path, const std::string& erasure_path) {
    const double step = advlab::to_double(advlab::parse_rational(step_raw));
    const advlab::BoundCurve curve = advlab::curve_emit(step);
    {
        auto out = open_output(out_path);
        advlab::write_curve_csv(curve, out);
    }
    if (!svg_path.empty()) {
        auto out = open_output(svg_path);
        advlab::write_curve_svg(curve, out);
    }
    if (!erasure_path.empty()) {
        auto out = open_output(erasure_path);
        advlab::write_erasure_csv(advlab::erasure_curve(step), out);
    }
    if (!curve.nonincreasing_after_knee)
        std::cerr << "warning: bound not nonincreasing past p = 1/4 on this grid\n";
    if (!curve.strictly_below_bsc)
        std::cerr << "warning: bound not strictly below BSC capacity on [0.26, 0.49]\n";
    return 0;
}

int run_lp(bool classical, int n, int d, const std::optional<Rational>& p, const Rational& c,
           double tol, const std::string& out_path) {
    nlohmann::ordered_json j;
    bool degenerate = false;   // optimal but beta ~ 0: reported, not an error
    bool unsound = false;      // exact recheck contradicts the solver: error

    if (classical) {
        const advlab::LpSolution sol = advlab::classical_delsarte_lp(n, d, tol);
        j["status"] = advlab::to_string(sol.status);
        if (sol.status == advlab::LpStatus::optimal) {
            const auto check = advlab::verify_classical_certificate(sol, n, d);
            j["bound"] = check.recomputed_bound;
            j["rate"] = std::log2(check.recomputed_bound) / n;
            j["beta"] = 0.0;
            j["certificate_valid"] = check.valid;
            j["closed_form_comparison"] = nullptr;
            unsound = !check.valid;
        }
    } else {
        if (!p) throw std::invalid_argument("skew lp requires --p");
        const advlab::SkewLpProblem prob = advlab::build_skew_lp(n, *p, c);
        const advlab::LpSolution sol = advlab::solve_lp(prob, tol);
        j["status"] = advlab::to_string(sol.status);
        if (sol.status == advlab::LpStatus::optimal) {
            const auto check = advlab::verify_certificate(sol, prob);
            j["bound"] = check.recomputed_bound;
            j["rate"] = std::log2(check.recomputed_bound) / n;
            j["beta"] = sol.beta;
            j["certificate_valid"] = check.valid && sol.beta_positive;
            j["closed_form_comparison"] = advlab::strong_adversary_upper(advlab::to_double(*p));
            degenerate = !sol.beta_positive;
            unsound = sol.beta_positive && !check.valid;
        }
    }

    const std::string text = j.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        auto out = open_output(out_path);
        out << text;
    }
    if (j["status"] != "optimal")
        throw advlab::SolverFailure("lp terminated with status " +
                                    j["status"].get<std::string>());
    if (unsound) throw advlab::SolverFailure("lp bound failed exact certificate verification");
    if (degenerate) std::cerr << "degenerate optimum (beta ~ 0) - bound not certified\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adversarial binary channel workbench"};
    app.set_version_flag("--version", std::string("advlab ") + kVersion);
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a code file");
    std::string gen_kind;
    int gen_n = 0;
    std::size_t gen_m = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--kind", gen_kind, "full|repetition|parity|hamming74|random")->required();
    gen->add_option("--n", gen_n, "block length");
    gen->add_option("--m", gen_m, "code size (random only)");
    gen->add_option("--seed", gen_seed, "RNG seed (random only)");
    gen->add_option("-o,--out", gen_out, "output path (default stdout)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "distance spectrum report for a code file");
    std::string an_path;
    std::string an_p;
    int an_r = 2;
    bool an_json = false;
    analyze->add_option("code", an_path, "code file")->required();
    analyze->add_option("--p", an_p, "limit parameter for the 2pn mass split");
    analyze->add_option("--r", an_r, "power moment order to check")->check(CLI::NonNegativeNumber);
    analyze->add_flag("--json", an_json, "machine-readable output");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo adversary trials");
    std::string sim_path, sim_adv;
    std::string sim_p, sim_c = "0.1", sim_limit_p;
    std::uint64_t sim_trials = 0, sim_seed = 1;
    std::vector<std::string> sim_eps;
    std::string sim_out;
    simulate->add_option("code", sim_path, "code file")->required();
    simulate->add_option("--adversary", sim_adv, "bsc|confuser|strong")->required();
    simulate->add_option("--p", sim_p, "flip probability / limit parameter");
    simulate->add_option("--c", sim_c, "strong-strategy decision constant");
    simulate->add_option("--trials", sim_trials, "number of trials")->required();
    simulate->add_option("--seed", sim_seed, "master seed");
    simulate->add_option("--epsilon", sim_eps, "strong-limit epsilon (repeatable)");
    simulate->add_option("--limit-p", sim_limit_p, "override p used in wt(e)/n < p+eps counts");
    simulate->add_option("-o,--out", sim_out, "output path (default stdout)");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "emit capacity bound curves");
    std::string bd_step = "0.001", bd_out, bd_svg, bd_erasure;
    bounds->add_option("--grid", bd_step, "grid step in (0, 1/2]");
    bounds->add_option("-o,--out", bd_out, "CSV output path")->required();
    bounds->add_option("--svg", bd_svg, "also render an SVG");
    bounds->add_option("--erasure-out", bd_erasure, "also emit the erasure bound CSV");

    // lp
    auto* lp = app.add_subcommand("lp", "Krawtchouk linear programming bounds");
    bool lp_classical = false;
    int lp_n = 0, lp_d = 0;
    std::string lp_p, lp_c = "0.1";
    double lp_tol = 1e-9;
    std::string lp_out;
    lp->add_flag("--classical", lp_classical, "classical Delsarte LP (needs --d)");
    lp->add_option("--n", lp_n, "block length")->required();
    lp->add_option("--d", lp_d, "minimum distance (classical mode)");
    lp->add_option("--p", lp_p, "limit parameter (skew mode)");
    lp->add_option("--c", lp_c, "skew constant in (0,1)");
    lp->add_option("--tol", lp_tol, "solver tolerance");
    lp->add_option("-o,--out", lp_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
        if (*gen) return run_gen(gen_kind, gen_n, gen_m, gen_seed, gen_out);
        if (*analyze) {
            std::optional<Rational> p;
            if (!an_p.empty()) p = advlab::parse_rational(an_p);
            return run_analyze(an_path, p, an_r, an_json);
        }
        if (*simulate) {
            std::optional<Rational> p, limp;
            if (!sim_p.empty()) p = advlab::parse_rational(sim_p);
            if (!sim_limit_p.empty()) limp = advlab::parse_rational(sim_limit_p);
            return run_simulate(sim_path, sim_adv, p, advlab::parse_rational(sim_c), sim_trials,
                                sim_seed, sim_eps, limp, sim_out);
        }
        if (*bounds) return run_bounds(bd_step, bd_out, bd_svg, bd_erasure);
        if (*lp) {
            std::optional<Rational> p;
            if (!lp_p.empty()) p = advlab::parse_rational(lp_p);
            if (lp_classical && lp_d == 0)
                throw std::invalid_argument("--classical requires --d");
            return run_lp(lp_classical, lp_n, lp_d, p, advlab::parse_rational(lp_c), lp_tol,
                          lp_out);
        }
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const advlab::InputDataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const advlab::SolverFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
