#include "advlab/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "advlab/bounds.hpp"
#include "advlab/errors.hpp"
#include "advlab/spectrum.hpp"

namespace advlab {

std::string to_string(LpStatus status) {
    switch (status) {
        case LpStatus::optimal: return "optimal";
        case LpStatus::infeasible: return "infeasible";
        case LpStatus::unbounded: return "unbounded";
        case LpStatus::numerical_failure: return "numerical_failure";
    }
    return "numerical_failure";
}

namespace {

constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

// Dense tableau state for one solve. Column layout: structural variables,
// then one slack per row, then (phase 1 only) artificials for rows whose
// right-hand side started out negative.
struct Tableau {
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<std::size_t> basis;
    std::size_t ncol = 0;

    void pivot(std::size_t r, std::size_t col, std::vector<double>* price) {
        const double inv = 1.0 / rows[r][col];
        for (std::size_t j = 0; j < ncol; ++j) rows[r][j] *= inv;
        rhs[r] *= inv;
        rows[r][col] = 1.0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            const double f = rows[i][col];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < ncol; ++j) rows[i][j] -= f * rows[r][j];
            rows[i][col] = 0.0;
            rhs[i] -= f * rhs[r];
            if (rhs[i] < 0.0 && rhs[i] > -1e-11) rhs[i] = 0.0;
        }
        if (price) {
            const double f = (*price)[col];
            if (f != 0.0) {
                for (std::size_t j = 0; j < ncol; ++j) (*price)[j] -= f * rows[r][j];
                (*price)[col] = 0.0;
            }
        }
        basis[r] = col;
    }

    // Bland's rule: enter the lowest-index improving column, leave via the
    // minimum ratio with lowest basic index on ties.
    LpStatus iterate(const std::vector<double>& cost, std::size_t usable_cols, double tol) {
        std::vector<double> price(ncol, 0.0);
        for (std::size_t j = 0; j < ncol; ++j) {
            price[j] = j < cost.size() ? cost[j] : 0.0;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const double cb = basis[i] < cost.size() ? cost[basis[i]] : 0.0;
                if (cb != 0.0) price[j] -= cb * rows[i][j];
            }
        }
        const std::size_t max_iter = 20000 + 50 * (rows.size() + ncol);
        for (std::size_t iter = 0; iter < max_iter; ++iter) {
            std::size_t enter = kNoIndex;
            for (std::size_t j = 0; j < usable_cols; ++j) {
                if (price[j] < -tol) {
                    enter = j;
                    break;
                }
            }
            if (enter == kNoIndex) return LpStatus::optimal;
            std::size_t leave = kNoIndex;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= tol) continue;
                const double ratio = rhs[i] / rows[i][enter];
                if (ratio < best - 1e-12 ||
                    (ratio < best + 1e-12 && (leave == kNoIndex || basis[i] < basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == kNoIndex) return LpStatus::unbounded;
            pivot(leave, enter, &price);
        }
        return LpStatus::numerical_failure;
    }
};

}  // namespace

SimplexResult simplex_solve(const std::vector<std::vector<double>>& A,
                            const std::vector<double>& b, const std::vector<double>& c,
                            double tol) {
    const std::size_t m = A.size();
    const std::size_t nv = c.size();
    SimplexResult out;

    std::size_t nart = 0;
    for (const double bi : b)
        if (bi < 0.0) ++nart;

    Tableau t;
    t.ncol = nv + m + nart;
    t.rows.assign(m, std::vector<double>(t.ncol, 0.0));
    t.rhs.assign(m, 0.0);
    t.basis.assign(m, 0);
    std::size_t next_art = nv + m;
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < nv; ++j) t.rows[i][j] = sign * A[i][j];
        t.rows[i][nv + i] = sign;
        t.rhs[i] = sign * b[i];
        if (b[i] < 0.0) {
            t.rows[i][next_art] = 1.0;
            t.basis[i] = next_art++;
        } else {
            t.basis[i] = nv + i;
        }
    }

    if (nart > 0) {
        std::vector<double> cost1(t.ncol, 0.0);
        for (std::size_t j = nv + m; j < t.ncol; ++j) cost1[j] = 1.0;
        const LpStatus st = t.iterate(cost1, t.ncol, tol);
        if (st != LpStatus::optimal) {
            // phase 1 is bounded below by zero, so "unbounded" is numerics
            out.status = LpStatus::numerical_failure;
            return out;
        }
        double infeas = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            if (t.basis[i] >= nv + m) infeas += t.rhs[i];
        if (infeas > 100.0 * tol) {
            out.status = LpStatus::infeasible;
            return out;
        }
        // Pivot leftover zero-valued artificials out; a row with no real
        // coefficients left is redundant and gets dropped.
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < nv + m) {
                keep.push_back(i);
                continue;
            }
            std::size_t col = kNoIndex;
            for (std::size_t j = 0; j < nv + m; ++j) {
                if (std::abs(t.rows[i][j]) > 10.0 * tol) {
                    col = j;
                    break;
                }
            }
            if (col != kNoIndex) {
                t.pivot(i, col, nullptr);
                keep.push_back(i);
            }
        }
        if (keep.size() != m) {
            std::vector<std::vector<double>> rows2;
            std::vector<double> rhs2;
            std::vector<std::size_t> basis2;
            for (const std::size_t i : keep) {
                rows2.push_back(std::move(t.rows[i]));
                rhs2.push_back(t.rhs[i]);
                basis2.push_back(t.basis[i]);
            }
            t.rows = std::move(rows2);
            t.rhs = std::move(rhs2);
            t.basis = std::move(basis2);
        }
    }

    std::vector<double> cost2(nv + m, 0.0);
    for (std::size_t j = 0; j < nv; ++j) cost2[j] = c[j];
    const LpStatus st = t.iterate(cost2, nv + m, tol);
    out.status = st;
    if (st != LpStatus::optimal) return out;

    out.x.assign(nv, 0.0);
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < nv) out.x[t.basis[i]] = t.rhs[i];
    out.objective = 0.0;
    for (std::size_t j = 0; j < nv; ++j) out.objective += c[j] * out.x[j];
    return out;
}

SkewLpProblem build_skew_lp(int n, const Rational& p, const Rational& c) {
    if (n < 2) throw std::invalid_argument("build_skew_lp: n must be at least 2");
    if (!(c > 0 && c < 1))
        throw std::invalid_argument("build_skew_lp: c must lie in (0, 1)");
    if (!(p > Rational(1, 4) && p <= Rational(1, 2)))
        throw std::invalid_argument("build_skew_lp: p must exceed 1/4 (and be at most 1/2)");

    SkewLpProblem prob;
    prob.n = n;
    prob.p = p;
    prob.c = c;
    const Rational q = Rational(2) * p * Rational(n);
    prob.threshold = static_cast<int>(BigInt(numerator(q) / denominator(q)));
    if (prob.threshold < 1 || prob.threshold >= n)
        throw std::invalid_argument("build_skew_lp: degenerate split (2pn cuts no constraints)");

    const auto table = krawtchouk_table(n);
    prob.kraw.assign(n + 1, std::vector<BigInt>(n + 1));
    for (int j = 0; j <= n; ++j)
        for (int k = 0; k <= n; ++k) prob.kraw[j][k] = table[k][j];

    const double cd = to_double(c);
    prob.constraint_matrix.assign(n, std::vector<double>(n + 1, 0.0));
    prob.rhs.assign(n, -1.0);
    prob.objective.assign(n + 1, 0.0);
    for (int j = 1; j <= n; ++j) {
        auto& row = prob.constraint_matrix[j - 1];
        for (int k = 1; k <= n; ++k) row[k - 1] = static_cast<double>(prob.kraw[j][k]);
        row[n] = j <= prob.threshold ? -cd : (1.0 - cd);
    }
    for (int k = 1; k <= n; ++k)
        prob.objective[k - 1] = static_cast<double>(binomial(n, k));
    prob.objective[n] = -cd;
    return prob;
}

namespace {

// Divide each column by its largest constraint magnitude; Krawtchouk columns
// otherwise span dozens of orders of magnitude once n grows.
LpSolution solve_scaled(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                        const std::vector<double>& c, double tol) {
    const std::size_t m = A.size();
    const std::size_t nv = c.size();
    std::vector<double> scale(nv, 1.0);
    for (std::size_t k = 0; k < nv; ++k) {
        double mx = 0.0;
        for (std::size_t i = 0; i < m; ++i) mx = std::max(mx, std::abs(A[i][k]));
        if (mx > 0.0) scale[k] = mx;
    }
    std::vector<std::vector<double>> As(m, std::vector<double>(nv));
    std::vector<double> cs(nv);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < nv; ++k) As[i][k] = A[i][k] / scale[k];
    for (std::size_t k = 0; k < nv; ++k) cs[k] = c[k] / scale[k];

    const SimplexResult res = simplex_solve(As, b, cs, tol);
    LpSolution sol;
    sol.status = res.status;
    if (res.status != LpStatus::optimal) return sol;
    sol.f_coeffs.assign(nv, 0.0);
    for (std::size_t k = 0; k < nv; ++k) sol.f_coeffs[k] = res.x[k] / scale[k];
    sol.objective = 1.0;  // f_0 K_0(0)
    for (std::size_t k = 0; k < nv; ++k) sol.objective += c[k] * sol.f_coeffs[k];
    return sol;
}

}  // namespace

LpSolution solve_lp(const SkewLpProblem& problem, double tol) {
    LpSolution sol = solve_scaled(problem.constraint_matrix, problem.rhs, problem.objective, tol);
    if (sol.status != LpStatus::optimal) return sol;
    sol.beta = sol.f_coeffs.back();
    sol.f_coeffs.pop_back();
    sol.beta_positive = sol.beta > 10.0 * tol;
    return sol;
}

CertificateCheck verify_certificate(const LpSolution& solution, const SkewLpProblem& problem,
                                    double exact_tol) {
    CertificateCheck out;
    const int n = problem.n;
    if (solution.status != LpStatus::optimal ||
        solution.f_coeffs.size() != static_cast<std::size_t>(n))
        return out;

    const Rational tolr(exact_tol);
    std::vector<Rational> f(n + 1);
    f[0] = 1;
    for (int k = 1; k <= n; ++k) f[k] = Rational(solution.f_coeffs[k - 1]);
    const Rational beta(solution.beta);

    Rational f0 = 0;
    for (int k = 0; k <= n; ++k) f0 += f[k] * Rational(problem.kraw[0][k]);
    out.recomputed_bound = to_double(f0 - problem.c * beta);

    bool ok = beta > tolr;
    for (int k = 1; k <= n; ++k)
        if (f[k] < -tolr) ok = false;
    for (int j = 1; j <= n && ok; ++j) {
        Rational fj = 0;
        for (int k = 0; k <= n; ++k) fj += f[k] * Rational(problem.kraw[j][k]);
        const Rational limit = j <= problem.threshold ? problem.c * beta
                                                      : -(Rational(1) - problem.c) * beta;
        if (fj > limit + tolr) ok = false;
    }
    out.valid = ok;
    return out;
}

LpSolution classical_delsarte_lp(int n, int d, double tol) {
    if (n < 1 || d < 1 || d > n)
        throw std::invalid_argument("classical_delsarte_lp: need 1 <= d <= n");
    const auto table = krawtchouk_table(n);
    const std::size_t m = static_cast<std::size_t>(n - d + 1);
    std::vector<std::vector<double>> A(m, std::vector<double>(n, 0.0));
    std::vector<double> b(m, -1.0);
    std::vector<double> c(n, 0.0);
    for (int j = d; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            A[j - d][k - 1] = static_cast<double>(table[k][j]);
    for (int k = 1; k <= n; ++k) c[k - 1] = static_cast<double>(binomial(n, k));
    return solve_scaled(A, b, c, tol);
}

CertificateCheck verify_classical_certificate(const LpSolution& solution, int n, int d,
                                              double exact_tol) {
    CertificateCheck out;
    if (solution.status != LpStatus::optimal ||
        solution.f_coeffs.size() != static_cast<std::size_t>(n))
        return out;
    const Rational tolr(exact_tol);
    const auto table = krawtchouk_table(n);
    std::vector<Rational> f(n + 1);
    f[0] = 1;
    for (int k = 1; k <= n; ++k) f[k] = Rational(solution.f_coeffs[k - 1]);

    Rational f0 = 0;
    for (int k = 0; k <= n; ++k) f0 += f[k] * Rational(table[k][0]);
    out.recomputed_bound = to_double(f0);

    bool ok = true;
    for (int k = 1; k <= n; ++k)
        if (f[k] < -tolr) ok = false;
    for (int j = d; j <= n && ok; ++j) {
        Rational fj = 0;
        for (int k = 0; k <= n; ++k) fj += f[k] * Rational(table[k][j]);
        if (fj > tolr) ok = false;
    }
    out.valid = ok;
    return out;
}

RateBound rate_bound_from_lp(int n, const Rational& p, const Rational& c, double tol) {
    const SkewLpProblem prob = build_skew_lp(n, p, c);
    const LpSolution sol = solve_lp(prob, tol);
    if (sol.status != LpStatus::optimal)
        throw SolverFailure("skew LP did not reach an optimum: " + to_string(sol.status));
    if (!sol.beta_positive)
        throw SolverFailure("skew LP optimum is degenerate (beta ~ 0) - bound not certified");
    const CertificateCheck check = verify_certificate(sol, prob);
    if (!check.valid) throw SolverFailure("skew LP certificate failed exact verification");

    RateBound rb;
    rb.bound = check.recomputed_bound;
    rb.rate = std::log2(rb.bound) / static_cast<double>(n);
    rb.closed_form = strong_adversary_upper(to_double(p));
    rb.beta = sol.beta;
    return rb;
}

}  // namespace advlab
