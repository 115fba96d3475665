#ifndef ADVLAB_LP_HPP
#define ADVLAB_LP_HPP

#include <string>
#include <vector>

#include "advlab/rational.hpp"

namespace advlab {

enum class LpStatus { optimal, infeasible, unbounded, numerical_failure };
std::string to_string(LpStatus status);

// min c^T x  s.t.  A x <= b,  x >= 0. Dense two-phase primal simplex with
// Bland's anti-cycling rule.
struct SimplexResult {
    LpStatus status = LpStatus::numerical_failure;
    std::vector<double> x;
    double objective = 0.0;
};
SimplexResult simplex_solve(const std::vector<std::vector<double>>& A,
                            const std::vector<double>& b, const std::vector<double>& c,
                            double tol = 1e-9);

// Search for small polynomials f(x) = 1 + sum_k f_k K_k(x) proving a size
// bound for codes whose distance mass beyond 2pn is at least a c-fraction:
//   f_k >= 0, beta >= 0,
//   f(j) <= c*beta          for j = 1..t      (t = floor(2pn), exact),
//   f(j) <= -(1-c)*beta     for j = t+1..n,
// minimizing f(0) - c*beta, which upper-bounds the code size when beta > 0.
struct SkewLpProblem {
    int n = 0;
    int threshold = 0;  // t
    Rational p;
    Rational c;
    // Tableau over variables (f_1..f_n, beta); row j-1 is the constraint at
    // distance j. Krawtchouk entries are computed exactly, then narrowed.
    std::vector<std::vector<double>> constraint_matrix;  // n x (n+1)
    std::vector<double> rhs;                             // all -1
    std::vector<double> objective;                       // C(n,k), then -c
    std::vector<std::vector<BigInt>> kraw;               // kraw[j][k] = K_k(j), j,k in 0..n
};
SkewLpProblem build_skew_lp(int n, const Rational& p, const Rational& c);

struct LpSolution {
    LpStatus status = LpStatus::numerical_failure;
    std::vector<double> f_coeffs;  // f_1..f_n (f_0 is fixed at 1)
    double beta = 0.0;             // always 0 for the classical program
    double objective = 0.0;        // f(0) - c*beta, or f(0)
    bool beta_positive = false;    // beta > 10*tol; required for a usable bound
};
LpSolution solve_lp(const SkewLpProblem& problem, double tol = 1e-9);

// Independent recheck of a solver answer with exact integer Krawtchouk values
// and rational arithmetic: f_k >= -tol, beta > tol, and both constraint
// families within tol. An invalid certificate is a result, not an error.
struct CertificateCheck {
    bool valid = false;
    double recomputed_bound = 0.0;  // f(0) - c*beta from exact recomputation
};
CertificateCheck verify_certificate(const LpSolution& solution, const SkewLpProblem& problem,
                                    double exact_tol = 1e-8);

// Classical baseline: f_0 = 1, f_k >= 0, f(j) <= 0 for j = d..n; the optimum
// f(0) upper-bounds A(n, d).
LpSolution classical_delsarte_lp(int n, int d, double tol = 1e-9);
CertificateCheck verify_classical_certificate(const LpSolution& solution, int n, int d,
                                              double exact_tol = 1e-8);

// Certified size bound turned into a rate, reported next to the closed-form
// piecewise upper bound at the same p. Throws SolverFailure when the LP does
// not reach a certified optimum (including degenerate beta).
struct RateBound {
    double bound = 0.0;
    double rate = 0.0;         // log2(bound) / n
    double closed_form = 0.0;  // strong_adversary_upper(p)
    double beta = 0.0;
};
RateBound rate_bound_from_lp(int n, const Rational& p, const Rational& c, double tol = 1e-9);

}  // namespace advlab

#endif
