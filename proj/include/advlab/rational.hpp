#ifndef ADVLAB_RATIONAL_HPP
#define ADVLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace advlab {

// Exact arithmetic used by everything that states equality invariants.
// Floating point only appears in the bounds curves and the LP solver.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient, 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

// 2^e as a BigInt, e >= 0.
BigInt pow2(unsigned e);

// Parses "0.3", ".5", "7", "3/10" into an exact rational.
// Decimal notation becomes the exact decimal fraction (0.3 -> 3/10),
// never a rounded binary double. Throws std::invalid_argument on junk.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

// Canonical "p/q" (or plain integer) rendering.
std::string to_string(const Rational& r);

}  // namespace advlab

#endif
