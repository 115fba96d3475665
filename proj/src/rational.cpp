#include "advlab/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace advlab {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

BigInt pow2(unsigned e) {
    BigInt one = 1;
    return one << e;
}

namespace {

BigInt parse_integer(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("empty number");
    for (char ch : digits) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw std::invalid_argument("invalid digit in number: '" + std::string(digits) + "'");
        }
    }
    return BigInt(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) throw std::invalid_argument("cannot parse rational from '" + std::string(text) + "'");

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(body.substr(0, slash));
        BigInt den = parse_integer(body.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        value = Rational(num, den);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) {
            throw std::invalid_argument("cannot parse rational from '" + std::string(text) + "'");
        }
        BigInt num = whole.empty() ? BigInt(0) : parse_integer(whole);
        BigInt den = 1;
        for (char ch : frac) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw std::invalid_argument("invalid digit in number: '" + std::string(text) + "'");
            }
            num = num * 10 + (ch - '0');
            den *= 10;
        }
        value = Rational(num, den);
    } else {
        value = Rational(parse_integer(body));
    }
    return negative ? -value : value;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace advlab
