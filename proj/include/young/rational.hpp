#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace young {

using Rational = mpq_class;
using Integer = mpz_class;

/// Thrown for every precondition violation on public operations.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "p/q", "p" or "-p/q" (decimal digits only). The result is canonical.
Rational parse_rational(std::string_view text);

/// Lowest-terms "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// num/den in lowest terms. Throws InvalidInput on a zero denominator.
Rational ratio(const Integer& num, const Integer& den);

Integer binomial(long n, long k);

/// n(n-1)...(n-k+1); 1 for k = 0 and 0 whenever k > n >= 0.
Integer falling(long n, long k);

}  // namespace young
