#include "young/rational.hpp"

#include <cctype>

namespace young {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num));

    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw InvalidInput("malformed rational \"" + std::string(text) + "\"");
    Integer d = parse_integer(den);
    if (d == 0)
        throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
    return ratio(parse_integer(num), d);
}

std::string format_rational(const Rational& value) {
    Rational v = value;
    v.canonicalize();
    if (v.get_den() == 1)
        return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0)
        throw InvalidInput("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer falling(long n, long k) {
    Integer r = 1;
    for (long i = 0; i < k; ++i)
        r *= n - i;
    return r;
}

}  // namespace young
