#include "filling/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace filling {

std::string to_string(const Rational& value)
{
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto den_text = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num_text) || !is_integer_literal(den_text))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

    auto strip_plus = [](std::string_view s) { return std::string(s.starts_with('+') ? s.substr(1) : s); };
    mpz_class num(strip_plus(num_text), 10);
    mpz_class den(strip_plus(den_text), 10);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational value(num, den);
    value.canonicalize();
    return value;
}

} // namespace filling
