#include "rado/rational.hpp"

#include "rado/errors.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace rado {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& value)
{
    const Integer num = mp::numerator(value);
    const Integer den = mp::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

Integer parse_integer(std::string_view text, std::size_t offset)
{
    if (text.empty())
        throw ParseError(offset, "expected integer");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        ++i;
    }
    if (i == text.size())
        throw ParseError(offset + i, "expected digits");
    Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(offset + i, "unexpected character '" + std::string(1, text[i]) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view text, std::size_t& offset)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
        ++offset;
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    return text;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::size_t offset = 0;
    text = trim(text, offset);
    if (text.empty())
        throw ParseError(offset, "empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num = parse_integer(text.substr(0, slash), offset);
        Integer den = parse_integer(text.substr(slash + 1), offset + slash + 1);
        if (den == 0)
            throw ParseError(offset + slash + 1, "zero denominator");
        return Rational(num, den);
    }

    std::string_view mantissa = text;
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mantissa = text.substr(0, e);
        Integer exp = parse_integer(text.substr(e + 1), offset + e + 1);
        if (exp > 10000 || exp < -10000)
            throw ParseError(offset + e + 1, "exponent out of range");
        exponent = exp.convert_to<long>();
    }

    std::string digits;
    bool negative = false;
    std::size_t i = 0;
    if (!mantissa.empty() && (mantissa[0] == '+' || mantissa[0] == '-')) {
        negative = mantissa[0] == '-';
        ++i;
    }
    bool seen_point = false;
    bool seen_digit = false;
    for (; i < mantissa.size(); ++i) {
        char c = mantissa[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError(offset + i, "unexpected character '" + std::string(1, c) + "'");
        seen_digit = true;
        digits.push_back(c);
        if (seen_point)
            --exponent;
    }
    if (!seen_digit)
        throw ParseError(offset, "expected digits");

    Integer num = parse_integer(digits, offset);
    if (negative)
        num = -num;
    Integer scale = mp::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0)
        return Rational(num * scale);
    return Rational(num, scale);
}

Decimal to_decimal(const Rational& value)
{
    return Decimal(mp::numerator(value)) / Decimal(mp::denominator(value));
}

std::string to_decimal_string(const Decimal& value, int digits)
{
    std::ostringstream out;
    out << std::setprecision(digits) << value;
    return out.str();
}

Rational decimal_to_rational(const Decimal& value, int digits)
{
    return parse_rational(to_decimal_string(value, digits));
}

Decimal pow_rational(const Rational& base, const Rational& exponent)
{
    if (base == 0)
        return exponent == 0 ? Decimal(1) : Decimal(0);
    return mp::pow(to_decimal(base), to_decimal(exponent));
}

Integer factorial(unsigned n)
{
    Integer result = 1;
    for (unsigned i = 2; i <= n; ++i)
        result *= i;
    return result;
}

Rational pow(const Rational& base, unsigned exponent)
{
    return Rational(mp::pow(mp::numerator(base), exponent), mp::pow(mp::denominator(base), exponent));
}

bool is_integer(const Rational& value)
{
    return mp::denominator(value) == 1;
}

}  // namespace rado
