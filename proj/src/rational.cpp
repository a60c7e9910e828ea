#include "subchi/rational.hpp"

#include <cctype>

#include "subchi/errors.hpp"

namespace subchi {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty())
        throw ParseError("empty integer in rational '" + std::string(whole) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw ParseError("missing digits in rational '" + std::string(whole) + "'");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.' || c == 'e' || c == 'E')
            throw ParseError("decimal notation is not accepted, write a/b: '" + std::string(whole) + "'");
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad character in rational '" + std::string(whole) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace subchi
