#include "bisect/rational.hpp"

#include <cctype>

#include "bisect/errors.hpp"

namespace bisect {

namespace {

// Signed base-10 integer; leading zeros stripped so GMP never sees octal.
BigInt parse_integer(const std::string& raw, const std::string& context) {
    std::string s = raw;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    require(!s.empty(), ErrorKind::ParseError, "bad number '" + context + "'");
    for (char c : s)
        require(std::isdigit(static_cast<unsigned char>(c)), ErrorKind::ParseError,
                "bad number '" + context + "'");
    size_t first = s.find_first_not_of('0');
    s = (first == std::string::npos) ? "0" : s.substr(first);
    BigInt value(s);
    return neg ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    require(!text.empty(), ErrorKind::ParseError, "empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_integer(text.substr(0, slash), text);
        BigInt den = parse_integer(text.substr(slash + 1), text);
        require(den != 0, ErrorKind::ParseError, "zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_integer(text, text));
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
        neg = head[0] == '-';
        head = head.substr(1);
    }
    require(!head.empty() || !frac.empty(), ErrorKind::ParseError, "bad decimal '" + text + "'");
    BigInt num = parse_integer((head.empty() ? "0" : head) + (frac.empty() ? "0" : frac), text);
    BigInt den = 1;
    for (size_t i = 0; i < (frac.empty() ? 1 : frac.size()); ++i) den *= 10;
    Rational r(num, den);
    return neg ? -r : r;
}

std::string to_pq_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rational& value) {
    return value.convert_to<double>();
}

}  // namespace bisect
