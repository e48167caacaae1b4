#include "minorlab/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace minorlab {

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
    constexpr __int128 lo = static_cast<__int128>(INT64_MIN);
    constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
    if (n < lo || n > hi || d > hi)
        throw std::overflow_error("Rational: value out of 64-bit range");
    Rational r;
    r.num = static_cast<std::int64_t>(n);
    r.den = static_cast<std::int64_t>(n == 0 ? 1 : d);
    return r;
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(s));
    std::int64_t whole = dot == 0 ? 0 : std::stoll(s.substr(0, dot));
    std::string frac = s.substr(dot + 1);
    if (frac.empty()) return Rational(whole);
    for (char c : frac)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("Rational::parse: bad decimal '" + s + "'");
    if (frac.size() > 18) frac = frac.substr(0, 18);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t num = std::stoll(frac);
    bool neg = !s.empty() && s[0] == '-';
    Rational base(whole);
    Rational tail(neg ? -num : num, den);
    return base + tail;
}

} // namespace minorlab
