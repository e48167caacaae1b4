#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace minorlab {

// Exact rational with int64 parts. All threshold comparisons in the workbench
// go through this type; floating point is confined to the theorem-formula
// calculators.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1; // invariant: den > 0, gcd(|num|, den) == 1

    constexpr Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    // "3.7", "-2", "1/2" -> exact value
    static Rational parse(const std::string& s);

    friend Rational operator+(const Rational& a, const Rational& b) {
        return combined(a, b, +1);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return combined(a, b, -1);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        __int128 n = static_cast<__int128>(a.num) * b.num;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return from_i128(n, d);
    }
    friend Rational operator-(const Rational& a) { Rational r; r.num = -a.num; r.den = a.den; return r; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    static Rational combined(const Rational& a, const Rational& b, int sign) {
        __int128 n = static_cast<__int128>(a.num) * b.den +
                     static_cast<__int128>(sign) * static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return from_i128(n, d);
    }
    static Rational from_i128(__int128 n, __int128 d);
};

} // namespace minorlab
