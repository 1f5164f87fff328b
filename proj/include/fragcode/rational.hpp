#pragma once
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace fragcode {

// Exact fraction over int64. Stored reduced with den > 0, so == is structural.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    bool operator==(const Rational&) const = default;

    bool is_integer() const { return den == 1; }

    std::int64_t floor_val() const {
        std::int64_t q = num / den;
        if (num % den != 0 && num < 0) --q;
        return q;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator*(std::int64_t s, const Rational& a) {
        return Rational(s * a.num, a.den);
    }
};

} // namespace fragcode
