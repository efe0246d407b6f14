#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace edc {

// Exact rational on int64, always normalized with positive denominator.
// Used for the band ratio c = p/r and for bound formulas, so that floors
// like floor(c*d) are computed exactly rather than through doubles.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0)
            throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    // Parses "p" or "p/r" with integer p, r.
    static Rational parse(const std::string& text) {
        std::size_t slash = text.find('/');
        try {
            if (slash == std::string::npos)
                return Rational(parse_int(text));
            return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("expected an integer or a fraction p/r, got: " + text);
        }
    }

    std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    // floor(num/den) with exact integer arithmetic (rounds toward -inf).
    std::int64_t floor() const {
        std::int64_t q = num / den;
        if (num % den != 0 && num < 0)
            --q;
        return q;
    }

    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.num * b.num, a.den * b.den); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num == 0)
            throw std::invalid_argument("rational division by zero");
        return Rational(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

private:
    static std::int64_t parse_int(const std::string& s) {
        if (s.empty())
            throw std::invalid_argument("empty integer");
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("trailing characters");
        return v;
    }
};

} // namespace edc
