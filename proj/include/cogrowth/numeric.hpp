#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cogrowth {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kLn2 = 0.6931471805599453094;

// ---------------------------------------------------------------------------
// Decimal string <-> exact rational.
//
// Accepted forms: "123", "-1.25", "0.5e-3", ".75", and the fallback "p/q".
// Values written by to_decimal_string() always re-parse to the same rational.
// ---------------------------------------------------------------------------

inline Rational parse_decimal(std::string_view s) {
    auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a decimal number: '" + std::string(s) + "'");
    };
    if (s.empty()) fail();

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num(std::string(s.substr(0, slash)));
        BigInt den(std::string(s.substr(slash + 1)));
        if (den == 0) fail();
        return Rational(num, den);
    }

    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
        negative = (s[i] == '-');
        ++i;
    }
    BigInt digits = 0;
    long frac_len = 0;
    bool any_digit = false, in_frac = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (in_frac) fail();
            in_frac = true;
        } else if (c >= '0' && c <= '9') {
            digits = digits * 10 + (c - '0');
            if (in_frac) ++frac_len;
            any_digit = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            fail();
        }
    }
    if (!any_digit) fail();

    long exp10 = 0;
    if (i < s.size()) {  // exponent part
        ++i;
        if (i >= s.size()) fail();
        bool exp_neg = false;
        if (s[i] == '+' || s[i] == '-') {
            exp_neg = (s[i] == '-');
            ++i;
        }
        if (i >= s.size()) fail();
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') fail();
            exp10 = exp10 * 10 + (s[i] - '0');
            if (exp10 > 100000) fail();
        }
        if (exp_neg) exp10 = -exp10;
    }

    long shift = exp10 - frac_len;
    Rational r(digits);
    if (shift > 0) {
        BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift));
        r *= Rational(p);
    } else if (shift < 0) {
        BigInt p = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-shift));
        r /= Rational(p);
    }
    return negative ? Rational(-r) : r;
}

// Exact decimal rendering when the denominator is of the form 2^a 5^b,
// "p/q" otherwise.
inline std::string to_decimal_string(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);

    BigInt d = den;
    long twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return num.str() + "/" + den.str();

    long scale = std::max(twos, fives);
    BigInt scaled = num * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale)) / den;

    bool neg = scaled < 0;
    std::string digits = BigInt(boost::multiprecision::abs(scaled)).str();
    if (static_cast<long>(digits.size()) <= scale)
        digits.insert(0, static_cast<std::size_t>(scale) - digits.size() + 1, '0');

    std::string out;
    if (neg) out += '-';
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(scale));
    if (scale > 0) {
        std::string frac = digits.substr(digits.size() - static_cast<std::size_t>(scale));
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += '.' + frac;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Logarithms of huge exact values.
// ---------------------------------------------------------------------------

inline double log_value(const BigInt& x) {
    if (x < 0) throw std::domain_error("log of negative integer");
    if (x == 0) return -std::numeric_limits<double>::infinity();
    std::size_t bits = boost::multiprecision::msb(x);
    if (bits <= 900) return std::log(x.convert_to<double>());
    BigInt top = x >> (bits - 52);
    return std::log(top.convert_to<double>()) + static_cast<double>(bits - 52) * kLn2;
}

inline double log_value(const Rational& x) {
    if (x == 0) return -std::numeric_limits<double>::infinity();
    return log_value(BigInt(boost::multiprecision::numerator(x))) -
           log_value(BigInt(boost::multiprecision::denominator(x)));
}

// ---------------------------------------------------------------------------
// XReal: non-negative floating value m * 2^e with unbounded exponent.
//
// The radial engines run thousands of steps past double range; this keeps
// full double relative precision without log-sum-exp error accumulation.
// Only the operations the engines need are provided (no subtraction: all
// recurrences here are sums of non-negative terms).
// ---------------------------------------------------------------------------

struct XReal {
    double m = 0.0;          // 0, or in [0.5, 1)
    std::int64_t e = 0;      // value = m * 2^e

    XReal() = default;

    static XReal from_double(double v) {
        if (v < 0 || !std::isfinite(v)) throw std::domain_error("XReal: bad value");
        if (v == 0) return {};
        XReal r;
        int ex;
        r.m = std::frexp(v, &ex);
        r.e = ex;
        return r;
    }

    static XReal from_bigint(const BigInt& x) {
        if (x < 0) throw std::domain_error("XReal: negative");
        if (x == 0) return {};
        std::size_t bits = boost::multiprecision::msb(x);
        if (bits <= 900) return from_double(x.convert_to<double>());
        BigInt top = x >> (bits - 52);
        XReal r = from_double(top.convert_to<double>());
        r.e += static_cast<std::int64_t>(bits - 52);
        return r;
    }

    static XReal from_rational(const Rational& q) {
        XReal num = from_bigint(BigInt(boost::multiprecision::numerator(q)));
        XReal den = from_bigint(BigInt(boost::multiprecision::denominator(q)));
        return num / den;
    }

    // exp(L) for a natural-log magnitude (possibly far outside double range)
    static XReal from_log(double L) {
        if (L == -std::numeric_limits<double>::infinity()) return {};
        double e2 = std::floor(L / kLn2);
        XReal r = from_double(std::exp(L - e2 * kLn2));
        r.e += static_cast<std::int64_t>(e2);
        return r;
    }

    bool zero() const { return m == 0.0; }

    friend XReal operator+(XReal a, XReal b) {
        if (a.zero()) return b;
        if (b.zero()) return a;
        if (a.e < b.e) std::swap(a, b);
        std::int64_t d = a.e - b.e;
        if (d > 64) return a;
        return with_exponent(a.m + std::ldexp(b.m, static_cast<int>(-d)), a.e);
    }

    friend XReal operator*(XReal a, XReal b) {
        if (a.zero() || b.zero()) return {};
        return with_exponent(a.m * b.m, a.e + b.e);
    }

    friend XReal operator/(XReal a, XReal b) {
        if (b.zero()) throw std::domain_error("XReal: divide by zero");
        if (a.zero()) return {};
        return with_exponent(a.m / b.m, a.e - b.e);
    }

    XReal& operator+=(const XReal& o) { return *this = *this + o; }
    XReal& operator*=(const XReal& o) { return *this = *this * o; }

    double log() const {
        if (zero()) return -std::numeric_limits<double>::infinity();
        return std::log(m) + static_cast<double>(e) * kLn2;
    }

    double to_double() const {
        if (zero()) return 0.0;
        if (e > 1024) return std::numeric_limits<double>::infinity();
        if (e < -1070) return 0.0;
        return std::ldexp(m, static_cast<int>(e));
    }

    friend bool operator<(const XReal& a, const XReal& b) {
        if (a.zero()) return !b.zero();
        if (b.zero()) return false;
        if (a.e != b.e) return a.e < b.e;
        return a.m < b.m;
    }

private:
    static XReal with_exponent(double mant, std::int64_t ebase) {
        XReal r;
        int ex;
        r.m = std::frexp(mant, &ex);
        r.e = ebase + ex;
        return r;
    }
};

// Neumaier-compensated accumulator for the identity evaluations.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace cogrowth
