#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcsc {

// Exact rational arithmetic on 128-bit components. Enough headroom for
// harmonic sums up to H(~80) and the bound products built from them;
// anything larger throws std::overflow_error instead of silently wrapping.
//
// Comparison walks the continued-fraction expansion of both operands, so it
// never multiplies components and cannot overflow.
class Rational {
public:
    using Int = __int128;

    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(long long num, long long den) : num_(num), den_(den) { normalize(); }

    static Rational of(Int num, Int den) {
        Rational r;
        r.num_ = num;
        r.den_ = den;
        r.normalize();
        return r;
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    Rational operator+(const Rational& o) const {
        Int g = gcd(den_, o.den_);
        Int lhs_scale = o.den_ / g;
        Int rhs_scale = den_ / g;
        Int num = checked_add(checked_mul(num_, lhs_scale), checked_mul(o.num_, rhs_scale));
        Int den = checked_mul(den_, lhs_scale);
        return of(num, den);
    }

    Rational operator-(const Rational& o) const { return *this + Rational::of(-o.num_, o.den_); }

    Rational operator*(const Rational& o) const {
        Int g1 = gcd(abs_i(num_), o.den_);
        Int g2 = gcd(abs_i(o.num_), den_);
        Int num = checked_mul(num_ / g1, o.num_ / g2);
        Int den = checked_mul(den_ / g2, o.den_ / g1);
        return of(num, den);
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
        return *this * Rational::of(o.den_, o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::strong_ordering operator<=>(const Rational& o) const {
        int sa = num_ < 0 ? -1 : num_ > 0 ? 1 : 0;
        int sb = o.num_ < 0 ? -1 : o.num_ > 0 ? 1 : 0;
        if (sa != sb) return sa <=> sb;
        if (sa == 0) return std::strong_ordering::equal;
        int c = cmp_positive(abs_i(num_), den_, abs_i(o.num_), o.den_);
        if (sa < 0) c = -c;
        return c <=> 0;
    }

    // "p" when integral, "p/q" otherwise.
    std::string str() const {
        std::string s = int_to_string(num_);
        if (den_ != 1) s += "/" + int_to_string(den_);
        return s;
    }

    static std::string int_to_string(Int v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        std::string digits;
        // careful with the most negative value: negate digit by digit
        while (v != 0) {
            int d = static_cast<int>(v % 10);
            if (d < 0) d = -d;
            digits.push_back(static_cast<char>('0' + d));
            v /= 10;
        }
        if (neg) digits.push_back('-');
        return {digits.rbegin(), digits.rend()};
    }

private:
    static Int abs_i(Int v) { return v < 0 ? -v : v; }

    static Int gcd(Int a, Int b) {
        a = abs_i(a);
        b = abs_i(b);
        while (b != 0) {
            Int t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Int checked_add(Int a, Int b) {
        Int r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: addition overflow");
        return r;
    }

    static Int checked_mul(Int a, Int b) {
        Int r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: multiplication overflow");
        return r;
    }

    // a/b vs c/d with all arguments positive; continued-fraction descent.
    static int cmp_positive(Int a, Int b, Int c, Int d) {
        for (;;) {
            Int q1 = a / b, q2 = c / d;
            if (q1 != q2) return q1 < q2 ? -1 : 1;
            a %= b;
            c %= d;
            if (a == 0 || c == 0) {
                if (a == c) return 0;
                return a == 0 ? -1 : 1;
            }
            // both fractional parts in (0,1): a/b vs c/d == d/c vs b/a
            Int na = d, nb = c, nc = b, nd = a;
            a = na;
            b = nb;
            c = nc;
            d = nd;
        }
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Int num_;
    Int den_;
};

}  // namespace mcsc
