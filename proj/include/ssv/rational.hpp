#ifndef SSV_RATIONAL_HPP
#define SSV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "ssv/errors.hpp"

namespace ssv {

// Exact rational scalar, always in lowest terms with positive denominator.
// Every coefficient in the library is one of these; nothing is ever rounded.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with optional leading minus signs.
    static Rational parse(const std::string& s) {
        if (s.empty()) throw ParseError("Rational: empty string");
        try {
            mpq_class v(s, 10);
            if (v.get_den() == 0) throw ParseError("Rational: zero denominator in '" + s + "'");
            v.canonicalize();
            return Rational(std::move(v));
        } catch (const std::invalid_argument&) {
            throw ParseError("Rational: cannot parse '" + s + "'");
        }
    }

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Exact integer value; the argument must be integral and fit in a long.
    long to_long() const {
        if (!is_integer()) throw Error("Rational: not an integer: " + str());
        if (!v_.get_num().fits_slong_p()) throw Error("Rational: integer out of range: " + str());
        return v_.get_num().get_si();
    }

    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

    Rational inverse() const {
        if (is_zero()) throw Error("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    // Integer power; negative exponents invert.
    Rational pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Rational base = *this, acc = 1;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

private:
    mpq_class v_;
};

} // namespace ssv

#endif
