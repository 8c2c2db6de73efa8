#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zeproc {

using BigInt = boost::multiprecision::cpp_int;

inline unsigned popcount_big(BigInt v) {
    if (v < 0) throw std::invalid_argument("popcount_big: negative argument");
    unsigned c = 0;
    while (v != 0) {
        v &= v - 1;
        ++c;
    }
    return c;
}

// Exact dyadic rational mantissa * 2^exponent.
//
// Canonical form: mantissa odd, or mantissa == 0 with exponent == 0.
// Closed under +, -, * and comparison. Division is deliberately absent;
// every quantity in this project is dyadic by construction, so scaling
// by powers of two (shift) is all that is ever needed.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long long v) : m_(v) { normalize(); }
    Dyadic(const BigInt& v) : m_(v) { normalize(); }

    static Dyadic from_mantissa_exp(BigInt m, long long e) {
        Dyadic d;
        d.m_ = std::move(m);
        d.e_ = e;
        d.normalize();
        return d;
    }

    static Dyadic pow2(long long e) { return from_mantissa_exp(1, e); }

    const BigInt& mantissa() const { return m_; }
    long long exponent() const { return e_; }
    bool is_zero() const { return m_ == 0; }
    int sign() const { return m_ == 0 ? 0 : (m_ < 0 ? -1 : 1); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        long long e = std::min(a.e_, b.e_);
        BigInt m = (a.m_ << unsigned(a.e_ - e)) + (b.m_ << unsigned(b.e_ - e));
        return from_mantissa_exp(std::move(m), e);
    }
    friend Dyadic operator-(const Dyadic& a) { return from_mantissa_exp(-a.m_, a.e_); }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        if (a.is_zero() || b.is_zero()) return Dyadic();
        return from_mantissa_exp(a.m_ * b.m_, a.e_ + b.e_);
    }

    // value * 2^k
    Dyadic shifted(long long k) const {
        if (is_zero()) return *this;
        return from_mantissa_exp(m_, e_ + k);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.m_ == b.m_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return (b - a).sign() > 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return (b - a).sign() >= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }

    double to_double() const {
        if (is_zero()) return 0.0;
        BigInt am = m_ < 0 ? BigInt(-m_) : m_;
        long long bits = static_cast<long long>(boost::multiprecision::msb(am)) + 1;
        long long shift = bits > 62 ? bits - 62 : 0;
        double top = (am >> unsigned(shift)).convert_to<double>();
        double v = std::ldexp(top, static_cast<int>(std::max<long long>(
                                  std::min<long long>(e_ + shift, 1 << 20), -(1 << 20))));
        return m_ < 0 ? -v : v;
    }

    // Exact rendering: integers verbatim, otherwise "m/2^k".
    std::string to_fraction_string() const {
        if (is_zero()) return "0";
        if (e_ >= 0) {
            BigInt v = m_ << unsigned(e_);
            return v.str();
        }
        return m_.str() + "/2^" + std::to_string(-e_);
    }

private:
    void normalize() {
        if (m_ == 0) {
            e_ = 0;
            return;
        }
        unsigned tz = boost::multiprecision::lsb(m_ < 0 ? BigInt(-m_) : m_);
        if (tz > 0) {
            m_ >>= tz;
            e_ += tz;
        }
    }

    BigInt m_ = 0;
    long long e_ = 0;
};

} // namespace zeproc
