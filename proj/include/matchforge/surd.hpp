#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "matchforge/polynomial.hpp"

namespace matchforge {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element a + b*sqrt(5) of the quadratic field Q(sqrt 5).
/// Ring arithmetic is closed because (sqrt 5)^2 = 5.
class SurdNumber {
public:
    SurdNumber() : a_(0), b_(0) {}
    SurdNumber(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static SurdNumber from_rational(Rational a) { return SurdNumber(std::move(a), Rational(0)); }
    static SurdNumber from_int(const BigInt& v) { return from_rational(Rational(v)); }
    static SurdNumber sqrt5() { return SurdNumber(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }

    SurdNumber conjugate() const { return SurdNumber(a_, -b_); }

    SurdNumber& operator+=(const SurdNumber& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    SurdNumber& operator-=(const SurdNumber& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    SurdNumber& operator*=(const SurdNumber& o) {
        // (a + b√5)(c + d√5) = ac + 5bd + (ad + bc)√5
        Rational na = a_ * o.a_ + 5 * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }

    friend SurdNumber operator+(SurdNumber x, const SurdNumber& y) { return x += y; }
    friend SurdNumber operator-(SurdNumber x, const SurdNumber& y) { return x -= y; }
    friend SurdNumber operator*(SurdNumber x, const SurdNumber& y) { return x *= y; }
    friend SurdNumber operator*(const Rational& s, SurdNumber x) {
        x.a_ *= s;
        x.b_ *= s;
        return x;
    }

    SurdNumber pow(unsigned e) const {
        SurdNumber r = from_rational(Rational(1));
        SurdNumber base = *this;
        while (e != 0) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    bool is_rational() const { return b_ == 0; }

    // Exact integer value, when the surd component is zero and the rational
    // part is integral; nullopt otherwise.
    std::optional<BigInt> as_integer() const {
        if (b_ != 0) return std::nullopt;
        if (boost::multiprecision::denominator(a_) != 1) return std::nullopt;
        return boost::multiprecision::numerator(a_);
    }

    // as_integer() or throw; closed-form evaluations use this to assert that
    // the conjugate components cancelled.
    BigInt expect_integer(const char* what) const {
        auto v = as_integer();
        if (!v) throw std::logic_error(std::string("non-integer surd value in ") + what);
        return *v;
    }

    bool operator==(const SurdNumber& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const SurdNumber& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        os << a_ << " + (" << b_ << ")*sqrt5";
        return os.str();
    }

private:
    Rational a_, b_;
};

// Floor of sqrt(5) * 10^digits as an integer, by Newton iteration on
// 5 * 10^(2*digits). Underlies decimal reporting of the limit constants.
inline BigInt sqrt5_scaled(int digits) {
    BigInt target = 5 * int_pow(BigInt(10), static_cast<unsigned>(2 * digits));
    BigInt x = int_pow(BigInt(10), static_cast<unsigned>(digits)) * 3;  // start above sqrt
    while (true) {
        BigInt nx = (x + target / x) / 2;
        if (nx >= x) break;
        x = nx;
    }
    while (x * x > target) --x;
    while ((x + 1) * (x + 1) <= target) ++x;
    return x;
}

// Rational approximation of sqrt(5), accurate to 10^-digits from below.
inline Rational sqrt5_approx(int digits) {
    return Rational(sqrt5_scaled(digits), int_pow(BigInt(10), static_cast<unsigned>(digits)));
}

// Fixed-point decimal rendering of an exact rational (round toward zero).
inline std::string decimal_string(const Rational& r, int digits) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    BigInt ip = num / den;
    BigInt rem = num % den;
    std::string out = sign + ip.str();
    if (digits > 0) {
        out += ".";
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out += BigInt(rem / den).str();
            rem %= den;
        }
    }
    return out;
}

}  // namespace matchforge
