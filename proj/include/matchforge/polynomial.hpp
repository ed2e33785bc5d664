#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace matchforge {

using BigInt = boost::multiprecision::cpp_int;

/// Dense single-variable polynomial in x with arbitrary-precision integer
/// coefficients. Invariant: no trailing zero coefficient (zero poly is the
/// empty coefficient vector).
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static IntPolynomial zero() { return IntPolynomial{}; }

    static IntPolynomial constant(BigInt c) {
        IntPolynomial p;
        if (c != 0) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static IntPolynomial one() { return constant(1); }

    // c * x^e
    static IntPolynomial monomial(BigInt c, std::size_t e) {
        IntPolynomial p;
        if (c != 0) {
            p.coeffs_.assign(e + 1, BigInt(0));
            p.coeffs_[e] = std::move(c);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const BigInt& coeff(std::size_t e) const {
        static const BigInt kZero{0};
        return e < coeffs_.size() ? coeffs_[e] : kZero;
    }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    void add_term(const BigInt& c, std::size_t e) {
        if (c == 0) return;
        if (coeffs_.size() <= e) coeffs_.resize(e + 1, BigInt(0));
        coeffs_[e] += c;
        normalize();
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        normalize();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigInt(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        normalize();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator*(const BigInt& s, const IntPolynomial& p) {
        if (s == 0) return zero();
        IntPolynomial out = p;
        for (auto& c : out.coeffs_) c *= s;
        return out;
    }

    IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

    // this * x^k
    IntPolynomial shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        IntPolynomial out;
        out.coeffs_.assign(coeffs_.size() + k, BigInt(0));
        std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin() + static_cast<long>(k));
        return out;
    }

    IntPolynomial pow(unsigned e) const {
        IntPolynomial result = one();
        IntPolynomial base = *this;
        while (e != 0) {
            if (e & 1u) result *= base;
            base *= base;
            e >>= 1u;
        }
        return result;
    }

    BigInt operator()(const BigInt& x) const {
        BigInt acc{0};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // p(1): total of all coefficients.
    BigInt eval_one() const {
        BigInt acc{0};
        for (const auto& c : coeffs_) acc += c;
        return acc;
    }

    IntPolynomial derivative() const {
        if (coeffs_.size() <= 1) return zero();
        std::vector<BigInt> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * i;
        return IntPolynomial(std::move(out));
    }

    // Smallest exponent with nonzero coefficient; -1 for zero.
    int min_exponent() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    // "4x^2 + 2x" style, highest exponent first; used in diagnostics.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int e = degree(); e >= 0; --e) {
            const BigInt& c = coeffs_[static_cast<std::size_t>(e)];
            if (c == 0) continue;
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            if (mag != 1 || e == 0) os << mag.str();
            if (e >= 1) {
                os << "x";
                if (e > 1) os << "^" << e;
            }
        }
        return os.str();
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

// Binomial coefficient with C(a,b) = 0 for b < 0 or b > a (and for a < 0).
inline BigInt binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return BigInt(0);
    if (b > a - b) b = a - b;
    BigInt r{1};
    for (long i = 0; i < b; ++i) {
        r *= a - i;
        r /= i + 1;
    }
    return r;
}

inline BigInt int_pow(BigInt base, unsigned e) {
    BigInt r{1};
    while (e != 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

}  // namespace matchforge
