#pragma once

#include <string>
#include <vector>

#include "matchforge/antiforcing.hpp"
#include "matchforge/forcing.hpp"
#include "matchforge/lattice.hpp"
#include "matchforge/matching.hpp"
#include "matchforge/polynomial.hpp"
#include "matchforge/surd.hpp"

namespace matchforge {

// ---- perfect matching count, closed form --------------------------------

/// Phi(G_n) = (5-3√5)/10 (3-√5)^n + (5+3√5)/10 (3+√5)^n, evaluated exactly
/// in Q(√5). The surd components must cancel; a nonzero remainder is an
/// internal defect, not a user error.
inline BigInt phi_closed(int n) {
    if (n < 0) throw std::invalid_argument("phi_closed: n must be nonnegative");
    SurdNumber lo(Rational(1, 2), Rational(-3, 10));   // (5 - 3√5)/10
    SurdNumber hi(Rational(1, 2), Rational(3, 10));    // (5 + 3√5)/10
    SurdNumber root_lo(Rational(3), Rational(-1));     // 3 - √5
    SurdNumber root_hi(Rational(3), Rational(1));      // 3 + √5
    SurdNumber value = lo * root_lo.pow(static_cast<unsigned>(n)) +
                       hi * root_hi.pow(static_cast<unsigned>(n));
    BigInt result = value.expect_integer("phi_closed");
    if (result < 0) throw std::logic_error("phi_closed: negative count");
    return result;
}

// ---- forcing polynomials -------------------------------------------------

/// F(G_n,x) by the order-3 recurrence
///   F(G_n) = (4x^2+3x) F(G_{n-1}) - (8x^3+2x^2) F(G_{n-2}) + 4x^3 F(G_{n-3})
/// with F(G_0) = 1, F(G_1) = 4x^2+2x, F(G_2) = 16x^4+12x^3+4x^2.
inline IntPolynomial forcing_poly_g_rec(int n) {
    if (n < 0) throw std::invalid_argument("forcing_poly_g_rec: n must be nonnegative");
    const IntPolynomial f0 = IntPolynomial::one();
    const IntPolynomial f1({0, 2, 4});
    const IntPolynomial f2({0, 0, 4, 12, 16});
    if (n == 0) return f0;
    if (n == 1) return f1;
    if (n == 2) return f2;
    const IntPolynomial a({0, 3, 4});            // 4x^2 + 3x
    const IntPolynomial b({0, 0, 2, 8});         // 8x^3 + 2x^2
    const IntPolynomial c({0, 0, 0, 4});         // 4x^3
    IntPolynomial pm3 = f0, pm2 = f1, pm1 = f2;
    for (int i = 3; i <= n; ++i) {
        IntPolynomial cur = a * pm1 - b * pm2 + c * pm3;
        pm3 = std::move(pm2);
        pm2 = std::move(pm1);
        pm1 = std::move(cur);
    }
    return pm1;
}

namespace detail {

// F(H_1,x), bootstrapped from enumeration rather than assumed: the base case
// is not printed in the paper.
inline const IntPolynomial& forcing_poly_h1() {
    static const IntPolynomial value = forcing_polynomial_enum(build_h(1));
    return value;
}

}  // namespace detail

/// F(H_n,x) = (4x^2+x) F(H_{n-1},x) + x F(G_{n-2},x) for n >= 2.
inline IntPolynomial forcing_poly_h_rec(int n) {
    if (n < 0) throw std::invalid_argument("forcing_poly_h_rec: n must be nonnegative");
    if (n == 0) return IntPolynomial::one();
    IntPolynomial h = detail::forcing_poly_h1();
    const IntPolynomial a({0, 1, 4});  // 4x^2 + x
    for (int i = 2; i <= n; ++i) h = a * h + forcing_poly_g_rec(i - 2).shifted(1);
    return h;
}

/// F(G_n,x) by the explicit sum: 2^{2n} x^{2n} plus, for m = 0..n-1, the
/// difference of two triple sums in i, j, k (binomials vanish outside
/// 0 <= b <= a, which subsumes the printed summation bounds).
inline IntPolynomial forcing_poly_g_explicit(int n) {
    if (n < 0) throw std::invalid_argument("forcing_poly_g_explicit: n must be nonnegative");
    if (n == 0) return IntPolynomial::one();
    auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    auto parity_sign = [](int e) { return (((e % 2) + 2) % 2) ? BigInt(-1) : BigInt(1); };

    IntPolynomial p = IntPolynomial::monomial(int_pow(BigInt(2), static_cast<unsigned>(2 * n)),
                                              static_cast<std::size_t>(2 * n));
    for (int m = 0; m <= n - 1; ++m) {
        BigInt coeff{0};
        // first triple sum
        for (int i = std::max(ceil_div(n, 3), m); i <= n; ++i) {
            for (int j = std::max({ceil_div(n - i, 2), m + n - 2 * i, 0}); j <= n - i; ++j) {
                for (int k = std::max(0, m - (i + 2 * j - n)); k <= std::min(m, i - j); ++k) {
                    BigInt term = parity_sign(i + 2 * j - n) *
                                  int_pow(BigInt(2), static_cast<unsigned>(n + 2 * m - i)) *
                                  int_pow(BigInt(3), static_cast<unsigned>(i - j - k)) *
                                  binomial(i, j) * binomial(j, n - i - j) * binomial(i - j, k) *
                                  binomial(i + 2 * j - n, m - k);
                    coeff += term;
                }
            }
        }
        // second triple sum (subtracted)
        for (int i = std::max(ceil_div(n - 1, 3), m); i <= n - 1; ++i) {
            for (int j = std::max({ceil_div(n - i - 1, 2), m + n - 2 * i - 1, 0}); j <= n - i - 1;
                 ++j) {
                for (int k = std::max(0, m - (i + 2 * j - n + 1)); k <= std::min(m, i - j); ++k) {
                    BigInt term = parity_sign(i + 2 * j - n + 1) *
                                  int_pow(BigInt(2), static_cast<unsigned>(n + 2 * m - i - 1)) *
                                  int_pow(BigInt(3), static_cast<unsigned>(i - j - k)) *
                                  binomial(i, j) * binomial(j, n - i - j - 1) *
                                  binomial(i - j, k) * binomial(i + 2 * j - n + 1, m - k);
                    coeff -= term;
                }
            }
        }
        p.add_term(coeff, static_cast<std::size_t>(n + m));
    }
    return p;
}

// ---- anti-forcing polynomials --------------------------------------------

/// Af(G_n,x) by the order-3 recurrence
///   Af(G_n) = (3x^3+3x^2+x) Af(G_{n-1}) - (2x^6+6x^5-x^4+3x^3) Af(G_{n-2})
///             + (x^7+3x^6) Af(G_{n-3})
/// with Af(G_0) = 1, Af(G_1) = 2x^3+3x^2+x, Af(G_2) = 4x^6+9x^5+15x^4+3x^3+x^2.
inline IntPolynomial af_poly_g_rec(int n) {
    if (n < 0) throw std::invalid_argument("af_poly_g_rec: n must be nonnegative");
    const IntPolynomial f0 = IntPolynomial::one();
    const IntPolynomial f1({0, 1, 3, 2});
    const IntPolynomial f2({0, 0, 1, 3, 15, 9, 4});
    if (n == 0) return f0;
    if (n == 1) return f1;
    if (n == 2) return f2;
    const IntPolynomial a({0, 1, 3, 3});               // 3x^3 + 3x^2 + x
    const IntPolynomial b({0, 0, 0, 3, -1, 6, 2});     // 2x^6 + 6x^5 - x^4 + 3x^3
    const IntPolynomial c({0, 0, 0, 0, 0, 0, 3, 1});   // x^7 + 3x^6
    IntPolynomial pm3 = f0, pm2 = f1, pm1 = f2;
    for (int i = 3; i <= n; ++i) {
        IntPolynomial cur = a * pm1 - b * pm2 + c * pm3;
        pm3 = std::move(pm2);
        pm2 = std::move(pm1);
        pm1 = std::move(cur);
    }
    return pm1;
}

/// Af(H_n,x) = x^2 Af(G_{n-1},x) + (x^3+3x^2) Af(H_{n-1},x), Af(H_0) = 1.
inline IntPolynomial af_poly_h_rec(int n) {
    if (n < 0) throw std::invalid_argument("af_poly_h_rec: n must be nonnegative");
    IntPolynomial h = IntPolynomial::one();
    const IntPolynomial a({0, 0, 3, 1});  // x^3 + 3x^2
    for (int i = 1; i <= n; ++i) h = af_poly_g_rec(i - 1).shifted(2) + a * h;
    return h;
}

/// Per-class polynomials of the anti-forcing decomposition of M(G_n):
/// matchings avoiding u_0v_0; matchings with u_0v_0 whose first matched
/// middle vertical is u_{2k+1}v_{2k+1}; matchings with u_0v_0 and no other
/// matched middle vertical. Their sum is Af(G_n,x).
struct AfClassTerm {
    std::string name;
    IntPolynomial poly;
};

inline std::vector<AfClassTerm> af_decomposition_terms(int n) {
    if (n < 1) throw std::invalid_argument("af_decomposition_terms: n must be positive");
    std::vector<AfClassTerm> out;
    const IntPolynomial base({0, 0, 3, 1});  // x^3 + 3x^2
    out.push_back({"uv0-unmatched", af_poly_g_rec(n - 1).shifted(1)});
    for (int k = 0; k <= n - 1; ++k) {
        // ((x^3+3x^2)^k + (x-1) x^{3k}) x^2 Af(G_{n-k-1},x)
        IntPolynomial factor = base.pow(static_cast<unsigned>(k));
        factor += IntPolynomial({-1, 1}).shifted(static_cast<std::size_t>(3 * k));
        out.push_back({"first-vertical-" + std::to_string(2 * k + 1),
                       (factor * af_poly_g_rec(n - k - 1)).shifted(2)});
    }
    out.push_back({"no-middle-vertical", base.pow(static_cast<unsigned>(n))});
    return out;
}

namespace detail {

// Octuple sums R_n / Q_n behind the explicit anti-forcing expression. Both
// share the exponent relation q = θ - 3j - 2s - l + k + r + m + 3i with
// α = n-2i+j, β = 3i-2j-n; iterating θ over its binomial-valid range and
// computing q reproduces the printed bounds, because every out-of-range
// tuple has a vanishing binomial. `min_q` trims the low-order terms that the
// theorem extracts separately (x^n and 3x^{n+1} both come from q < 2).
inline IntPolynomial af_explicit_block(int n, bool second_block, int min_q) {
    auto ceil_div = [](int a, int b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
    auto parity_sign = [](int e) { return (((e % 2) + 2) % 2) ? BigInt(-1) : BigInt(1); };
    IntPolynomial p;
    const int shift = second_block ? 1 : 0;  // block 2 is the n-1 frame with an x^3 factor
    const int i_lo = ceil_div(n - shift, 3);
    const int i_hi = n - shift;
    for (int i = std::max(i_lo, 0); i <= i_hi; ++i) {
        const int j_lo = std::max(0, 2 * i - n + shift);
        const int j_hi = (3 * i - n + shift) / 2;
        for (int j = j_lo; j <= j_hi; ++j) {
            const int alpha = n - 2 * i + j;          // exponent of (x^7+3x^6) is alpha-shift
            const int beta = 3 * i - 2 * j - n;       // exponent of (2x^6+6x^5-x^4+3x^3) is beta+shift
            const int b_exp = alpha - shift;
            const int c_exp = beta + shift;
            if (b_exp < 0 || c_exp < 0) continue;
            const BigInt cij = binomial(i, j) * binomial(i - j, b_exp);
            if (cij == 0) continue;
            for (int k = 0; k <= j; ++k) {
                for (int r = 0; r <= k; ++r) {
                    for (int m = 0; m <= b_exp; ++m) {
                        for (int s = 0; s <= c_exp; ++s) {
                            for (int l = 0; l <= c_exp - s; ++l) {
                                for (int t2 = 0; t2 <= c_exp - s - l; ++t2) {
                                    // t2 counts the 2x^3 picks; θ = t2 + 2*shift
                                    const int theta = t2 + 2 * shift;
                                    const int q = theta - 3 * j - 2 * s - l + k + r + m + 3 * i;
                                    if (q < min_q) continue;
                                    const int pow3 =
                                        k + i - j - m - l - theta + 2 * shift;
                                    BigInt term = parity_sign(beta + l) *
                                                  int_pow(BigInt(2),
                                                          static_cast<unsigned>(c_exp - s - l)) *
                                                  int_pow(BigInt(3), static_cast<unsigned>(pow3)) *
                                                  cij * binomial(j, k) * binomial(k, r) *
                                                  binomial(b_exp, m) * binomial(c_exp, s) *
                                                  binomial(c_exp - s, l) *
                                                  binomial(c_exp - s - l, t2);
                                    p.add_term(term, static_cast<std::size_t>(n + q));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return p;
}

}  // namespace detail

/// Af(G_n,x) = R_n(x) + Q_n(x) + 3x^{n+1} + x^n by the explicit octuple
/// sums, with binomial(a,b) = 0 outside 0 <= b <= a and all bounds clamped.
inline IntPolynomial af_poly_g_explicit(int n) {
    if (n < 0) throw std::invalid_argument("af_poly_g_explicit: n must be nonnegative");
    if (n == 0) return IntPolynomial::one();
    IntPolynomial p = detail::af_explicit_block(n, false, 2);  // R_n
    p += detail::af_explicit_block(n, true, 2);                // Q_n
    p.add_term(3, static_cast<std::size_t>(n + 1));
    p.add_term(1, static_cast<std::size_t>(n));
    return p;
}

// ---- degree of freedom (sum of forcing numbers) --------------------------

/// IDF(G_n) as the derivative of the forcing polynomial at x = 1.
inline BigInt idf_from_poly(int n) { return forcing_poly_g_rec(n).derivative().eval_one(); }

/// IDF by the degree-5 linear recurrence
///   IDF_{n+2} = 13 IDF_{n+1} - 56 IDF_n + 92 IDF_{n-1} - 64 IDF_{n-2} + 16 IDF_{n-3}.
/// Bases IDF_0..IDF_3 come from the small forcing polynomials and IDF_4 is a
/// published anchor.
inline BigInt idf_rec(int n) {
    if (n < 0) throw std::invalid_argument("idf_rec: n must be nonnegative");
    std::vector<BigInt> v{0, 10, 108, 852, 5948};
    for (int i = 5; i <= n; ++i)
        v.push_back(13 * v[static_cast<std::size_t>(i - 1)] -
                    56 * v[static_cast<std::size_t>(i - 2)] +
                    92 * v[static_cast<std::size_t>(i - 3)] -
                    64 * v[static_cast<std::size_t>(i - 4)] +
                    16 * v[static_cast<std::size_t>(i - 5)]);
    return v[static_cast<std::size_t>(n)];
}

/// IDF closed form over Q(√5) with basis {1, (3±√5)^n, n(3±√5)^n}.
inline BigInt idf_closed(int n) {
    if (n < 0) throw std::invalid_argument("idf_closed: n must be nonnegative");
    SurdNumber root_lo(Rational(3), Rational(-1));
    SurdNumber root_hi(Rational(3), Rational(1));
    SurdNumber lo_pow = root_lo.pow(static_cast<unsigned>(n));
    SurdNumber hi_pow = root_hi.pow(static_cast<unsigned>(n));
    SurdNumber value = SurdNumber(Rational(-4), Rational(0)) +
                       SurdNumber(Rational(2), Rational(22, 25)) * lo_pow +
                       Rational(n) * (SurdNumber(Rational(13, 10), Rational(-3, 10)) * lo_pow) +
                       SurdNumber(Rational(2), Rational(-22, 25)) * hi_pow +
                       Rational(n) * (SurdNumber(Rational(13, 10), Rational(3, 10)) * hi_pow);
    return value.expect_integer("idf_closed");
}

// ---- sum of anti-forcing numbers ------------------------------------------

/// A_n = d/dx Af(G_n,x) at x = 1, from the recurrence polynomial.
inline BigInt afsum_from_poly(int n) { return af_poly_g_rec(n).derivative().eval_one(); }

/// A_n closed form over Q(√5).
inline BigInt afsum_closed(int n) {
    if (n < 0) throw std::invalid_argument("afsum_closed: n must be nonnegative");
    SurdNumber root_lo(Rational(3), Rational(-1));
    SurdNumber root_hi(Rational(3), Rational(1));
    SurdNumber lo_pow = root_lo.pow(static_cast<unsigned>(n));
    SurdNumber hi_pow = root_hi.pow(static_cast<unsigned>(n));
    SurdNumber value = SurdNumber(Rational(-3), Rational(0)) +
                       SurdNumber(Rational(3, 2), Rational(67, 100)) * lo_pow +
                       Rational(n) * (SurdNumber(Rational(29, 20), Rational(-1, 2)) * lo_pow) +
                       SurdNumber(Rational(3, 2), Rational(-67, 100)) * hi_pow +
                       Rational(n) * (SurdNumber(Rational(29, 20), Rational(1, 2)) * hi_pow);
    return value.expect_integer("afsum_closed");
}

// ---- asymptotic ratios -----------------------------------------------------

/// Exact ratio against n * Phi_n plus its distance to the limit constant,
/// reported as high-precision decimals. Exact integers feed the rationals;
/// only the irrational limit is approximated (well below reporting
/// precision).
struct RatioReport {
    int n = 0;
    Rational value;
    Rational limit;     // rational approximation of the limit constant
    Rational distance;  // |value - limit|
    std::string value_decimal;
    std::string limit_decimal;
    std::string distance_decimal;
};

namespace detail {

inline RatioReport make_ratio_report(int n, const BigInt& numerator, const Rational& limit) {
    RatioReport r;
    r.n = n;
    r.value = Rational(numerator, BigInt(n) * phi_closed(n));
    r.limit = limit;
    r.distance = r.value > limit ? Rational(r.value - limit) : Rational(limit - r.value);
    r.value_decimal = decimal_string(r.value, 12);
    r.limit_decimal = decimal_string(r.limit, 12);
    r.distance_decimal = decimal_string(r.distance, 12);
    return r;
}

inline constexpr int kLimitDigits = 60;

}  // namespace detail

/// IDF_n / (n Phi_n), approaching (-5 + 6√5)/5.
inline RatioReport ratio_idf(int n) {
    if (n < 1) throw std::invalid_argument("ratio_idf: n must be positive");
    Rational limit = (Rational(-5) + 6 * sqrt5_approx(detail::kLimitDigits)) / 5;
    return detail::make_ratio_report(n, idf_closed(n), limit);
}

/// A_n / (n Phi_n), approaching (5 + 37√5)/40.
inline RatioReport ratio_afsum(int n) {
    if (n < 1) throw std::invalid_argument("ratio_afsum: n must be positive");
    Rational limit = (Rational(5) + 37 * sqrt5_approx(detail::kLimitDigits)) / 40;
    return detail::make_ratio_report(n, afsum_closed(n), limit);
}

}  // namespace matchforge
