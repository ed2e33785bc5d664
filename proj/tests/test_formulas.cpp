#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "matchforge/formulas.hpp"
#include "matchforge/spectrum.hpp"

using namespace matchforge;

TEST_CASE("phi closed form equals the recurrence everywhere it is checked") {
    CHECK(phi_closed(0) == 1);
    CHECK(phi_closed(1) == 6);
    CHECK(phi_closed(2) == 32);
    CHECK(phi_closed(3) == 168);
    CHECK(phi_closed(4) == 880);
    CHECK(phi_closed(8) == 661504);
    for (int n = 0; n <= 50; ++n) CHECK(phi_closed(n) == phi_g_recurrence(n));
}

TEST_CASE("forcing polynomial recurrence") {
    CHECK(forcing_poly_g_rec(0) == IntPolynomial::one());
    CHECK(forcing_poly_g_rec(1) == IntPolynomial({0, 2, 4}));
    CHECK(forcing_poly_g_rec(2) == IntPolynomial({0, 0, 4, 12, 16}));
    CHECK(forcing_poly_g_rec(3) == IntPolynomial({0, 0, 0, 12, 28, 64, 64}));
    CHECK(forcing_poly_g_rec(5).eval_one() == 4608);
    for (int n = 0; n <= 50; ++n) {
        CHECK(forcing_poly_g_rec(n).eval_one() == phi_g_recurrence(n));
        CHECK(forcing_poly_g_rec(n).eval_one() == phi_closed(n));
    }
}

TEST_CASE("forcing polynomial of the truncated family") {
    CHECK(forcing_poly_h_rec(0) == IntPolynomial::one());
    CHECK(forcing_poly_h_rec(1) == IntPolynomial({0, 1, 4}));  // bootstrapped by enumeration
    CHECK(forcing_poly_h_rec(2) == IntPolynomial({0, 1, 1, 8, 16}));
    CHECK(forcing_poly_h_rec(2).eval_one() == 26);
    for (int n = 0; n <= 10; ++n)
        CHECK(forcing_poly_h_rec(n).eval_one() == phi_h_recurrence(n));
    // consistency with the two-family relation F(G_n) = 2x F(G_{n-1}) + 4x^2 F(H_{n-1})
    for (int n = 1; n <= 8; ++n) {
        IntPolynomial lhs = forcing_poly_g_rec(n);
        IntPolynomial rhs = BigInt(2) * forcing_poly_g_rec(n - 1).shifted(1) +
                            BigInt(4) * forcing_poly_h_rec(n - 1).shifted(2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("forcing polynomial explicit sum") {
    CHECK(forcing_poly_g_explicit(1) == IntPolynomial({0, 2, 4}));
    for (int n = 0; n <= 8; ++n) CHECK(forcing_poly_g_explicit(n) == forcing_poly_g_rec(n));
    // leading term 2^{2n} x^{2n}
    IntPolynomial f4 = forcing_poly_g_explicit(4);
    CHECK(f4.degree() == 8);
    CHECK(f4.coeff(8) == 256);
}

TEST_CASE("forcing polynomial degrees and support") {
    for (int n = 1; n <= 8; ++n) {
        IntPolynomial f = forcing_poly_g_rec(n);
        CHECK(f.degree() == 2 * n);
        CHECK(f.coeff(static_cast<std::size_t>(2 * n)) ==
              int_pow(2, static_cast<unsigned>(2 * n)));
        CHECK(f.min_exponent() == n);
        auto s = make_spectrum(f);
        CHECK(*s.min == n);
        CHECK(*s.max == 2 * n);
        CHECK(s.contiguous);
    }
}

TEST_CASE("degree of freedom routes and anchors") {
    CHECK(idf_from_poly(0) == 0);
    CHECK(idf_from_poly(1) == 10);
    CHECK(idf_from_poly(2) == 108);
    CHECK(idf_from_poly(3) == 852);
    CHECK(idf_closed(4) == 5948);
    CHECK(idf_closed(5) == 38908);
    CHECK(idf_closed(6) == 244348);
    CHECK(idf_closed(7) == 1492092);
    CHECK(idf_closed(8) == 8926204);
    for (int n = 0; n <= 50; ++n) {
        BigInt poly_route = idf_from_poly(n);
        CHECK(poly_route == idf_rec(n));
        CHECK(poly_route == idf_closed(n));
    }
}

TEST_CASE("anti-forcing polynomial recurrence") {
    CHECK(af_poly_g_rec(0) == IntPolynomial::one());
    CHECK(af_poly_g_rec(1) == IntPolynomial({0, 1, 3, 2}));
    CHECK(af_poly_g_rec(2) == IntPolynomial({0, 0, 1, 3, 15, 9, 4}));
    CHECK(af_poly_g_rec(3) == IntPolynomial({0, 0, 0, 1, 3, 19, 57, 59, 21, 8}));
    CHECK(af_poly_g_rec(4).eval_one() == 880);
    for (int n = 0; n <= 50; ++n) {
        CHECK(af_poly_g_rec(n).eval_one() == phi_g_recurrence(n));
        CHECK(af_poly_g_rec(n).eval_one() == phi_closed(n));
    }
}

TEST_CASE("anti-forcing polynomial of the truncated family") {
    CHECK(af_poly_h_rec(0) == IntPolynomial::one());
    CHECK(af_poly_h_rec(1) == IntPolynomial({0, 0, 4, 1}));
    CHECK(af_poly_h_rec(1).eval_one() == 5);
    CHECK(af_poly_h_rec(2).eval_one() == 26);
    for (int n = 0; n <= 10; ++n) CHECK(af_poly_h_rec(n).eval_one() == phi_h_recurrence(n));
}

TEST_CASE("anti-forcing class decomposition") {
    auto terms1 = af_decomposition_terms(1);
    REQUIRE(terms1.size() == 3);
    CHECK(terms1[0].name == "uv0-unmatched");
    CHECK(terms1[0].poly == IntPolynomial({0, 1}));
    CHECK(terms1[1].name == "first-vertical-1");
    CHECK(terms1[2].name == "no-middle-vertical");
    CHECK(terms1[2].poly == IntPolynomial({0, 0, 3, 1}));

    for (int n = 1; n <= 6; ++n) {
        IntPolynomial sum;
        for (const auto& t : af_decomposition_terms(n)) sum += t.poly;
        CHECK(sum == af_poly_g_rec(n));
    }
}

TEST_CASE("class polynomials match filtered enumeration") {
    for (int n = 1; n <= 3; ++n) {
        PolyominoGraph g = build_g(n);
        int uv0 = g.labelled_edge('u', 0, 'v', 0).value();
        std::vector<int> middle;  // u_j v_j for j >= 1
        for (int j = 1; j <= 2 * n; ++j) middle.push_back(g.labelled_edge('u', j, 'v', j).value());

        auto terms = af_decomposition_terms(n);
        IntPolynomial no_uv0, no_middle;
        std::vector<IntPolynomial> first_vertical(static_cast<std::size_t>(n));
        for (const auto& m : enumerate_perfect_matchings(g)) {
            int af = antiforcing_number_structural(g, m);
            if (!m.has_edge(uv0)) {
                no_uv0.add_term(1, static_cast<std::size_t>(af));
                continue;
            }
            int first = -1;
            for (int j = 0; j < 2 * n; ++j) {
                if (m.has_edge(middle[static_cast<std::size_t>(j)])) {
                    first = j + 1;  // column of the first matched middle vertical
                    break;
                }
            }
            if (first == -1) {
                no_middle.add_term(1, static_cast<std::size_t>(af));
            } else {
                REQUIRE(first % 2 == 1);  // parity forced by the construction
                first_vertical[static_cast<std::size_t>((first - 1) / 2)].add_term(
                    1, static_cast<std::size_t>(af));
            }
        }
        CHECK(no_uv0 == terms[0].poly);
        for (int k = 0; k <= n - 1; ++k)
            CHECK(first_vertical[static_cast<std::size_t>(k)] ==
                  terms[static_cast<std::size_t>(k) + 1].poly);
        CHECK(no_middle == terms[static_cast<std::size_t>(n) + 1].poly);
    }
}

TEST_CASE("anti-forcing polynomial explicit sum") {
    CHECK(af_poly_g_explicit(1) == IntPolynomial({0, 1, 3, 2}));
    for (int n = 0; n <= 7; ++n) CHECK(af_poly_g_explicit(n) == af_poly_g_rec(n));
    // the two extracted low-order terms x^n and 3x^{n+1}
    for (int n = 2; n <= 7; ++n) {
        IntPolynomial a = af_poly_g_rec(n);
        CHECK(a.coeff(static_cast<std::size_t>(n)) == 1);
        CHECK(a.coeff(static_cast<std::size_t>(n) + 1) == 3);
    }
}

TEST_CASE("explicit block sums carry no hidden low-order terms") {
    for (int n = 1; n <= 6; ++n) {
        // the first block's q<2 terms are exactly x^n + 3x^{n+1}
        IntPolynomial full = detail::af_explicit_block(n, false, 0);
        IntPolynomial trimmed = detail::af_explicit_block(n, false, 2);
        IntPolynomial low = full - trimmed;
        IntPolynomial expected;
        expected.add_term(1, static_cast<std::size_t>(n));
        expected.add_term(3, static_cast<std::size_t>(n) + 1);
        CHECK(low == expected);
        // the second block has nothing below q = 2
        CHECK(detail::af_explicit_block(n, true, 0) == detail::af_explicit_block(n, true, 2));
    }
}

TEST_CASE("anti-forcing degrees and support") {
    for (int n = 1; n <= 8; ++n) {
        IntPolynomial a = af_poly_g_rec(n);
        CHECK(a.degree() == 3 * n);
        CHECK(a.min_exponent() == n);
        auto s = make_spectrum(a);
        CHECK(*s.min == n);
        CHECK(*s.max == 3 * n);
        CHECK(s.contiguous);
    }
}

TEST_CASE("anti-forcing sum routes and anchors") {
    CHECK(afsum_from_poly(1) == 13);
    CHECK(afsum_closed(4) == 7721);
    CHECK(afsum_closed(5) == 50541);
    CHECK(afsum_closed(6) == 317565);
    CHECK(afsum_closed(7) == 1939901);
    CHECK(afsum_closed(8) == 11608381);
    std::vector<BigInt> values;
    for (int n = 0; n <= 50; ++n) {
        BigInt a = afsum_from_poly(n);
        CHECK(a == afsum_closed(n));
        values.push_back(a);
    }
    // the anti-forcing sum satisfies the same degree-5 recurrence as IDF
    for (int n = 5; n <= 50; ++n)
        CHECK(values[static_cast<std::size_t>(n)] ==
              13 * values[static_cast<std::size_t>(n - 1)] -
                  56 * values[static_cast<std::size_t>(n - 2)] +
                  92 * values[static_cast<std::size_t>(n - 3)] -
                  64 * values[static_cast<std::size_t>(n - 4)] +
                  16 * values[static_cast<std::size_t>(n - 5)]);
}

TEST_CASE("asymptotic ratios approach their limits monotonically") {
    RatioReport idf50 = ratio_idf(50);
    RatioReport afsum50 = ratio_afsum(50);
    // |ratio(50) - limit| within 1e-3 against the quoted 7-digit constants
    Rational idf_target(BigInt(16832816), BigInt(10000000));
    Rational afsum_target(BigInt(21933629), BigInt(10000000));
    auto absdiff = [](const Rational& a, const Rational& b) {
        return a > b ? Rational(a - b) : Rational(b - a);
    };
    CHECK(absdiff(idf50.value, idf_target) <= Rational(1, 1000));
    CHECK(absdiff(afsum50.value, afsum_target) <= Rational(1, 1000));
    CHECK(idf50.value_decimal.substr(0, 5) == "1.683");
    CHECK(afsum50.value_decimal.substr(0, 5) == "2.193");

    Rational prev_idf(-1), prev_afsum(-1);
    for (int n : {10, 20, 30, 40, 50}) {
        RatioReport ri = ratio_idf(n);
        RatioReport ra = ratio_afsum(n);
        if (prev_idf >= 0) {
            CHECK(ri.distance < prev_idf);
            CHECK(ra.distance < prev_afsum);
        }
        prev_idf = ri.distance;
        prev_afsum = ra.distance;
    }
}
