#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "matchforge/forcing.hpp"
#include "matchforge/spectrum.hpp"

using namespace matchforge;

TEST_CASE("forcing numbers of the reference matchings of G_1") {
    PolyominoGraph g = build_g(1);
    auto matchings = enumerate_perfect_matchings(g);
    auto ma = testutil::g1_matching_a(g);
    auto m1 = testutil::g1_matching_verticals(g);
    auto mc = testutil::g1_matching_rungs(g);

    // frozen values, cross-checked against the independent subset-scan oracle
    CHECK(testutil::brute_forcing_number(g, ma) == 1);
    CHECK(testutil::brute_forcing_number(g, m1) == 1);
    CHECK(testutil::brute_forcing_number(g, mc) == 2);

    CHECK(forcing_number_oracle(g, ma, matchings) == 1);
    CHECK(forcing_number_oracle(g, m1, matchings) == 1);
    CHECK(forcing_number_oracle(g, mc, matchings) == 2);

    CHECK(forcing_number_resonant(g, ma) == 1);
    CHECK(forcing_number_resonant(g, m1) == 1);
    CHECK(forcing_number_resonant(g, mc) == 2);

    CHECK(forcing_number_cycles(g, ma) == 1);
    CHECK(forcing_number_cycles(g, m1) == 1);
    CHECK(forcing_number_cycles(g, mc) == 2);
}

TEST_CASE("three forcing routes agree on every matching of the small families") {
    for (const auto& g : {build_g(1), build_g(2), build_h(1), build_h(2)}) {
        auto matchings = enumerate_perfect_matchings(g);
        for (const auto& m : matchings) {
            int oracle = forcing_number_oracle(g, m, matchings);
            CHECK(oracle == testutil::brute_forcing_number(g, m));
            CHECK(oracle == forcing_number_resonant(g, m));
            CHECK(oracle == forcing_number_cycles(g, m));
        }
    }
}

TEST_CASE("oracle bound and family gate") {
    PolyominoGraph g = build_g(2);
    auto matchings = enumerate_perfect_matchings(g);
    CHECK_THROWS_AS(forcing_number_oracle(g, matchings[0], matchings, 5), SizeLimitExceeded);

    PolyominoGraph sq = from_cells({{0, 0}});
    auto sq_m = enumerate_perfect_matchings(sq);
    CHECK_THROWS_AS(forcing_number_resonant(sq, sq_m[0]), WrongFamily);
    CHECK(forcing_number_cycles(sq, sq_m[0]) == 1);
}

TEST_CASE("maximum resonant sets return a valid witness") {
    PolyominoGraph g = build_g(1);
    auto mc = testutil::g1_matching_rungs(g);
    ResonantSet best = maximum_resonant_set(g, mc);
    REQUIRE(best.size() == 2);
    auto alternating = alternating_squares(g, mc);
    for (std::size_t i = 0; i < best.faces.size(); ++i) {
        CHECK(std::find(alternating.begin(), alternating.end(), best.faces[i]) !=
              alternating.end());
        for (std::size_t j = i + 1; j < best.faces.size(); ++j) {
            const Face& a = g.faces()[static_cast<std::size_t>(best.faces[i])];
            const Face& b = g.faces()[static_cast<std::size_t>(best.faces[j])];
            for (int va : a.vertices)
                for (int vb : b.vertices) CHECK(va != vb);
        }
    }
}

TEST_CASE("clar number of the family and of elementary shapes") {
    CHECK(clar_number(build_g(1)) == 2);
    CHECK(clar_number(build_g(2)) == 4);
    CHECK(clar_number(from_cells({{0, 0}})) == 1);
    // a 2x2 block has an odd vertex count, hence no perfect matching
    CHECK_THROWS_AS(clar_number(from_cells({{0, 0}, {0, 1}, {1, 0}, {1, 1}})),
                    NoPerfectMatching);
}

TEST_CASE("forcing polynomial by enumeration") {
    CHECK(forcing_polynomial_enum(build_g(0)) == IntPolynomial::one());
    CHECK(forcing_polynomial_enum(build_g(1)) == IntPolynomial({0, 2, 4}));
    CHECK(forcing_polynomial_enum(build_g(2)) == IntPolynomial({0, 0, 4, 12, 16}));
    // one recurrence step past the printed initial values
    CHECK(forcing_polynomial_enum(build_g(3)) == IntPolynomial({0, 0, 0, 12, 28, 64, 64}));
    CHECK(forcing_polynomial_enum(build_h(1)) == IntPolynomial({0, 1, 4}));

    for (int n = 0; n <= 4; ++n)
        CHECK(forcing_polynomial_enum(build_g(n)).eval_one() == phi_g_recurrence(n));

    // thread count must not change the result
    CHECK(forcing_polynomial_enum(build_g(3), 4) == forcing_polynomial_enum(build_g(3), 1));
}

TEST_CASE("forcing spectrum reports") {
    auto s2 = make_spectrum(IntPolynomial({0, 0, 4, 12, 16}));
    REQUIRE(s2.min.has_value());
    CHECK(*s2.min == 2);
    CHECK(*s2.max == 4);
    CHECK(s2.contiguous);
    CHECK(s2.total == 32);
    REQUIRE(s2.counts.size() == 3);
    CHECK(s2.counts[0] == std::pair<int, BigInt>{2, 4});

    auto s1 = make_spectrum(IntPolynomial({0, 2, 4}));
    CHECK(*s1.min == 1);
    CHECK(*s1.max == 2);

    auto unique_pm = make_spectrum(IntPolynomial::one());
    CHECK_FALSE(unique_pm.min.has_value());
    CHECK_FALSE(unique_pm.max.has_value());
    CHECK(unique_pm.counts.empty());
    CHECK(unique_pm.total == 1);

    auto gapped = make_spectrum(IntPolynomial({0, 1, 0, 1}));
    CHECK_FALSE(gapped.contiguous);
}

namespace {

// deterministic random edge-connected cell sets
std::vector<Cell> random_polyomino(std::mt19937& rng, int max_cells) {
    std::vector<Cell> cells{{0, 0}};
    std::set<Cell> used{{0, 0}};
    std::uniform_int_distribution<int> dir(0, 3);
    int target = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_cells - 1));
    while (static_cast<int>(cells.size()) < target) {
        Cell base = cells[rng() % cells.size()];
        static const int dr[4] = {1, -1, 0, 0};
        static const int dc[4] = {0, 0, 1, -1};
        int d = dir(rng);
        Cell next{base.first + dr[d], base.second + dc[d]};
        if (used.insert(next).second) cells.push_back(next);
    }
    return cells;
}

}  // namespace

TEST_CASE("definitional oracle agrees with the cycle route on random polyominoes") {
    std::mt19937 rng(20240817u);
    int graphs_checked = 0;
    while (graphs_checked < 20) {
        auto cells = random_polyomino(rng, 10);
        PolyominoGraph g = from_cells(cells);
        auto matchings = enumerate_perfect_matchings(g);
        if (matchings.empty()) continue;  // shapes without perfect matchings are off-topic here
        ++graphs_checked;
        int max_forcing = 0;
        for (const auto& m : matchings) {
            int oracle = forcing_number_oracle(g, m, matchings, 20);
            CHECK(oracle == forcing_number_cycles(g, m, g.edge_count()));
            max_forcing = std::max(max_forcing, oracle);
        }
        CHECK(max_forcing == clar_number(g));
    }
}
