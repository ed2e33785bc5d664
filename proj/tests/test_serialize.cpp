#include <cstdio>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "matchforge/serialize.hpp"

using namespace matchforge;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/matchforge_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
    void write(const std::string& content) const {
        std::ofstream out(path);
        out << content;
    }
};

}  // namespace

TEST_CASE("polynomial wire format") {
    IntPolynomial p({0, 2, 4});
    Json j = polynomial_to_json(p);
    CHECK(j.dump() == R"({"var":"x","terms":[[1,"2"],[2,"4"]]})");
    CHECK(polynomial_from_json(j) == p);
    CHECK(polynomial_to_csv(p) == "exponent,coefficient\n1,2\n2,4\n");

    IntPolynomial big = IntPolynomial::monomial(int_pow(10, 30), 3);
    CHECK(polynomial_from_json(polynomial_to_json(big)) == big);
    CHECK(polynomial_to_json(IntPolynomial::zero()).dump() == R"({"var":"x","terms":[]})");
}

TEST_CASE("matching wire format round-trips") {
    PolyominoGraph g = build_g(1);
    Matching m = testutil::g1_matching_rungs(g);
    Json j = matching_to_json(m);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 5);
    // endpoint pairs ascend with the deterministic edge order
    CHECK(j.at(0).at(0).get<int>() <= j.at(0).at(1).get<int>());
    Matching back = matching_from_json(g, j);
    CHECK(back == m);
    CHECK_THROWS_AS(matching_from_json(g, Json::parse("[[0,7]]")), std::invalid_argument);
}

TEST_CASE("cell lists parse from JSON and ASCII pictures") {
    TempFile json_file("cells.json");
    json_file.write("[[1,0],[1,1],[0,1],[2,1]]");
    CHECK(canonical_key(from_cells(cells_from_file(json_file.path))) ==
          canonical_key(build_g(1)));

    TempFile ascii_file("cells.txt");
    ascii_file.write(".#\n##\n.#\n");
    CHECK(canonical_key(from_cells(cells_from_file(ascii_file.path))) ==
          canonical_key(build_g(1)));

    CHECK_THROWS_AS(cells_from_ascii("#x"), std::invalid_argument);
    CHECK_THROWS_AS(cells_from_file("/nonexistent/path"), std::invalid_argument);
}

TEST_CASE("graph serialization carries structure and names") {
    Json j = graph_to_json(build_g(1));
    CHECK(j.at("kind") == "g");
    CHECK(j.at("n") == 1);
    CHECK(j.at("vertex_count") == 10);
    CHECK(j.at("edge_count") == 13);
    CHECK(j.at("face_count") == 4);
    CHECK(j.at("vertices").size() == 10);
    CHECK(j.at("vertices").at(0).contains("label"));
    bool found_s11 = false;
    for (const auto& f : j.at("faces"))
        if (f.contains("name") && f.at("name") == "s_{1,1}") found_s11 = true;
    CHECK(found_s11);
    CHECK_FALSE(graph_to_json(from_cells({{0, 0}})).at("vertices").at(0).contains("label"));
}

TEST_CASE("spectrum serialization") {
    auto s = make_spectrum(IntPolynomial({0, 2, 4}));
    Json j = spectrum_to_json(s);
    CHECK(j.at("min") == 1);
    CHECK(j.at("max") == 2);
    CHECK(j.at("contiguous") == true);
    CHECK(j.at("total") == "6");
    CHECK(j.at("counts").dump() == R"([[1,"2"],[2,"4"]])");
    Json empty = spectrum_to_json(make_spectrum(IntPolynomial::one()));
    CHECK(empty.at("min").is_null());

    CHECK(spectrum_to_csv(s) == "value,count\n1,2\n2,4\n");
}

TEST_CASE("result cache stores byte-identical payloads") {
    TempFile cache_file("cache.json");
    std::string payload = polynomial_to_json(IntPolynomial({0, 2, 4})).dump();
    {
        ResultCache cache(cache_file.path);
        CHECK_FALSE(cache.lookup("g:1:forcing-poly:enum:json").has_value());
        cache.store("g:1:forcing-poly:enum:json", payload, 1700000000);
        cache.save();
    }
    {
        ResultCache reloaded(cache_file.path);
        auto hit = reloaded.lookup("g:1:forcing-poly:enum:json");
        REQUIRE(hit.has_value());
        CHECK(*hit == payload);
    }
    // corrupt cache files degrade to empty (recomputation), not failure
    cache_file.write("not json at all");
    ResultCache corrupt(cache_file.path);
    CHECK_FALSE(corrupt.lookup("anything").has_value());
}
