#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "matchforge/antiforcing.hpp"
#include "matchforge/forcing.hpp"
#include "matchforge/lattice.hpp"
#include "matchforge/matching.hpp"

namespace testutil {

// "u3" -> vertex id in a family graph
inline int vertex_of(const matchforge::PolyominoGraph& g, const std::string& label) {
    char letter = label[0];
    int j = std::stoi(label.substr(1));
    auto id = g.labelled_vertex(letter, j);
    if (!id) throw std::runtime_error("no vertex " + label);
    return *id;
}

inline matchforge::Matching make_matching(
    const matchforge::PolyominoGraph& g,
    std::initializer_list<std::pair<const char*, const char*>> pairs) {
    std::vector<int> edges;
    for (const auto& [a, b] : pairs) {
        auto e = g.edge_index(vertex_of(g, a), vertex_of(g, b));
        if (!e) throw std::runtime_error(std::string("no edge ") + a + "-" + b);
        edges.push_back(*e);
    }
    return matchforge::Matching(g, std::move(edges));
}

inline int face_by_name(const matchforge::PolyominoGraph& g, const std::string& name) {
    for (int i = 0; i < g.face_count(); ++i)
        if (g.faces()[static_cast<std::size_t>(i)].name == name) return i;
    throw std::runtime_error("no face named " + name);
}

inline std::vector<std::string> face_names(const matchforge::PolyominoGraph& g,
                                           const std::vector<int>& face_indices) {
    std::vector<std::string> names;
    for (int f : face_indices) names.push_back(g.faces()[static_cast<std::size_t>(f)].name);
    return names;
}

// The three reference matchings of G_1 used across the forcing and
// anti-forcing tests.
inline matchforge::Matching g1_matching_a(const matchforge::PolyominoGraph& g1) {
    return make_matching(g1, {{"u0", "u1"}, {"v0", "v1"}, {"w1", "w2"}, {"z1", "z2"}, {"u2", "v2"}});
}
inline matchforge::Matching g1_matching_verticals(const matchforge::PolyominoGraph& g1) {
    return make_matching(g1, {{"u0", "v0"}, {"u1", "v1"}, {"u2", "v2"}, {"w1", "w2"}, {"z1", "z2"}});
}
inline matchforge::Matching g1_matching_rungs(const matchforge::PolyominoGraph& g1) {
    return make_matching(g1, {{"u0", "v0"}, {"w1", "u1"}, {"w2", "u2"}, {"z1", "v1"}, {"z2", "v2"}});
}

// Perfect matching of G_n built from all middle verticals plus the w/z
// horizontal rungs; handy when enumeration is too big.
inline matchforge::Matching family_vertical_matching(const matchforge::PolyominoGraph& g) {
    std::vector<int> edges;
    int n = g.family_n().value();
    for (int j = 0; j <= 2 * n; ++j) {
        auto e = g.labelled_edge('u', j, 'v', j);
        if (e) edges.push_back(*e);
    }
    for (int k = 1; k <= n; ++k) {
        edges.push_back(g.labelled_edge('w', 2 * k - 1, 'w', 2 * k).value());
        edges.push_back(g.labelled_edge('z', 2 * k - 1, 'z', 2 * k).value());
    }
    return matchforge::Matching(g, std::move(edges));
}

// Independent definitional forcing oracle for the tests: smallest subset of
// M contained in no other perfect matching, found by scanning all subsets in
// popcount order against the explicit matching list.
inline int brute_forcing_number(const matchforge::PolyominoGraph& g,
                                const matchforge::Matching& m) {
    auto all = matchforge::enumerate_perfect_matchings(g);
    const auto& edges = m.edge_indices();
    const int k = static_cast<int>(edges.size());
    int best = k;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        int pc = __builtin_popcount(mask);
        if (pc >= best) continue;
        int containing = 0;
        for (const auto& other : all) {
            bool contains = true;
            for (int i = 0; i < k && contains; ++i)
                if ((mask >> i) & 1u)
                    contains = other.has_edge(edges[static_cast<std::size_t>(i)]);
            if (contains) ++containing;
        }
        if (containing == 1) best = pc;  // only M itself
    }
    return best;
}

// Independent definitional anti-forcing oracle: smallest set of non-matching
// edges whose removal leaves exactly one perfect matching, checked by
// re-enumeration on the reduced graph.
inline int brute_antiforcing_number(const matchforge::PolyominoGraph& g,
                                    const matchforge::Matching& m) {
    std::vector<int> removable;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!m.has_edge(e)) removable.push_back(e);
    const int k = static_cast<int>(removable.size());
    for (int size = 0; size <= k; ++size) {
        std::vector<int> pick;
        auto attempt = [&](auto&& self, int from) -> bool {
            if (static_cast<int>(pick.size()) == size) {
                std::vector<std::pair<int, int>> kept;
                for (int e = 0; e < g.edge_count(); ++e) {
                    if (std::find(pick.begin(), pick.end(), e) == pick.end())
                        kept.push_back(g.edge(e));
                }
                matchforge::PolyominoGraph reduced(g.vertices(), kept, {});
                return matchforge::count_perfect_matchings_enumeration(reduced) == 1;
            }
            for (int i = from; i < k; ++i) {
                pick.push_back(removable[static_cast<std::size_t>(i)]);
                if (self(self, i + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (attempt(attempt, 0)) return size;
    }
    throw std::runtime_error("no anti-forcing set found");
}

}  // namespace testutil
