#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "matchforge/errors.hpp"
#include "matchforge/forcing.hpp"
#include "matchforge/lattice.hpp"
#include "matchforge/matching.hpp"

namespace matchforge {

inline constexpr int kDefaultAntiforcingOracleBound = 20;

/// Definitional anti-forcing number: smallest S' outside M whose removal
/// leaves M as the unique perfect matching. M stays unique in g - S' exactly
/// when no M-alternating cycle survives, so the search is an exact minimum
/// hitting set over the cycles' non-matching edges, by iterative deepening.
inline int antiforcing_number_oracle(const PolyominoGraph& g, const Matching& m,
                                     int max_removable = kDefaultAntiforcingOracleBound,
                                     int max_edges = kDefaultCycleEdgeBound) {
    const int removable = g.edge_count() - m.size();
    if (removable > max_removable)
        throw SizeLimitExceeded("antiforcing_number_oracle: |E \\ M| = " +
                                std::to_string(removable) + ", bound is " +
                                std::to_string(max_removable));
    auto cycles = alternating_cycles(g, m, max_edges);
    if (cycles.empty()) return 0;

    // candidate edges: non-matching edges lying on some alternating cycle
    std::vector<int> candidates;
    for (const auto& c : cycles)
        for (int e : c.edge_indices)
            if (!m.has_edge(e)) candidates.push_back(e);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.size() > 63)
        throw SizeLimitExceeded("antiforcing_number_oracle: too many candidate edges");

    std::vector<std::uint64_t> cycle_masks;
    cycle_masks.reserve(cycles.size());
    for (const auto& c : cycles) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (c.has_edge(candidates[i]) && !m.has_edge(candidates[i]))
                mask |= std::uint64_t{1} << i;
        cycle_masks.push_back(mask);
    }

    // depth-limited hitting-set search: branch on the edges of the first
    // cycle not yet hit
    auto search = [&](auto&& self, std::uint64_t removed, int budget) -> bool {
        std::uint64_t unhit = 0;
        bool all_hit = true;
        for (std::uint64_t cm : cycle_masks) {
            if ((cm & removed) == 0) {
                unhit = cm;
                all_hit = false;
                break;
            }
        }
        if (all_hit) return true;
        if (budget == 0) return false;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            std::uint64_t bit = std::uint64_t{1} << i;
            if ((unhit & bit) == 0) continue;
            if (self(self, removed | bit, budget - 1)) return true;
        }
        return false;
    };
    for (int size = 1; size <= static_cast<int>(candidates.size()); ++size)
        if (search(search, 0, size)) return size;
    throw std::logic_error("antiforcing_number_oracle: no anti-forcing set found");
}

/// Pairwise compatible M-alternating cycles; c'(M) is its size.
struct CompatibleSet {
    std::vector<AlternatingCycle> cycles;
    int size() const { return static_cast<int>(cycles.size()); }
};

/// A maximum compatible M-alternating set, by exact search over the full
/// cycle list.
inline CompatibleSet maximum_compatible_set(const PolyominoGraph& g, const Matching& m,
                                            int max_edges = kDefaultCycleEdgeBound) {
    auto cycles = alternating_cycles(g, m, max_edges);
    std::vector<int> picked;
    max_pairwise_subset(
        static_cast<int>(cycles.size()),
        [&](int i, int j) {
            return are_compatible(g, m, cycles[static_cast<std::size_t>(i)],
                                  cycles[static_cast<std::size_t>(j)]);
        },
        &picked);
    CompatibleSet out;
    for (int i : picked) out.cycles.push_back(cycles[static_cast<std::size_t>(i)]);
    return out;
}

/// af(G, M) = c'(M).
inline int antiforcing_number_compat(const PolyominoGraph& g, const Matching& m,
                                     int max_edges = kDefaultCycleEdgeBound) {
    return maximum_compatible_set(g, m, max_edges).size();
}

namespace detail {

inline AlternatingCycle cycle_from_labels(const PolyominoGraph& g,
                                          const std::vector<std::pair<char, int>>& walk) {
    std::vector<int> ids;
    ids.reserve(walk.size());
    for (const auto& [letter, j] : walk) ids.push_back(g.labelled_vertex(letter, j).value());
    return make_cycle(g, ids);
}

inline bool cycle_is_alternating(const Matching& m, const AlternatingCycle& c) {
    const auto& g = m.graph();
    const std::size_t n = c.vertices.size();
    bool prev = false;
    for (std::size_t i = 0; i < n; ++i) {
        int e = *g.edge_index(c.vertices[i], c.vertices[(i + 1) % n]);
        bool in = m.has_edge(e);
        if (i > 0 && in == prev) return false;
        prev = in;
    }
    // even length makes first/last alternate automatically
    return n % 2 == 0;
}

}  // namespace detail

/// Candidate cycles of an optimal compatible set on a family graph: every
/// face, the peripheries of the straight chains L_k between middle verticals
/// u_i v_i and u_j v_j (k = j - i odd), and the peripheries of the H-shaped
/// substructures W_r (left column odd). These are the only cycle shapes an
/// optimal non-crossing compatible set can use.
struct SegmentCycleCatalog {
    std::vector<AlternatingCycle> squares;
    std::vector<AlternatingCycle> chains;  // L_k peripheries
    std::vector<AlternatingCycle> stacks;  // W_r peripheries
};

inline SegmentCycleCatalog segment_cycle_catalog(const PolyominoGraph& g) {
    if (!g.is_family())
        throw WrongFamily("segment_cycle_catalog: requires a family graph");
    SegmentCycleCatalog out;
    for (const Face& f : g.faces())
        out.squares.push_back(detail::make_cycle(
            g, {f.vertices[0], f.vertices[1], f.vertices[2], f.vertices[3]}));
    if (!g.family_n() || *g.family_n() == 0) return out;
    const int top = 2 * *g.family_n();
    const int lo = g.kind() == FamilyKind::GFamily ? 0 : 1;

    for (int i = lo; i < top; ++i) {
        for (int j = i + 1; j <= top; ++j) {
            if ((j - i) % 2 == 0) continue;  // alternating peripheries need odd chain length
            // L_{j-i}: u_i .. u_j across the top, back v_j .. v_i
            std::vector<std::pair<char, int>> lwalk;
            for (int c = i; c <= j; ++c) lwalk.push_back({'u', c});
            for (int c = j; c >= i; --c) lwalk.push_back({'v', c});
            out.chains.push_back(detail::cycle_from_labels(g, lwalk));

            // W_{ceil((j-i)/2)}: zigzag through the w row and back through z;
            // needs the w/z rung at every odd column step, so i must be odd
            if (i % 2 == 1) {
                std::vector<std::pair<char, int>> wwalk;
                for (int c = i; c < j; c += 2) {
                    wwalk.push_back({'u', c});
                    wwalk.push_back({'w', c});
                    wwalk.push_back({'w', c + 1});
                    wwalk.push_back({'u', c + 1});
                }
                for (int c = j - 1; c >= i; c -= 2) {
                    wwalk.push_back({'v', c + 1});
                    wwalk.push_back({'z', c + 1});
                    wwalk.push_back({'z', c});
                    wwalk.push_back({'v', c});
                }
                out.stacks.push_back(detail::cycle_from_labels(g, wwalk));
            }
        }
    }
    return out;
}

/// Structural family route for af(G_n, M): every M-alternating square is
/// taken, then the best compatible augmentation by alternating L_k / W_r
/// peripheries is added (the only non-square cycle shapes an optimal
/// compatible set can use).
inline int antiforcing_number_structural(const PolyominoGraph& g, const Matching& m) {
    if (!g.is_family())
        throw WrongFamily("antiforcing_number_structural: requires a family graph");
    SegmentCycleCatalog catalog = segment_cycle_catalog(g);

    std::vector<AlternatingCycle> squares;
    for (auto& s : catalog.squares)
        if (detail::cycle_is_alternating(m, s)) squares.push_back(std::move(s));

    std::vector<AlternatingCycle> candidates;
    auto consider = [&](AlternatingCycle& c) {
        if (!detail::cycle_is_alternating(m, c)) return;
        for (const auto& s : squares)
            if (!are_compatible(g, m, c, s)) return;
        candidates.push_back(std::move(c));
    };
    for (auto& c : catalog.chains) consider(c);
    for (auto& c : catalog.stacks) consider(c);

    int extra = max_pairwise_subset(static_cast<int>(candidates.size()), [&](int i, int j) {
        return are_compatible(g, m, candidates[static_cast<std::size_t>(i)],
                              candidates[static_cast<std::size_t>(j)]);
    });
    return static_cast<int>(squares.size()) + extra;
}

/// Anti-forcing polynomial by enumeration: sum of x^{af(G,M)} over all
/// perfect matchings. Structural route on family graphs, compatible-set
/// route otherwise.
inline IntPolynomial antiforcing_polynomial_enum(const PolyominoGraph& g, int threads = 1,
                                                 int max_edges = kDefaultCycleEdgeBound) {
    auto matchings = enumerate_perfect_matchings(g);
    if (g.is_family())
        return accumulate_exponent_polynomial(
            matchings, [&](const Matching& m) { return antiforcing_number_structural(g, m); },
            threads);
    return accumulate_exponent_polynomial(
        matchings,
        [&](const Matching& m) { return antiforcing_number_compat(g, m, max_edges); }, threads);
}

}  // namespace matchforge
