#pragma once

#include <cstdint>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "matchforge/errors.hpp"
#include "matchforge/lattice.hpp"
#include "matchforge/matching.hpp"
#include "matchforge/polynomial.hpp"

namespace matchforge {

inline constexpr int kDefaultForcingOracleBound = 13;

/// Definitional forcing number: smallest S inside M contained in no other
/// perfect matching. Iterative deepening over subset sizes against the full
/// matching list. f = 0 exactly when M is the unique perfect matching.
inline int forcing_number_oracle(const PolyominoGraph& /*g*/, const Matching& m,
                                 const std::vector<Matching>& all_matchings,
                                 int max_matching_size = kDefaultForcingOracleBound) {
    const int k = m.size();
    if (k > max_matching_size)
        throw SizeLimitExceeded("forcing_number_oracle: |M| = " + std::to_string(k) +
                                ", bound is " + std::to_string(max_matching_size));
    if (k > 62) throw SizeLimitExceeded("forcing_number_oracle: |M| too large for masks");

    // For every other matching, the subset of M's edges it also uses.
    std::vector<std::uint64_t> overlap;
    overlap.reserve(all_matchings.size());
    for (const auto& other : all_matchings) {
        if (other == m) continue;
        std::uint64_t mask = 0;
        for (int i = 0; i < k; ++i)
            if (other.has_edge(m.edge_indices()[static_cast<std::size_t>(i)]))
                mask |= std::uint64_t{1} << i;
        overlap.push_back(mask);
    }
    if (overlap.empty()) return 0;

    // S forces M iff no other matching contains all of S.
    auto forcing = [&](std::uint64_t s) {
        for (std::uint64_t o : overlap)
            if ((o & s) == s) return false;
        return true;
    };
    auto search = [&](auto&& self, int size, int from, std::uint64_t s) -> bool {
        if (size == 0) return forcing(s);
        for (int i = from; i + size <= k; ++i)
            if (self(self, size - 1, i + 1, s | (std::uint64_t{1} << i))) return true;
        return false;
    };
    for (int size = 1; size <= k; ++size)
        if (search(search, size, 0, 0)) return size;
    throw std::logic_error("forcing_number_oracle: no forcing set found");
}

inline int forcing_number_oracle(const PolyominoGraph& g, const Matching& m,
                                 int max_matching_size = kDefaultForcingOracleBound) {
    return forcing_number_oracle(g, m, enumerate_perfect_matchings(g), max_matching_size);
}

namespace detail {

inline bool faces_vertex_disjoint(const PolyominoGraph& g, int fa, int fb) {
    const Face& a = g.faces()[static_cast<std::size_t>(fa)];
    const Face& b = g.faces()[static_cast<std::size_t>(fb)];
    for (int va : a.vertices)
        for (int vb : b.vertices)
            if (va == vb) return false;
    return true;
}

}  // namespace detail

/// Pairwise vertex-disjoint M-alternating squares; s(M) is its size.
struct ResonantSet {
    std::vector<int> faces;  // indices into the parent graph's face list
    int size() const { return static_cast<int>(faces.size()); }
};

/// A maximum resonant set, by exact search over the alternating squares.
inline ResonantSet maximum_resonant_set(const PolyominoGraph& g, const Matching& m) {
    auto squares = alternating_squares(g, m);
    std::vector<int> picked;
    max_pairwise_subset(
        static_cast<int>(squares.size()),
        [&](int i, int j) {
            return detail::faces_vertex_disjoint(g, squares[static_cast<std::size_t>(i)],
                                                 squares[static_cast<std::size_t>(j)]);
        },
        &picked);
    ResonantSet out;
    for (int i : picked) out.faces.push_back(squares[static_cast<std::size_t>(i)]);
    return out;
}

namespace detail {

inline int max_resonant_set(const PolyominoGraph& g, const Matching& m) {
    return maximum_resonant_set(g, m).size();
}

}  // namespace detail

/// Family shortcut f(G_n, M) = s(M): size of a maximum resonant set. Only
/// proven for the G_n/H_n families, so generic graphs are rejected.
inline int forcing_number_resonant(const PolyominoGraph& g, const Matching& m) {
    if (!g.is_family())
        throw WrongFamily("forcing_number_resonant: resonant shortcut requires a family graph");
    return detail::max_resonant_set(g, m);
}

/// f(G, M) as the maximum number of pairwise vertex-disjoint M-alternating
/// cycles (plane bipartite minimax).
inline int forcing_number_cycles(const PolyominoGraph& g, const Matching& m,
                                 int max_edges = kDefaultCycleEdgeBound) {
    auto cycles = alternating_cycles(g, m, max_edges);
    return max_pairwise_subset(static_cast<int>(cycles.size()), [&](int i, int j) {
        return are_disjoint(cycles[static_cast<std::size_t>(i)],
                            cycles[static_cast<std::size_t>(j)]);
    });
}

/// Clar number: maximum resonant-set size over all perfect matchings. Equals
/// the maximum forcing number for polyomino graphs.
inline int clar_number(const PolyominoGraph& g) {
    bool any = false;
    int best = 0;
    for_each_perfect_matching(g, [&](const std::vector<int>& edges) {
        any = true;
        best = std::max(best, detail::max_resonant_set(g, Matching(g, edges)));
    });
    if (!any) throw NoPerfectMatching("clar_number: graph has no perfect matching");
    return best;
}

/// Deterministic parallel reduction of x^{fn(M)} over a matching list. The
/// per-matching values are independent; partial polynomials merge in chunk
/// order, and exact integer addition makes the result thread-count
/// independent.
template <typename Fn>
IntPolynomial accumulate_exponent_polynomial(const std::vector<Matching>& matchings, Fn&& fn,
                                             int threads = 1) {
    if (threads <= 1 || matchings.size() < 64) {
        IntPolynomial acc;
        for (const auto& m : matchings) acc.add_term(1, static_cast<std::size_t>(fn(m)));
        return acc;
    }
    const std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                     matchings.size());
    std::vector<std::future<IntPolynomial>> parts;
    parts.reserve(chunks);
    const std::size_t per = (matchings.size() + chunks - 1) / chunks;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t lo = c * per, hi = std::min(matchings.size(), lo + per);
        parts.push_back(std::async(std::launch::async, [&, lo, hi] {
            IntPolynomial acc;
            for (std::size_t i = lo; i < hi; ++i)
                acc.add_term(1, static_cast<std::size_t>(fn(matchings[i])));
            return acc;
        }));
    }
    IntPolynomial total;
    for (auto& p : parts) total += p.get();
    return total;
}

/// Forcing polynomial by enumeration: sum of x^{f(G,M)} over all perfect
/// matchings. Uses the resonant shortcut on family graphs and the
/// disjoint-cycle route otherwise.
inline IntPolynomial forcing_polynomial_enum(const PolyominoGraph& g, int threads = 1,
                                             int max_edges = kDefaultCycleEdgeBound) {
    auto matchings = enumerate_perfect_matchings(g);
    if (g.is_family())
        return accumulate_exponent_polynomial(
            matchings, [&](const Matching& m) { return detail::max_resonant_set(g, m); },
            threads);
    return accumulate_exponent_polynomial(
        matchings, [&](const Matching& m) { return forcing_number_cycles(g, m, max_edges); },
        threads);
}

}  // namespace matchforge
