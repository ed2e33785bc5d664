#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matchforge/errors.hpp"
#include "matchforge/lattice.hpp"
#include "matchforge/polynomial.hpp"

namespace matchforge {

inline constexpr int kDefaultCycleEdgeBound = 40;

/// Edge set forming a matching of a parent graph, stored as sorted edge
/// indices into the parent's edge list.
class Matching {
public:
    Matching(const PolyominoGraph& g, std::vector<int> edge_indices)
        : graph_(&g), edges_(std::move(edge_indices)) {
        std::sort(edges_.begin(), edges_.end());
    }

    const PolyominoGraph& graph() const { return *graph_; }
    const std::vector<int>& edge_indices() const { return edges_; }
    int size() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int edge_idx) const {
        return std::binary_search(edges_.begin(), edges_.end(), edge_idx);
    }

    // partner[v] = matched neighbor of v, or -1. No two member edges may
    // share a vertex; throws logic_error if they do.
    std::vector<int> partner_vector() const {
        std::vector<int> partner(static_cast<std::size_t>(graph_->vertex_count()), -1);
        for (int e : edges_) {
            auto [a, b] = graph_->edge(e);
            if (partner[static_cast<std::size_t>(a)] != -1 ||
                partner[static_cast<std::size_t>(b)] != -1)
                throw std::logic_error("matching has two edges on one vertex");
            partner[static_cast<std::size_t>(a)] = b;
            partner[static_cast<std::size_t>(b)] = a;
        }
        return partner;
    }

    bool is_perfect() const {
        auto partner = partner_vector();
        return std::find(partner.begin(), partner.end(), -1) == partner.end();
    }

    bool operator==(const Matching& o) const { return edges_ == o.edges_; }

private:
    const PolyominoGraph* graph_;
    std::vector<int> edges_;
};

/// Enumerate perfect matchings by always branching on the lowest-id
/// uncovered vertex; visits each exactly once, in a fixed order. The null
/// graph yields one empty matching.
template <typename Fn>
void for_each_perfect_matching(const PolyominoGraph& g, Fn&& fn) {
    const int nv = g.vertex_count();
    std::vector<char> covered(static_cast<std::size_t>(nv), 0);
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(nv / 2));

    auto recurse = [&](auto&& self, int scan_from) -> void {
        int v = scan_from;
        while (v < nv && covered[static_cast<std::size_t>(v)]) ++v;
        if (v == nv) {
            fn(static_cast<const std::vector<int>&>(chosen));
            return;
        }
        covered[static_cast<std::size_t>(v)] = 1;
        for (const auto& [u, eidx] : g.neighbors(v)) {
            if (covered[static_cast<std::size_t>(u)]) continue;
            covered[static_cast<std::size_t>(u)] = 1;
            chosen.push_back(eidx);
            self(self, v + 1);
            chosen.pop_back();
            covered[static_cast<std::size_t>(u)] = 0;
        }
        covered[static_cast<std::size_t>(v)] = 0;
    };
    recurse(recurse, 0);
}

inline std::vector<Matching> enumerate_perfect_matchings(const PolyominoGraph& g) {
    std::vector<Matching> out;
    for_each_perfect_matching(g, [&](const std::vector<int>& edges) {
        out.emplace_back(g, edges);
    });
    return out;
}

inline BigInt count_perfect_matchings_enumeration(const PolyominoGraph& g) {
    BigInt count{0};
    for_each_perfect_matching(g, [&](const std::vector<int>&) { ++count; });
    return count;
}

/// Phi(G_n) by the family recurrence Phi(G_n) = 6 Phi(G_{n-1}) - 4 Phi(G_{n-2})
/// with Phi(G_0) = 1, Phi(G_1) = 6.
inline BigInt phi_g_recurrence(int n) {
    if (n < 0) throw std::invalid_argument("phi_g_recurrence: n must be nonnegative");
    BigInt prev{1}, cur{6};
    if (n == 0) return prev;
    for (int i = 2; i <= n; ++i) {
        BigInt next = 6 * cur - 4 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Phi(H_n) = Phi(G_{n-1}) + 4 Phi(H_{n-1}), Phi(H_0) = 1; equivalently
/// Phi(G_n) - Phi(G_{n-1}).
inline BigInt phi_h_recurrence(int n) {
    if (n < 0) throw std::invalid_argument("phi_h_recurrence: n must be nonnegative");
    BigInt h{1};
    for (int i = 1; i <= n; ++i) h = phi_g_recurrence(i - 1) + 4 * h;
    return h;
}

/// Number of perfect matchings: recurrence fast path for the families,
/// exhaustive enumeration otherwise.
inline BigInt count_perfect_matchings(const PolyominoGraph& g) {
    if (g.kind() == FamilyKind::GFamily) return phi_g_recurrence(*g.family_n());
    if (g.kind() == FamilyKind::HFamily) return phi_h_recurrence(*g.family_n());
    return count_perfect_matchings_enumeration(g);
}

// A 4-cycle face is M-alternating iff one opposite edge pair lies in M and
// the other does not.
inline bool face_is_alternating(const PolyominoGraph& g, const Matching& m, const Face& f) {
    bool in[4];
    for (std::size_t i = 0; i < 4; ++i) {
        auto e = g.edge_index(f.vertices[i], f.vertices[(i + 1) % 4]);
        if (!e) return false;
        in[i] = m.has_edge(*e);
    }
    return (in[0] && in[2] && !in[1] && !in[3]) || (in[1] && in[3] && !in[0] && !in[2]);
}

/// Indices (into g.faces()) of the M-alternating squares.
inline std::vector<int> alternating_squares(const PolyominoGraph& g, const Matching& m) {
    std::vector<int> out;
    for (int i = 0; i < g.face_count(); ++i)
        if (face_is_alternating(g, m, g.faces()[static_cast<std::size_t>(i)])) out.push_back(i);
    return out;
}

/// Simple cycle whose edges alternate between members and non-members of an
/// associated perfect matching. The vertex walk starts at the cycle's lowest
/// vertex id and leaves it along its matched edge.
struct AlternatingCycle {
    std::vector<int> vertices;
    std::vector<int> edge_indices;  // sorted
    bool is_square = false;

    int length() const { return static_cast<int>(vertices.size()); }

    bool has_edge(int e) const {
        return std::binary_search(edge_indices.begin(), edge_indices.end(), e);
    }
};

namespace detail {

inline AlternatingCycle make_cycle(const PolyominoGraph& g, const std::vector<int>& walk) {
    AlternatingCycle c;
    c.vertices = walk;
    c.edge_indices.reserve(walk.size());
    for (std::size_t i = 0; i < walk.size(); ++i)
        c.edge_indices.push_back(g.edge_index(walk[i], walk[(i + 1) % walk.size()]).value());
    std::sort(c.edge_indices.begin(), c.edge_indices.end());
    c.is_square = walk.size() == 4;
    return c;
}

}  // namespace detail

/// All simple M-alternating cycles, in a deterministic order (shortest
/// first, then lexicographic vertex walk). Exhaustive search; graphs above
/// `max_edges` are rejected with SizeLimitExceeded.
inline std::vector<AlternatingCycle> alternating_cycles(const PolyominoGraph& g, const Matching& m,
                                                        int max_edges = kDefaultCycleEdgeBound) {
    if (g.edge_count() > max_edges)
        throw SizeLimitExceeded("alternating_cycles: graph has " +
                                std::to_string(g.edge_count()) + " edges, bound is " +
                                std::to_string(max_edges));
    std::vector<AlternatingCycle> out;
    if (g.is_null()) return out;
    auto partner = m.partner_vector();
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<int> walk;

    // Walk alternately: arrive at a vertex via its matched edge, leave via a
    // non-matching edge. Each cycle is generated once, from its lowest
    // vertex, because the first step (the matched edge) is forced.
    auto extend = [&](auto&& self, int start, int at) -> void {
        for (const auto& [t, eidx] : g.neighbors(at)) {
            if (eidx == *g.edge_index(at, partner[static_cast<std::size_t>(at)])) continue;
            if (t == start) {
                out.push_back(detail::make_cycle(g, walk));
                continue;
            }
            if (t < start || on_path[static_cast<std::size_t>(t)]) continue;
            int tp = partner[static_cast<std::size_t>(t)];
            if (tp < start || on_path[static_cast<std::size_t>(tp)]) continue;
            on_path[static_cast<std::size_t>(t)] = 1;
            on_path[static_cast<std::size_t>(tp)] = 1;
            walk.push_back(t);
            walk.push_back(tp);
            self(self, start, tp);
            walk.pop_back();
            walk.pop_back();
            on_path[static_cast<std::size_t>(t)] = 0;
            on_path[static_cast<std::size_t>(tp)] = 0;
        }
    };

    for (int v = 0; v < g.vertex_count(); ++v) {
        int p = partner[static_cast<std::size_t>(v)];
        if (p < v) continue;  // cycle must start at its own minimum
        walk = {v, p};
        on_path[static_cast<std::size_t>(v)] = 1;
        on_path[static_cast<std::size_t>(p)] = 1;
        extend(extend, v, p);
        on_path[static_cast<std::size_t>(v)] = 0;
        on_path[static_cast<std::size_t>(p)] = 0;
    }

    std::sort(out.begin(), out.end(), [](const AlternatingCycle& a, const AlternatingCycle& b) {
        if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
        return a.vertices < b.vertices;
    });
    return out;
}

/// Perfect matching obtained by toggling the cycle's edges in and out of M.
inline Matching symmetric_difference(const Matching& m, const AlternatingCycle& c) {
    std::vector<int> edges;
    for (int e : m.edge_indices())
        if (!c.has_edge(e)) edges.push_back(e);
    for (int e : c.edge_indices)
        if (!m.has_edge(e)) edges.push_back(e);
    return Matching(m.graph(), std::move(edges));
}

// ---- plane geometry on the doubled lattice ------------------------------
//
// Cycle polygons live on lattice points; doubling the coordinates lets face
// centers and edge midpoints stay integral.

enum class PointClass { Inside, Boundary, Outside };

namespace detail {

struct Polygon2x {
    // doubled coordinates (x=2*col, y=2*row) of the cycle walk
    std::vector<std::pair<long, long>> pts;

    static Polygon2x of(const PolyominoGraph& g, const AlternatingCycle& c) {
        Polygon2x poly;
        poly.pts.reserve(c.vertices.size());
        for (int v : c.vertices) {
            const auto& lv = g.vertex(v);
            poly.pts.push_back({2L * lv.col, 2L * lv.row});
        }
        return poly;
    }

    PointClass classify(long px, long py) const {
        const std::size_t n = pts.size();
        // boundary: on any axis-aligned segment
        for (std::size_t i = 0; i < n; ++i) {
            auto [x1, y1] = pts[i];
            auto [x2, y2] = pts[(i + 1) % n];
            if (x1 == x2) {
                if (px == x1 && py >= std::min(y1, y2) && py <= std::max(y1, y2))
                    return PointClass::Boundary;
            } else {
                if (py == y1 && px >= std::min(x1, x2) && px <= std::max(x1, x2))
                    return PointClass::Boundary;
            }
        }
        // even-odd rule, ray toward +x, half-open in y so that passing
        // through polygon vertices is counted consistently
        int crossings = 0;
        for (std::size_t i = 0; i < n; ++i) {
            auto [x1, y1] = pts[i];
            auto [x2, y2] = pts[(i + 1) % n];
            if (x1 != x2) continue;  // horizontal edges never cross the ray
            if (x1 <= px) continue;
            if (std::min(y1, y2) <= py && py < std::max(y1, y2)) ++crossings;
        }
        return (crossings & 1) ? PointClass::Inside : PointClass::Outside;
    }
};

}  // namespace detail

/// Faces of g whose interior lies strictly inside the cycle.
inline std::vector<int> faces_interior_to_cycle(const PolyominoGraph& g,
                                                const AlternatingCycle& c) {
    auto poly = detail::Polygon2x::of(g, c);
    std::vector<int> out;
    for (int i = 0; i < g.face_count(); ++i) {
        const Face& f = g.faces()[static_cast<std::size_t>(i)];
        if (poly.classify(2L * f.left_col + 1, 2L * f.band + 1) == PointClass::Inside)
            out.push_back(i);
    }
    return out;
}

inline bool are_disjoint(const AlternatingCycle& a, const AlternatingCycle& b) {
    for (int v : a.vertices)
        if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end()) return false;
    return true;
}

// True iff `a` has points strictly inside `b` and points strictly outside
// `b`, i.e. it passes from the exterior into the interior.
inline bool enters_interior(const PolyominoGraph& g, const AlternatingCycle& a,
                            const AlternatingCycle& b) {
    auto poly = detail::Polygon2x::of(g, b);
    bool inside = false, outside = false;
    auto note = [&](PointClass pc) {
        if (pc == PointClass::Inside) inside = true;
        if (pc == PointClass::Outside) outside = true;
    };
    const std::size_t n = a.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& v = g.vertex(a.vertices[i]);
        note(poly.classify(2L * v.col, 2L * v.row));
        const auto& w = g.vertex(a.vertices[(i + 1) % n]);
        note(poly.classify(v.col + w.col, v.row + w.row));  // edge midpoint, doubled
        if (inside && outside) return true;
    }
    return false;
}

/// Cycles are compatible when every shared edge lies in M and neither cycle
/// crosses into and out of the other's interior (nesting is allowed).
inline bool are_compatible(const PolyominoGraph& g, const Matching& m, const AlternatingCycle& a,
                           const AlternatingCycle& b) {
    std::vector<int> shared;
    std::set_intersection(a.edge_indices.begin(), a.edge_indices.end(), b.edge_indices.begin(),
                          b.edge_indices.end(), std::back_inserter(shared));
    for (int e : shared)
        if (!m.has_edge(e)) return false;
    return !enters_interior(g, a, b) && !enters_interior(g, b, a);
}

/// Largest subset of {0..count-1} whose elements satisfy `ok` pairwise.
/// Exact branch-and-bound; intended for the small candidate lists that the
/// forcing/anti-forcing searches produce. When `witness` is given it
/// receives the first maximum subset in search order.
inline int max_pairwise_subset(int count, const std::function<bool(int, int)>& ok,
                               std::vector<int>* witness = nullptr) {
    if (witness) witness->clear();
    if (count <= 0) return 0;
    std::vector<std::vector<char>> good(static_cast<std::size_t>(count),
                                        std::vector<char>(static_cast<std::size_t>(count), 0));
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            good[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                good[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
                    ok(i, j) ? 1 : 0;

    int best = 0;
    std::vector<int> chosen;
    auto recurse = [&](auto&& self, int from) -> void {
        if (static_cast<int>(chosen.size()) > best) {
            best = static_cast<int>(chosen.size());
            if (witness) *witness = chosen;
        }
        if (static_cast<int>(chosen.size()) + (count - from) <= best) return;
        for (int i = from; i < count; ++i) {
            bool fits = true;
            for (int c : chosen) {
                if (!good[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)]) {
                    fits = false;
                    break;
                }
            }
            if (!fits) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);
    return best;
}

}  // namespace matchforge
