#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "matchforge/errors.hpp"

namespace matchforge {

enum class FamilyKind { GFamily, HFamily, Generic };

/// Grid point of a polyomino graph. For the G_n/H_n families the row fixes
/// the letter of the label: row 0 = z, 1 = v, 2 = u, 3 = w; the column is
/// the label subscript.
struct LatticeVertex {
    int id = -1;
    int row = 0;
    int col = 0;
};

/// Interior face (unit cell). `band` is the cell row and `left_col` the cell
/// column of its lower-left corner; `vertices` walk the cell boundary
/// counterclockwise from that corner.
struct Face {
    std::array<int, 4> vertices{};
    int band = 0;
    int left_col = 0;
    std::string name;  // s_{k,c} / t_k for family graphs, empty otherwise
};

using Cell = std::pair<int, int>;  // (row, column) of a unit cell

/// Plane grid subgraph whose interior faces are unit squares. Immutable after
/// construction; concurrent readers are safe.
class PolyominoGraph {
public:
    PolyominoGraph() = default;

    PolyominoGraph(std::vector<LatticeVertex> vertices,
                   std::vector<std::pair<int, int>> edges,
                   std::vector<Face> faces,
                   FamilyKind kind = FamilyKind::Generic,
                   std::optional<int> n = std::nullopt)
        : vertices_(std::move(vertices)),
          edges_(std::move(edges)),
          faces_(std::move(faces)),
          kind_(kind),
          n_(n) {
        for (auto& e : edges_)
            if (e.first > e.second) std::swap(e.first, e.second);
        std::sort(edges_.begin(), edges_.end());
        adjacency_.assign(vertices_.size(), {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            edge_index_[edges_[i]] = static_cast<int>(i);
            adjacency_[static_cast<std::size_t>(edges_[i].first)].push_back(
                {edges_[i].second, static_cast<int>(i)});
            adjacency_[static_cast<std::size_t>(edges_[i].second)].push_back(
                {edges_[i].first, static_cast<int>(i)});
        }
        for (auto& adj : adjacency_)
            std::sort(adj.begin(), adj.end(),
                      [](const auto& a, const auto& b) { return a.second < b.second; });
        std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
            return std::make_pair(a.band, a.left_col) < std::make_pair(b.band, b.left_col);
        });
    }

    bool is_null() const { return vertices_.empty(); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<LatticeVertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Face>& faces() const { return faces_; }
    const LatticeVertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
    const std::pair<int, int>& edge(int idx) const { return edges_[static_cast<std::size_t>(idx)]; }

    FamilyKind kind() const { return kind_; }
    std::optional<int> family_n() const { return n_; }
    bool is_family() const { return kind_ != FamilyKind::Generic; }

    // (neighbor id, edge index) pairs, ordered by edge index.
    const std::vector<std::pair<int, int>>& neighbors(int id) const {
        return adjacency_[static_cast<std::size_t>(id)];
    }

    std::optional<int> edge_index(int a, int b) const {
        if (a > b) std::swap(a, b);
        auto it = edge_index_.find({a, b});
        if (it == edge_index_.end()) return std::nullopt;
        return it->second;
    }

    // Vertex id at a grid position, if present.
    std::optional<int> vertex_at(int row, int col) const {
        auto key = std::make_pair(row, col);
        auto lo = std::lower_bound(vertices_.begin(), vertices_.end(), key,
                                   [](const LatticeVertex& v, const std::pair<int, int>& k) {
                                       return std::make_pair(v.row, v.col) < k;
                                   });
        if (lo == vertices_.end() || lo->row != row || lo->col != col) return std::nullopt;
        return lo->id;
    }

    // Family label such as "u3"; rows map z,v,u,w from bottom to top.
    std::string label(int id) const {
        static const char* kRowLetter[4] = {"z", "v", "u", "w"};
        const auto& v = vertex(id);
        if (v.row < 0 || v.row > 3) return "p" + std::to_string(v.row) + "_" + std::to_string(v.col);
        return std::string(kRowLetter[v.row]) + std::to_string(v.col);
    }

    // Id of the family vertex with the given letter and subscript.
    std::optional<int> labelled_vertex(char letter, int j) const {
        int row = -1;
        switch (letter) {
            case 'z': row = 0; break;
            case 'v': row = 1; break;
            case 'u': row = 2; break;
            case 'w': row = 3; break;
            default: return std::nullopt;
        }
        return vertex_at(row, j);
    }

    std::optional<int> labelled_edge(char la, int ja, char lb, int jb) const {
        auto a = labelled_vertex(la, ja);
        auto b = labelled_vertex(lb, jb);
        if (!a || !b) return std::nullopt;
        return edge_index(*a, *b);
    }

private:
    std::vector<LatticeVertex> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Face> faces_;
    FamilyKind kind_ = FamilyKind::Generic;
    std::optional<int> n_;
    std::vector<std::vector<std::pair<int, int>>> adjacency_;
    std::map<std::pair<int, int>, int> edge_index_;
};

namespace detail {

// Assign dense ids in row-major order (row 0 first, columns left to right).
inline std::vector<LatticeVertex> make_vertices(std::set<std::pair<int, int>> positions) {
    std::vector<LatticeVertex> out;
    out.reserve(positions.size());
    int id = 0;
    for (const auto& [row, col] : positions) out.push_back({id++, row, col});
    return out;
}

inline int require_vertex(const std::map<std::pair<int, int>, int>& index, int row, int col) {
    return index.at({row, col});
}

}  // namespace detail

/// Build the 4n-square family graph G_n. Rows from bottom to top carry the
/// z, v, u, w vertices; u_j and v_j exist for j = 0..2n, w_j and z_j for
/// j = 1..2n. n = 0 gives the null graph.
inline PolyominoGraph build_g(int n) {
    if (n < 0) throw std::invalid_argument("build_g: n must be nonnegative");
    if (n == 0) return PolyominoGraph({}, {}, {}, FamilyKind::GFamily, 0);
    const int top = 2 * n;

    std::set<std::pair<int, int>> pos;
    for (int j = 1; j <= top; ++j) pos.insert({0, j});  // z_j
    for (int j = 0; j <= top; ++j) pos.insert({1, j});  // v_j
    for (int j = 0; j <= top; ++j) pos.insert({2, j});  // u_j
    for (int j = 1; j <= top; ++j) pos.insert({3, j});  // w_j
    auto vertices = detail::make_vertices(std::move(pos));

    std::map<std::pair<int, int>, int> at;
    for (const auto& v : vertices) at[{v.row, v.col}] = v.id;
    auto vid = [&](int row, int col) { return detail::require_vertex(at, row, col); };

    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j < top; ++j) {
        edges.push_back({vid(2, j), vid(2, j + 1)});  // u_j u_{j+1}
        edges.push_back({vid(1, j), vid(1, j + 1)});  // v_j v_{j+1}
    }
    for (int k = 1; k <= n; ++k) {
        edges.push_back({vid(3, 2 * k - 1), vid(3, 2 * k)});  // w_{2k-1} w_{2k}
        edges.push_back({vid(0, 2 * k - 1), vid(0, 2 * k)});  // z_{2k-1} z_{2k}
    }
    for (int j = 0; j <= top; ++j) edges.push_back({vid(2, j), vid(1, j)});  // u_j v_j
    for (int j = 1; j <= top; ++j) {
        edges.push_back({vid(3, j), vid(2, j)});  // w_j u_j
        edges.push_back({vid(1, j), vid(0, j)});  // v_j z_j
    }

    std::vector<Face> faces;
    auto cell = [&](int band, int left, std::string name) {
        // counterclockwise from the lower-left corner
        Face f;
        f.band = band;
        f.left_col = left;
        f.name = std::move(name);
        f.vertices = {vid(band, left), vid(band, left + 1), vid(band + 1, left + 1),
                      vid(band + 1, left)};
        faces.push_back(f);
    };
    cell(1, 0, "s_{1,1}");
    for (int k = 1; k <= n; ++k) {
        cell(2, 2 * k - 1, "s_{" + std::to_string(k) + ",2}");
        cell(1, 2 * k - 1, "s_{" + std::to_string(k) + ",3}");
        cell(0, 2 * k - 1, "s_{" + std::to_string(k) + ",4}");
        if (k < n) cell(1, 2 * k, "t_" + std::to_string(k));  // unnamed middle connector
    }

    return PolyominoGraph(std::move(vertices), std::move(edges), std::move(faces),
                          FamilyKind::GFamily, n);
}

/// Build H_n = G_n with u_0, v_0 (and their incident edges) removed.
inline PolyominoGraph build_h(int n) {
    if (n < 0) throw std::invalid_argument("build_h: n must be nonnegative");
    if (n == 0) return PolyominoGraph({}, {}, {}, FamilyKind::HFamily, 0);
    PolyominoGraph g = build_g(n);

    std::set<int> drop;
    drop.insert(*g.labelled_vertex('u', 0));
    drop.insert(*g.labelled_vertex('v', 0));

    std::vector<LatticeVertex> vertices;
    std::map<int, int> remap;
    for (const auto& v : g.vertices()) {
        if (drop.count(v.id)) continue;
        int nid = static_cast<int>(vertices.size());
        remap[v.id] = nid;
        vertices.push_back({nid, v.row, v.col});
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : g.edges()) {
        if (drop.count(a) || drop.count(b)) continue;
        edges.push_back({remap.at(a), remap.at(b)});
    }
    std::vector<Face> faces;
    for (const auto& f : g.faces()) {
        bool keep = true;
        Face nf = f;
        for (std::size_t i = 0; i < 4; ++i) {
            if (drop.count(f.vertices[i])) {
                keep = false;
                break;
            }
            nf.vertices[i] = remap.at(f.vertices[i]);
        }
        if (keep) faces.push_back(nf);
    }
    return PolyominoGraph(std::move(vertices), std::move(edges), std::move(faces),
                          FamilyKind::HFamily, n);
}

inline std::vector<std::string> validate(const PolyominoGraph& g);

/// Build a generic polyomino graph as the union of the unit-square
/// boundaries of `cells`. Throws DisconnectedCells unless the cells form an
/// edge-connected cell complex.
inline PolyominoGraph from_cells(const std::vector<Cell>& cells) {
    if (cells.empty()) throw std::invalid_argument("from_cells: empty cell set");
    std::set<Cell> cs(cells.begin(), cells.end());

    // edge-connectivity over the cell complex
    std::set<Cell> seen;
    std::queue<Cell> frontier;
    frontier.push(*cs.begin());
    seen.insert(*cs.begin());
    while (!frontier.empty()) {
        auto [r, c] = frontier.front();
        frontier.pop();
        for (const Cell& nb : {Cell{r + 1, c}, Cell{r - 1, c}, Cell{r, c + 1}, Cell{r, c - 1}}) {
            if (cs.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                frontier.push(nb);
            }
        }
    }
    if (seen.size() != cs.size()) {
        std::ostringstream os;
        os << "from_cells: cell set is not edge-connected (" << seen.size() << " of " << cs.size()
           << " reachable)";
        throw DisconnectedCells(os.str());
    }

    std::set<std::pair<int, int>> pos;
    for (const auto& [r, c] : cs) {
        pos.insert({r, c});
        pos.insert({r, c + 1});
        pos.insert({r + 1, c});
        pos.insert({r + 1, c + 1});
    }
    auto vertices = detail::make_vertices(std::move(pos));
    std::map<std::pair<int, int>, int> at;
    for (const auto& v : vertices) at[{v.row, v.col}] = v.id;

    std::set<std::pair<int, int>> edgeset;
    auto add_edge = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        edgeset.insert({a, b});
    };
    std::vector<Face> faces;
    for (const auto& [r, c] : cs) {
        int bl = at.at({r, c}), br = at.at({r, c + 1});
        int tl = at.at({r + 1, c}), tr = at.at({r + 1, c + 1});
        add_edge(bl, br);
        add_edge(br, tr);
        add_edge(tr, tl);
        add_edge(tl, bl);
        Face f;
        f.band = r;
        f.left_col = c;
        f.vertices = {bl, br, tr, tl};
        faces.push_back(f);
    }
    PolyominoGraph g(vertices, {edgeset.begin(), edgeset.end()}, std::move(faces),
                     FamilyKind::Generic, std::nullopt);
    if (auto violations = validate(g); !violations.empty())
        throw std::logic_error("from_cells: construction violated an invariant: " +
                               violations.front());
    return g;
}

// Family cell layouts, usable to cross-check build_g/build_h against
// from_cells.
inline std::vector<Cell> family_cells_g(int n) {
    std::vector<Cell> cells;
    for (int j = 0; j < 2 * n; ++j) cells.push_back({1, j});
    for (int k = 1; k <= n; ++k) {
        cells.push_back({2, 2 * k - 1});
        cells.push_back({0, 2 * k - 1});
    }
    return cells;
}

inline std::vector<Cell> family_cells_h(int n) {
    auto cells = family_cells_g(n);
    std::erase(cells, Cell{1, 0});
    return cells;
}

/// Invariant check; returns one message per violation (empty means valid).
inline std::vector<std::string> validate(const PolyominoGraph& g) {
    std::vector<std::string> out;
    auto fail = [&](const std::string& m) { out.push_back(m); };

    for (const auto& v : g.vertices())
        if (v.id < 0 || v.id >= g.vertex_count()) fail("vertex-id-out-of-range");

    for (const auto& [a, b] : g.edges()) {
        const auto& va = g.vertex(a);
        const auto& vb = g.vertex(b);
        int dr = std::abs(va.row - vb.row), dc = std::abs(va.col - vb.col);
        if (dr + dc != 1) fail("edge-not-unit-length: " + std::to_string(a) + "-" + std::to_string(b));
        if (((va.row + va.col) & 1) == ((vb.row + vb.col) & 1))
            fail("edge-violates-bipartition: " + std::to_string(a) + "-" + std::to_string(b));
    }

    // every listed face must have its four boundary edges present
    std::set<std::pair<int, int>> face_cells;
    for (const auto& f : g.faces()) {
        if (!face_cells.insert({f.band, f.left_col}).second) fail("face-duplicated");
        for (std::size_t i = 0; i < 4; ++i) {
            int a = f.vertices[i], b = f.vertices[(i + 1) % 4];
            if (!g.edge_index(a, b))
                fail("face-edge-missing: " + (f.name.empty() ? std::to_string(f.band) + "," +
                                                                   std::to_string(f.left_col)
                                                             : f.name));
        }
    }

    // polyomino graphs are connected and 2-edge-connected (no bridges)
    if (!g.is_null()) {
        const int nv = g.vertex_count();
        std::vector<int> entry(static_cast<std::size_t>(nv), -1);
        std::vector<int> low(static_cast<std::size_t>(nv), 0);
        int timer = 0, reached = 0;
        auto dfs = [&](auto&& self, int v, int parent_edge) -> void {
            entry[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = timer++;
            ++reached;
            for (const auto& [u, eidx] : g.neighbors(v)) {
                if (eidx == parent_edge) continue;
                if (entry[static_cast<std::size_t>(u)] != -1) {
                    low[static_cast<std::size_t>(v)] = std::min(
                        low[static_cast<std::size_t>(v)], entry[static_cast<std::size_t>(u)]);
                } else {
                    self(self, u, eidx);
                    low[static_cast<std::size_t>(v)] = std::min(
                        low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(u)]);
                    if (low[static_cast<std::size_t>(u)] > entry[static_cast<std::size_t>(v)])
                        fail("bridge-edge: " + std::to_string(v) + "-" + std::to_string(u));
                }
            }
        };
        dfs(dfs, 0, -1);
        if (reached != nv) fail("graph-disconnected");
    }

    // every fully-bounded unit cell must appear as a face exactly once
    for (const auto& v : g.vertices()) {
        auto bl = v.id;
        auto br = g.vertex_at(v.row, v.col + 1);
        auto tl = g.vertex_at(v.row + 1, v.col);
        auto tr = g.vertex_at(v.row + 1, v.col + 1);
        if (!br || !tl || !tr) continue;
        if (g.edge_index(bl, *br) && g.edge_index(*br, *tr) && g.edge_index(*tr, *tl) &&
            g.edge_index(*tl, bl)) {
            if (!face_cells.count({v.row, v.col}))
                fail("cell-missing-from-faces: " + std::to_string(v.row) + "," +
                     std::to_string(v.col));
        }
    }

    if (g.kind() != FamilyKind::Generic) {
        if (!g.family_n()) {
            fail("family-kind-without-n");
        } else {
            int n = *g.family_n();
            bool is_g = g.kind() == FamilyKind::GFamily;
            int ev = n == 0 ? 0 : (is_g ? 8 * n + 2 : 8 * n);
            int ee = n == 0 ? 0 : (is_g ? 12 * n + 1 : 12 * n - 2);
            int ef = n == 0 ? 0 : (is_g ? 4 * n : 4 * n - 1);
            if (g.vertex_count() != ev) fail("family-vertex-count");
            if (g.edge_count() != ee) fail("family-edge-count");
            if (g.face_count() != ef) fail("family-face-count");
        }
    }

    return out;
}

/// Translation-normalized structural key; equal keys mean the graphs are the
/// same grid subgraph up to relabeling.
inline std::string canonical_key(const PolyominoGraph& g) {
    if (g.is_null()) return "null";
    int min_row = g.vertices().front().row, min_col = g.vertices().front().col;
    for (const auto& v : g.vertices()) {
        min_row = std::min(min_row, v.row);
        min_col = std::min(min_col, v.col);
    }
    std::vector<std::array<int, 4>> norm;
    norm.reserve(g.edges().size());
    for (const auto& [a, b] : g.edges()) {
        const auto& va = g.vertex(a);
        const auto& vb = g.vertex(b);
        std::array<int, 4> ea{va.row - min_row, va.col - min_col, vb.row - min_row,
                              vb.col - min_col};
        std::array<int, 4> eb{ea[2], ea[3], ea[0], ea[1]};
        norm.push_back(std::min(ea, eb));
    }
    std::sort(norm.begin(), norm.end());
    std::ostringstream os;
    for (const auto& e : norm) os << e[0] << "," << e[1] << "-" << e[2] << "," << e[3] << ";";
    return os.str();
}

}  // namespace matchforge
