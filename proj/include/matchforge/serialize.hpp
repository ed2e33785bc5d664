#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchforge/lattice.hpp"
#include "matchforge/matching.hpp"
#include "matchforge/polynomial.hpp"
#include "matchforge/spectrum.hpp"

namespace matchforge {

using Json = nlohmann::ordered_json;

// ---- polynomial wire format ----------------------------------------------
// {"var":"x","terms":[[exponent,"decimal-coefficient"],...]} sorted by
// exponent; coefficients are decimal strings so consumers need no integer
// width assumptions.

inline Json polynomial_to_json(const IntPolynomial& p) {
    Json terms = Json::array();
    for (int e = 0; e <= p.degree(); ++e) {
        const BigInt& c = p.coeff(static_cast<std::size_t>(e));
        if (c == 0) continue;
        terms.push_back(Json::array({e, c.str()}));
    }
    return Json{{"var", "x"}, {"terms", terms}};
}

inline IntPolynomial polynomial_from_json(const Json& j) {
    IntPolynomial p;
    for (const auto& t : j.at("terms")) {
        std::size_t e = t.at(0).get<std::size_t>();
        BigInt c(t.at(1).get<std::string>());
        p.add_term(c, e);
    }
    return p;
}

inline std::string polynomial_to_csv(const IntPolynomial& p) {
    std::ostringstream os;
    os << "exponent,coefficient\n";
    for (int e = 0; e <= p.degree(); ++e) {
        const BigInt& c = p.coeff(static_cast<std::size_t>(e));
        if (c == 0) continue;
        os << e << "," << c.str() << "\n";
    }
    return os.str();
}

// ---- matchings -------------------------------------------------------------
// sorted [[id,id],...] endpoint pairs

inline Json matching_to_json(const Matching& m) {
    Json arr = Json::array();
    for (int e : m.edge_indices()) {
        auto [a, b] = m.graph().edge(e);
        arr.push_back(Json::array({a, b}));
    }
    return arr;
}

inline Matching matching_from_json(const PolyominoGraph& g, const Json& j) {
    std::vector<int> edges;
    for (const auto& pair : j) {
        int a = pair.at(0).get<int>();
        int b = pair.at(1).get<int>();
        auto e = g.edge_index(a, b);
        if (!e)
            throw std::invalid_argument("matching references a non-edge " + std::to_string(a) +
                                        "-" + std::to_string(b));
        edges.push_back(*e);
    }
    return Matching(g, std::move(edges));
}

// ---- cell lists -------------------------------------------------------------
// JSON form: [[row,col],...]. ASCII form: lines of '#' and '.'; the top text
// line is the highest row so the picture reads like the plane.

inline std::vector<Cell> cells_from_json(const Json& j) {
    std::vector<Cell> cells;
    for (const auto& c : j) cells.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    return cells;
}

inline std::vector<Cell> cells_from_ascii(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    std::vector<Cell> cells;
    const int rows = static_cast<int>(lines.size());
    for (int i = 0; i < rows; ++i) {
        const std::string& line = lines[static_cast<std::size_t>(i)];
        for (int c = 0; c < static_cast<int>(line.size()); ++c) {
            char ch = line[static_cast<std::size_t>(c)];
            if (ch == '#') cells.push_back({rows - 1 - i, c});
            else if (ch != '.' && ch != ' ')
                throw std::invalid_argument(std::string("unexpected character '") + ch +
                                            "' in ASCII cell picture");
        }
    }
    return cells;
}

inline std::vector<Cell> cells_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open cell file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
        return cells_from_json(Json::parse(text));
    return cells_from_ascii(text);
}

// ---- graphs ----------------------------------------------------------------

inline const char* kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::GFamily: return "g";
        case FamilyKind::HFamily: return "h";
        default: return "generic";
    }
}

inline Json graph_to_json(const PolyominoGraph& g) {
    Json vertices = Json::array();
    for (const auto& v : g.vertices()) {
        Json jv{{"id", v.id}, {"row", v.row}, {"col", v.col}};
        if (g.is_family()) jv["label"] = g.label(v.id);
        vertices.push_back(jv);
    }
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a, b}));
    Json faces = Json::array();
    for (const auto& f : g.faces()) {
        Json jf{{"vertices", f.vertices}, {"cell", Json::array({f.band, f.left_col})}};
        if (!f.name.empty()) jf["name"] = f.name;
        faces.push_back(jf);
    }
    Json j{{"kind", kind_name(g.kind())}};
    if (g.family_n()) j["n"] = *g.family_n();
    j["vertex_count"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    j["face_count"] = g.face_count();
    j["vertices"] = vertices;
    j["edges"] = edges;
    j["faces"] = faces;
    return j;
}

inline Json spectrum_to_json(const SpectrumReport& r) {
    Json counts = Json::array();
    for (const auto& [value, count] : r.counts)
        counts.push_back(Json::array({value, count.str()}));
    Json j;
    j["min"] = r.min ? Json(*r.min) : Json(nullptr);
    j["max"] = r.max ? Json(*r.max) : Json(nullptr);
    j["contiguous"] = r.contiguous;
    j["total"] = r.total.str();
    j["counts"] = counts;
    return j;
}

inline std::string spectrum_to_csv(const SpectrumReport& r) {
    std::ostringstream os;
    os << "value,count\n";
    for (const auto& [value, count] : r.counts) os << value << "," << count.str() << "\n";
    return os.str();
}

// ---- result cache -----------------------------------------------------------
// Flat JSON file mapping a deterministic key to the exact payload that was
// emitted; a hit must be byte-identical to recomputation.

class ResultCache {
public:
    explicit ResultCache(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (in) {
            try {
                root_ = Json::parse(in);
            } catch (const Json::parse_error&) {
                root_ = Json::object();
            }
        }
        if (!root_.is_object()) root_ = Json::object();
    }

    std::optional<std::string> lookup(const std::string& key) const {
        if (!root_.contains(key)) return std::nullopt;
        return root_.at(key).at("payload").get<std::string>();
    }

    void store(const std::string& key, const std::string& payload, std::int64_t timestamp) {
        root_[key] = Json{{"payload", payload}, {"stored_at", timestamp}};
    }

    void save() const {
        std::ofstream out(path_);
        out << root_.dump(1) << "\n";
    }

private:
    std::string path_;
    Json root_ = Json::object();
};

}  // namespace matchforge
