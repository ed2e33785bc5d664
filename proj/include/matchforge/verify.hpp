#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "matchforge/antiforcing.hpp"
#include "matchforge/forcing.hpp"
#include "matchforge/formulas.hpp"
#include "matchforge/lattice.hpp"
#include "matchforge/matching.hpp"
#include "matchforge/serialize.hpp"
#include "matchforge/spectrum.hpp"

namespace matchforge {

/// One cross-check: a named identity evaluated on one instance by two
/// routes. Paper anchors appear as route "paper" with the published value,
/// so a failure localizes to either transcription or logic.
struct VerificationRow {
    std::string check;
    std::string instance;
    std::string route_a;
    std::string value_a;
    std::string route_b;
    std::string value_b;
    bool pass = false;
    int order = 0;  // sort key within a check (usually n)
};

struct VerificationReport {
    std::vector<VerificationRow> rows;

    bool overall() const {
        return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
    }

    void sort_rows() {
        std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.check != b.check) return a.check < b.check;
            if (a.order != b.order) return a.order < b.order;
            return a.instance < b.instance;
        });
    }

    Json to_json() const {
        Json jrows = Json::array();
        for (const auto& r : rows)
            jrows.push_back(Json{{"check", r.check},
                                 {"instance", r.instance},
                                 {"route_a", r.route_a},
                                 {"value_a", r.value_a},
                                 {"route_b", r.route_b},
                                 {"value_b", r.value_b},
                                 {"pass", r.pass}});
        return Json{{"overall_pass", overall()}, {"rows", jrows}};
    }

    std::string to_text() const {
        std::ostringstream os;
        for (const auto& r : rows)
            os << (r.pass ? "PASS" : "FAIL") << "  " << r.check << "  [" << r.instance << "]  "
               << r.route_a << "=" << r.value_a << "  " << r.route_b << "=" << r.value_b << "\n";
        os << (overall() ? "ALL CHECKS PASSED" : "CHECKS FAILED") << "\n";
        return os.str();
    }
};

struct VerifyOptions {
    int n_max = 5;
    int oracle_n_max = 2;
    int threads = 1;
    // self-test hook: perturbs the Phi recurrence route by one, which must
    // surface as failing "phi recurrence vs closed form" rows
    bool inject_phi_fault = false;
};

namespace detail {

inline void add_row(VerificationReport& rep, std::string check, int n, std::string route_a,
                    std::string value_a, std::string route_b, std::string value_b) {
    VerificationRow row;
    row.check = std::move(check);
    row.instance = "n=" + std::to_string(n);
    row.pass = value_a == value_b;
    row.route_a = std::move(route_a);
    row.value_a = std::move(value_a);
    row.route_b = std::move(route_b);
    row.value_b = std::move(value_b);
    row.order = n;
    rep.rows.push_back(std::move(row));
}

}  // namespace detail

/// Run every cross-route identity and paper anchor at desk scale.
/// Enumeration-backed checks stop at n_max; the definitional oracles stop at
/// oracle_n_max; closed-form/recurrence sweeps always run to n = 50.
inline VerificationReport verify_all(const VerifyOptions& opt = {}) {
    VerificationReport rep;
    const int n_max = std::max(0, opt.n_max);
    const int oracle_max = std::max(0, opt.oracle_n_max);

    // Phi paper anchors against enumeration
    const char* phi_anchor[4] = {"1", "6", "32", "168"};
    for (int n = 0; n <= std::min(3, n_max); ++n)
        detail::add_row(rep, "phi anchors", n, "enumeration",
                        count_perfect_matchings_enumeration(build_g(n)).str(), "paper",
                        phi_anchor[n]);

    // null-graph conventions
    detail::add_row(rep, "null graph conventions", 0, "forcing_poly(G_0)",
                    forcing_poly_g_rec(0).to_string(), "paper", "1");
    detail::add_row(rep, "null graph conventions", 0, "antiforcing_poly(G_0)",
                    af_poly_g_rec(0).to_string(), "paper", "1");

    // recurrence vs closed form, exact to n = 50 (independent of n_max so
    // the self-test fault always has rows to trip)
    for (int n = 0; n <= 50; ++n) {
        BigInt rec = phi_g_recurrence(n);
        if (opt.inject_phi_fault && n >= 2) rec += 1;
        detail::add_row(rep, "phi recurrence vs closed form", n, "recurrence", rec.str(),
                        "closed form", phi_closed(n).str());
    }

    for (int n = 0; n <= n_max; ++n) {
        detail::add_row(rep, "phi enumeration vs recurrence", n, "enumeration",
                        count_perfect_matchings_enumeration(build_g(n)).str(), "recurrence",
                        phi_g_recurrence(n).str());
        detail::add_row(rep, "phi_h enumeration vs recurrence", n, "enumeration",
                        count_perfect_matchings_enumeration(build_h(n)).str(), "recurrence",
                        phi_h_recurrence(n).str());
    }

    // forcing polynomial: anchors, then route triangle
    if (n_max >= 1)
        detail::add_row(rep, "forcing poly anchors", 1, "enumeration",
                        forcing_polynomial_enum(build_g(1), opt.threads).to_string(), "paper",
                        "4x^2 + 2x");
    if (n_max >= 2)
        detail::add_row(rep, "forcing poly anchors", 2, "enumeration",
                        forcing_polynomial_enum(build_g(2), opt.threads).to_string(), "paper",
                        "16x^4 + 12x^3 + 4x^2");
    for (int n = 0; n <= n_max; ++n) {
        detail::add_row(rep, "forcing poly enum vs recurrence", n, "enumeration",
                        forcing_polynomial_enum(build_g(n), opt.threads).to_string(),
                        "recurrence", forcing_poly_g_rec(n).to_string());
        detail::add_row(rep, "forcing poly recurrence vs explicit", n, "recurrence",
                        forcing_poly_g_rec(n).to_string(), "explicit",
                        forcing_poly_g_explicit(n).to_string());
        detail::add_row(rep, "forcing poly H enum vs recurrence", n, "enumeration",
                        forcing_polynomial_enum(build_h(n), opt.threads).to_string(),
                        "recurrence", forcing_poly_h_rec(n).to_string());
        detail::add_row(rep, "poly value at 1 vs phi", n, "F(G_n,1)",
                        forcing_poly_g_rec(n).eval_one().str(), "phi",
                        phi_g_recurrence(n).str());
    }

    // anti-forcing polynomial
    if (n_max >= 1)
        detail::add_row(rep, "antiforcing poly anchors", 1, "enumeration",
                        antiforcing_polynomial_enum(build_g(1), opt.threads).to_string(),
                        "paper", "2x^3 + 3x^2 + x");
    if (n_max >= 2)
        detail::add_row(rep, "antiforcing poly anchors", 2, "enumeration",
                        antiforcing_polynomial_enum(build_g(2), opt.threads).to_string(),
                        "paper", "4x^6 + 9x^5 + 15x^4 + 3x^3 + x^2");
    for (int n = 0; n <= n_max; ++n) {
        detail::add_row(rep, "antiforcing poly enum vs recurrence", n, "enumeration",
                        antiforcing_polynomial_enum(build_g(n), opt.threads).to_string(),
                        "recurrence", af_poly_g_rec(n).to_string());
        detail::add_row(rep, "antiforcing poly recurrence vs explicit", n, "recurrence",
                        af_poly_g_rec(n).to_string(), "explicit",
                        af_poly_g_explicit(n).to_string());
        detail::add_row(rep, "antiforcing poly H enum vs recurrence", n, "enumeration",
                        antiforcing_polynomial_enum(build_h(n), opt.threads).to_string(),
                        "recurrence", af_poly_h_rec(n).to_string());
        detail::add_row(rep, "antiforcing value at 1 vs phi", n, "Af(G_n,1)",
                        af_poly_g_rec(n).eval_one().str(), "phi", phi_g_recurrence(n).str());
    }

    // class decomposition of the anti-forcing sum
    for (int n = 1; n <= std::min(4, n_max); ++n) {
        IntPolynomial sum;
        for (const auto& term : af_decomposition_terms(n)) sum += term.poly;
        detail::add_row(rep, "antiforcing class decomposition", n, "class sum", sum.to_string(),
                        "recurrence", af_poly_g_rec(n).to_string());
    }

    // definitional oracles against the fast routes, every matching
    for (int n = 1; n <= oracle_max; ++n) {
        for (bool h_family : {false, true}) {
            PolyominoGraph g = h_family ? build_h(n) : build_g(n);
            auto matchings = enumerate_perfect_matchings(g);
            int f_bad = 0, af_bad = 0;
            for (const auto& m : matchings) {
                int f_o = forcing_number_oracle(g, m, matchings);
                int f_r = forcing_number_resonant(g, m);
                int f_c = forcing_number_cycles(g, m);
                if (!(f_o == f_r && f_r == f_c)) ++f_bad;
                int a_o = antiforcing_number_oracle(g, m);
                int a_c = antiforcing_number_compat(g, m);
                int a_s = antiforcing_number_structural(g, m);
                if (!(a_o == a_c && a_c == a_s)) ++af_bad;
            }
            std::string inst = std::string(h_family ? "H_" : "G_") + std::to_string(n) + " (" +
                               std::to_string(matchings.size()) + " matchings)";
            VerificationRow row;
            row.check = "forcing oracle vs resonant vs cycles";
            row.instance = inst;
            row.route_a = "mismatches";
            row.value_a = std::to_string(f_bad);
            row.route_b = "expected";
            row.value_b = "0";
            row.pass = f_bad == 0;
            row.order = n * 2 + (h_family ? 1 : 0);
            rep.rows.push_back(row);
            row.check = "antiforcing oracle vs compat vs structural";
            row.value_a = std::to_string(af_bad);
            row.pass = af_bad == 0;
            rep.rows.push_back(row);
        }
    }

    // degree of freedom and anti-forcing sum: route agreement to 50, anchors
    const char* idf_anchor[5] = {"5948", "38908", "244348", "1492092", "8926204"};
    const char* afsum_anchor[5] = {"7721", "50541", "317565", "1939901", "11608381"};
    for (int n = 4; n <= 8; ++n) {
        detail::add_row(rep, "idf anchors", n, "closed form", idf_closed(n).str(), "paper",
                        idf_anchor[n - 4]);
        detail::add_row(rep, "afsum anchors", n, "closed form", afsum_closed(n).str(), "paper",
                        afsum_anchor[n - 4]);
    }
    for (int n = 0; n <= 50; ++n) {
        std::string from_poly = idf_from_poly(n).str();
        detail::add_row(rep, "idf routes", n, "from_poly", from_poly, "recurrence",
                        idf_rec(n).str());
        detail::add_row(rep, "idf routes closed", n, "from_poly", from_poly, "closed form",
                        idf_closed(n).str());
        detail::add_row(rep, "afsum routes", n, "from_poly", afsum_from_poly(n).str(),
                        "closed form", afsum_closed(n).str());
    }

    // spectra
    for (int n = 1; n <= n_max; ++n) {
        auto fs = make_spectrum(forcing_poly_g_rec(n));
        std::ostringstream got, want;
        got << (fs.min ? std::to_string(*fs.min) : "-") << ".."
            << (fs.max ? std::to_string(*fs.max) : "-") << (fs.contiguous ? "" : " gapped");
        want << n << ".." << 2 * n;
        detail::add_row(rep, "forcing spectrum", n, "computed", got.str(), "paper interval",
                        want.str());
        auto as = make_spectrum(af_poly_g_rec(n));
        std::ostringstream agot, awant;
        agot << (as.min ? std::to_string(*as.min) : "-") << ".."
             << (as.max ? std::to_string(*as.max) : "-") << (as.contiguous ? "" : " gapped");
        awant << n << ".." << 3 * n;
        detail::add_row(rep, "antiforcing spectrum", n, "computed", agot.str(), "paper interval",
                        awant.str());
    }

    // Clar number = maximum forcing number = 2n
    for (int n = 1; n <= std::min({4, n_max}); ++n) {
        PolyominoGraph g = build_g(n);
        int cl = clar_number(g);
        detail::add_row(rep, "clar number", n, "clar", std::to_string(cl), "paper 2n",
                        std::to_string(2 * n));
        auto spectrum = make_spectrum(forcing_polynomial_enum(g, opt.threads));
        detail::add_row(rep, "clar equals max forcing", n, "max forcing",
                        spectrum.max ? std::to_string(*spectrum.max) : "-", "clar",
                        std::to_string(cl));
    }

    // alternating-cycle interior face property, and f <= af per matching
    for (int n = 1; n <= std::min(3, n_max); ++n) {
        PolyominoGraph g = build_g(n);
        auto matchings = enumerate_perfect_matchings(g);
        int bad_interior = 0, bad_order = 0, cycles_seen = 0;
        for (const auto& m : matchings) {
            for (const auto& c : alternating_cycles(g, m)) {
                ++cycles_seen;
                bool found = false;
                for (int f : faces_interior_to_cycle(g, c)) {
                    if (face_is_alternating(g, m, g.faces()[static_cast<std::size_t>(f)])) {
                        found = true;
                        break;
                    }
                }
                if (!found) ++bad_interior;
            }
            if (forcing_number_resonant(g, m) > antiforcing_number_structural(g, m)) ++bad_order;
        }
        detail::add_row(rep, "alternating cycle interior face", n,
                        "violations among " + std::to_string(cycles_seen) + " cycles",
                        std::to_string(bad_interior), "expected", "0");
        detail::add_row(rep, "forcing <= antiforcing", n, "violations",
                        std::to_string(bad_order), "expected", "0");
    }

    // cache payload round-trip must be byte-identical
    {
        std::string payload = polynomial_to_json(af_poly_g_rec(std::max(1, n_max))).dump();
        ResultCache cache("");  // in-memory use only; never saved
        cache.store("selftest", payload, 0);
        auto back = cache.lookup("selftest");
        detail::add_row(rep, "cache round-trip", std::max(1, n_max), "stored",
                        std::to_string(payload.size()) + "B",
                        "loaded byte-equal", back && *back == payload ?
                        std::to_string(back->size()) + "B" : "mismatch");
    }

    rep.sort_rows();
    return rep;
}

}  // namespace matchforge
