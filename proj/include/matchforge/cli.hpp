#pragma once

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "matchforge/antiforcing.hpp"
#include "matchforge/forcing.hpp"
#include "matchforge/formulas.hpp"
#include "matchforge/lattice.hpp"
#include "matchforge/matching.hpp"
#include "matchforge/serialize.hpp"
#include "matchforge/spectrum.hpp"
#include "matchforge/verify.hpp"

namespace matchforge {

/// Parsed invocation: which command, which graph, method and bounds, output
/// and cache configuration.
struct RunConfig {
    std::string command;
    std::string family = "g";
    int n = 1;
    std::string cells_path;
    std::string method;
    std::string out_format = "json";
    std::string cache_path;
    int threads = 1;
    int oracle_max = 2;
};

namespace cli_detail {

inline PolyominoGraph graph_from_config(const RunConfig& cfg) {
    if (!cfg.cells_path.empty()) return from_cells(cells_from_file(cfg.cells_path));
    if (cfg.n < 0) throw CLI::ValidationError("--n must be nonnegative");
    if (cfg.family == "g") return build_g(cfg.n);
    if (cfg.family == "h") return build_h(cfg.n);
    throw CLI::ValidationError("--family must be g or h");
}

inline std::optional<std::string> cache_path(const RunConfig& cfg) {
    if (!cfg.cache_path.empty()) return cfg.cache_path;
    if (const char* env = std::getenv("MATCHFORGE_CACHE"); env && *env) return std::string(env);
    return std::nullopt;
}

inline std::string cache_key(const RunConfig& cfg, const PolyominoGraph& g) {
    std::string graph_key = g.is_family()
                                ? std::string(kind_name(g.kind())) + ":" +
                                      std::to_string(g.family_n().value_or(-1))
                                : "generic:" + canonical_key(g);
    return graph_key + ":" + cfg.command + ":" + (cfg.method.empty() ? "-" : cfg.method) + ":" +
           cfg.out_format;
}

// Emit with payload caching: on a hit the stored payload is printed verbatim
// (it must byte-equal recomputation); on a miss the payload is computed,
// stored, and printed.
template <typename Compute>
void emit(const RunConfig& cfg, const PolyominoGraph* g, std::ostream& out, Compute&& compute) {
    auto path = cache_path(cfg);
    if (path && g) {
        ResultCache cache(*path);
        std::string key = cache_key(cfg, *g);
        if (auto hit = cache.lookup(key)) {
            out << *hit << "\n";
            return;
        }
        std::string payload = compute();
        cache.store(key, payload,
                    std::chrono::duration_cast<std::chrono::seconds>(
                        std::chrono::system_clock::now().time_since_epoch())
                        .count());
        cache.save();
        out << payload << "\n";
        return;
    }
    out << compute() << "\n";
}

inline IntPolynomial forcing_poly_by_method(const RunConfig& cfg, const PolyominoGraph& g) {
    const std::string method = cfg.method.empty() ? "recurrence" : cfg.method;
    if (method == "enum") return forcing_polynomial_enum(g, cfg.threads);
    if (!g.is_family())
        throw CLI::ValidationError("method '" + method + "' requires a family graph");
    if (g.kind() == FamilyKind::HFamily) {
        if (method == "recurrence") return forcing_poly_h_rec(*g.family_n());
        throw CLI::ValidationError("family h supports methods enum|recurrence");
    }
    if (method == "recurrence") return forcing_poly_g_rec(*g.family_n());
    if (method == "explicit") return forcing_poly_g_explicit(*g.family_n());
    throw CLI::ValidationError("unknown forcing-poly method: " + method);
}

inline IntPolynomial antiforcing_poly_by_method(const RunConfig& cfg, const PolyominoGraph& g) {
    const std::string method = cfg.method.empty() ? "recurrence" : cfg.method;
    if (method == "enum") return antiforcing_polynomial_enum(g, cfg.threads);
    if (method == "structural") {
        if (!g.is_family())
            throw CLI::ValidationError("method 'structural' requires a family graph");
        auto matchings = enumerate_perfect_matchings(g);
        return accumulate_exponent_polynomial(
            matchings, [&](const Matching& m) { return antiforcing_number_structural(g, m); },
            cfg.threads);
    }
    if (!g.is_family())
        throw CLI::ValidationError("method '" + method + "' requires a family graph");
    if (g.kind() == FamilyKind::HFamily) {
        if (method == "recurrence") return af_poly_h_rec(*g.family_n());
        throw CLI::ValidationError("family h supports methods enum|structural|recurrence");
    }
    if (method == "recurrence") return af_poly_g_rec(*g.family_n());
    if (method == "explicit") return af_poly_g_explicit(*g.family_n());
    throw CLI::ValidationError("unknown antiforcing-poly method: " + method);
}

inline std::string poly_payload(const RunConfig& cfg, const IntPolynomial& p) {
    if (cfg.out_format == "csv") {
        std::string csv = polynomial_to_csv(p);
        if (!csv.empty() && csv.back() == '\n') csv.pop_back();
        return csv;
    }
    return polynomial_to_json(p).dump();
}

inline Json ratio_to_json(const RatioReport& r) {
    return Json{{"n", r.n},
                {"ratio", r.value_decimal},
                {"limit", r.limit_decimal},
                {"distance", r.distance_decimal}};
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. Exit codes: 0 success,
/// 2 usage error, 3 verification failure.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
    RunConfig cfg;
    cfg.oracle_max = kDefaultAntiforcingOracleBound;
    int verify_n_max = 5;
    int verify_oracle_n_max = 2;
    bool inject_phi_fault = false;
    std::string matching_path;

    CLI::App app{"forcing and anti-forcing analysis of polyomino graphs", "matchforge"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_method) {
        cmd->add_option("--family", cfg.family, "family kind: g or h")
            ->check(CLI::IsMember({"g", "h"}));
        cmd->add_option("--n", cfg.n, "family parameter n");
        cmd->add_option("--cells", cfg.cells_path, "cell-list file (JSON pairs or ASCII picture)");
        if (with_method) cmd->add_option("--method", cfg.method, "computation route");
        cmd->add_option("--out", cfg.out_format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--cache", cfg.cache_path, "result cache file");
        cmd->add_option("--threads", cfg.threads, "worker threads for per-matching reductions")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--oracle-max", cfg.oracle_max, "size bound for definitional oracles")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* family_cmd = app.add_subcommand("family", "emit the structure of a family graph");
    add_common(family_cmd, false);
    CLI::App* poly_cmd = app.add_subcommand("poly", "ingest a cell list and emit its structure");
    add_common(poly_cmd, false);
    CLI::App* count_cmd = app.add_subcommand("count", "number of perfect matchings");
    add_common(count_cmd, true);
    CLI::App* fpoly_cmd = app.add_subcommand("forcing-poly", "forcing polynomial");
    add_common(fpoly_cmd, true);
    CLI::App* afpoly_cmd = app.add_subcommand("antiforcing-poly", "anti-forcing polynomial");
    add_common(afpoly_cmd, true);
    CLI::App* idf_cmd = app.add_subcommand("idf", "degree of freedom (sum of forcing numbers)");
    add_common(idf_cmd, false);
    CLI::App* afsum_cmd = app.add_subcommand("afsum", "sum of all anti-forcing numbers");
    add_common(afsum_cmd, false);
    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "forcing and anti-forcing spectra");
    add_common(spectrum_cmd, true);
    CLI::App* limits_cmd = app.add_subcommand("limits", "asymptotic ratios against n*Phi_n");
    add_common(limits_cmd, false);
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the cross-route verification suite");
    add_common(verify_cmd, false);
    verify_cmd->add_option("--n-max", verify_n_max, "largest n for enumeration-backed checks");
    verify_cmd->add_option("--oracle-n-max", verify_oracle_n_max,
                           "largest family index for definitional-oracle cross-checks");
    verify_cmd->add_flag("--inject-phi-fault", inject_phi_fault,
                         "self-test: break the phi recurrence by one");
    CLI::App* af_cmd = app.add_subcommand("af", "anti-forcing number of one matching");
    add_common(af_cmd, false);
    af_cmd->add_option("--matching", matching_path, "matching JSON file ([[id,id],...])")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (family_cmd->parsed() || poly_cmd->parsed()) {
            cfg.command = family_cmd->parsed() ? "family" : "poly";
            if (poly_cmd->parsed() && cfg.cells_path.empty())
                throw CLI::ValidationError("poly requires --cells");
            PolyominoGraph g = cli_detail::graph_from_config(cfg);
            Json j = graph_to_json(g);
            auto violations = validate(g);
            j["violations"] = violations;
            j["phi"] = count_perfect_matchings(g).str();
            out << j.dump() << "\n";
            return violations.empty() ? 0 : 3;
        }
        if (count_cmd->parsed()) {
            cfg.command = "count";
            PolyominoGraph g = cli_detail::graph_from_config(cfg);
            cli_detail::emit(cfg, &g, out, [&] {
                std::string phi = cfg.method == "enum"
                                      ? count_perfect_matchings_enumeration(g).str()
                                      : count_perfect_matchings(g).str();
                if (cfg.out_format == "csv") return "phi\n" + phi;
                return Json{{"phi", phi}}.dump();
            });
            return 0;
        }
        if (fpoly_cmd->parsed()) {
            cfg.command = "forcing-poly";
            PolyominoGraph g = cli_detail::graph_from_config(cfg);
            cli_detail::emit(cfg, &g, out, [&] {
                return cli_detail::poly_payload(cfg, cli_detail::forcing_poly_by_method(cfg, g));
            });
            return 0;
        }
        if (afpoly_cmd->parsed()) {
            cfg.command = "antiforcing-poly";
            PolyominoGraph g = cli_detail::graph_from_config(cfg);
            cli_detail::emit(cfg, &g, out, [&] {
                return cli_detail::poly_payload(cfg,
                                                cli_detail::antiforcing_poly_by_method(cfg, g));
            });
            return 0;
        }
        if (idf_cmd->parsed()) {
            cfg.command = "idf";
            BigInt closed = idf_closed(cfg.n);
            BigInt rec = idf_rec(cfg.n);
            BigInt poly = idf_from_poly(cfg.n);
            bool agree = closed == rec && rec == poly;
            Json j{{"n", cfg.n},
                   {"idf", closed.str()},
                   {"routes",
                    Json{{"closed_form", closed.str()},
                         {"recurrence", rec.str()},
                         {"from_poly", poly.str()}}},
                   {"routes_agree", agree}};
            out << j.dump() << "\n";
            return agree ? 0 : 3;
        }
        if (afsum_cmd->parsed()) {
            cfg.command = "afsum";
            BigInt closed = afsum_closed(cfg.n);
            BigInt poly = afsum_from_poly(cfg.n);
            bool agree = closed == poly;
            Json j{{"n", cfg.n},
                   {"afsum", closed.str()},
                   {"routes",
                    Json{{"closed_form", closed.str()}, {"from_poly", poly.str()}}},
                   {"routes_agree", agree}};
            out << j.dump() << "\n";
            return agree ? 0 : 3;
        }
        if (spectrum_cmd->parsed()) {
            cfg.command = "spectrum";
            PolyominoGraph g = cli_detail::graph_from_config(cfg);
            cli_detail::emit(cfg, &g, out, [&] {
                IntPolynomial fp = cli_detail::forcing_poly_by_method(cfg, g);
                IntPolynomial ap = cli_detail::antiforcing_poly_by_method(cfg, g);
                if (cfg.out_format == "csv") {
                    std::string csv = "kind,value,count\n";
                    for (const auto& [v, c] : make_spectrum(fp).counts)
                        csv += "forcing," + std::to_string(v) + "," + c.str() + "\n";
                    for (const auto& [v, c] : make_spectrum(ap).counts)
                        csv += "antiforcing," + std::to_string(v) + "," + c.str() + "\n";
                    csv.pop_back();
                    return csv;
                }
                return Json{{"forcing", spectrum_to_json(make_spectrum(fp))},
                            {"antiforcing", spectrum_to_json(make_spectrum(ap))}}
                    .dump();
            });
            return 0;
        }
        if (limits_cmd->parsed()) {
            cfg.command = "limits";
            int n = cfg.n > 1 ? cfg.n : 50;
            Json j{{"idf_ratio", cli_detail::ratio_to_json(ratio_idf(n))},
                   {"afsum_ratio", cli_detail::ratio_to_json(ratio_afsum(n))}};
            out << j.dump() << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            cfg.command = "verify";
            VerifyOptions opt;
            opt.n_max = verify_n_max;
            opt.oracle_n_max = verify_oracle_n_max;
            opt.threads = cfg.threads;
            opt.inject_phi_fault = inject_phi_fault;
            VerificationReport rep = verify_all(opt);
            if (cfg.out_format == "csv")
                out << rep.to_text();
            else
                out << rep.to_json().dump() << "\n";
            return rep.overall() ? 0 : 3;
        }
        if (af_cmd->parsed()) {
            cfg.command = "af";
            PolyominoGraph g = cli_detail::graph_from_config(cfg);
            std::ifstream in(matching_path);
            if (!in) throw CLI::ValidationError("cannot open matching file: " + matching_path);
            Matching m = matching_from_json(g, Json::parse(in));
            if (!m.is_perfect()) throw CLI::ValidationError("matching is not perfect");
            Json routes = Json::object();
            int compat = antiforcing_number_compat(g, m);
            routes["compat"] = compat;
            if (g.is_family()) routes["structural"] = antiforcing_number_structural(g, m);
            if (g.edge_count() - m.size() <= cfg.oracle_max)
                routes["oracle"] = antiforcing_number_oracle(g, m, cfg.oracle_max);
            Json j{{"af", compat}, {"routes", routes}};
            out << j.dump() << "\n";
            return 0;
        }
        err << "error: no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace matchforge
