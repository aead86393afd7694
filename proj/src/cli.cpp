#include "crossint/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <random>

#include "crossint/bounds.hpp"
#include "crossint/constructions.hpp"
#include "crossint/fam_io.hpp"
#include "crossint/search.hpp"
#include "crossint/spectra.hpp"

namespace crossint {

namespace {

using nlohmann::json;

int search_cap() {
    int cap = 8;
    if (const char* env = std::getenv("CROSSINT_HARD_CAP")) {
        cap = std::atoi(env);
        if (cap < 1) cap = 1;
        if (cap > kSearchHardCap) cap = kSearchHardCap;
    }
    return cap;
}

void emit_pair(const CrossPair& p, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << encode_pair(p);
    } else {
        write_pair_file(out_path, p);
    }
}

json classification_json(const ClassificationResult& r, int ell) {
    json j;
    j["matched"] = r.matched;
    if (r.matched) {
        j["kappa"] = r.params.kappa;
        j["tau"] = r.params.tau;
        j["nprime"] = r.params.nprime;
        j["swapped"] = r.swapped;
        j["relabeling"] = r.relabeling;
        if (ell == 0) j["note"] = "extension beyond paper";
    }
    return j;
}

int cmd_construct(const std::string& kind, int n, int ell, int kappa, int tau, int nprime,
                  const std::string& variant, int k, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
    auto build = [&]() -> CrossPair {
        if (kind == "acz") return acz_pair(n, ell);
        if (kind == "canonical") return canonical_pair(CanonicalParams{n, ell, kappa, tau, nprime});
        if (kind == "matrix") {
            MatrixVariant v;
            if (variant == "omega") {
                v = MatrixVariant::OmegaFamily;
            } else if (variant == "o1") {
                v = MatrixVariant::OFamily1;
            } else if (variant == "o2") {
                v = MatrixVariant::OFamily2;
            } else {
                throw std::invalid_argument("construct: unknown variant '" + variant + "'");
            }
            MatrixFamilySpec spec =
                matrix_pair_spec(v, ell, n, k >= 0 ? std::optional<int>(k) : std::nullopt);
            return expand_matrix_pair(spec.ma, spec.mb, spec.b1, ell);
        }
        throw std::invalid_argument("construct: unknown kind '" + kind + "'");
    };
    (void)err;
    emit_pair(build(), out_path, out);
    return 0;
}

int cmd_verify(const std::string& path, bool as_json, std::ostream& out) {
    CrossPair p = read_pair_file(path);
    const bool ok = is_cross_intersecting(p);
    if (as_json) {
        json j;
        j["n"] = p.n;
        j["ell"] = p.ell;
        j["size_a"] = p.a.size();
        j["size_b"] = p.b.size();
        j["cross_intersecting"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "cross-intersecting: " << (ok ? "true" : "false") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_search(int n, int ell, const std::vector<std::string>& prune, bool all_optima, int workers,
               bool as_json, std::ostream& out, std::ostream& err) {
    if (n > search_cap()) {
        err << "search: n=" << n << " exceeds the hard cap " << search_cap()
            << " (raise CROSSINT_HARD_CAP up to " << kSearchHardCap << " at your own risk)\n";
        return 2;
    }
    SearchConfig cfg;
    cfg.prune_product = false;
    cfg.prune_dimension = false;
    for (const auto& p : prune) {
        if (p == "product") {
            cfg.prune_product = true;
        } else if (p == "dimension") {
            cfg.prune_dimension = true;
        } else if (p == "none") {
            cfg.prune_product = cfg.prune_dimension = false;
        } else {
            err << "search: unknown prune mode '" << p << "'\n";
            return 2;
        }
    }
    cfg.enumerate_all_optima = all_optima;
    cfg.worker_count = workers;
    SearchReport rep = max_product(n, ell, cfg);

    json j;
    j["n"] = n;
    j["ell"] = ell;
    j["value"] = rep.value;
    j["conjectured_max"] = nullptr;
    if (n >= 2 * ell) j["conjectured_max"] = conjectured_max(n, ell).to_int64();
    j["frankl_rodl"] = frankl_rodl_bound(n, ell).to_int64();
    j["witnesses"] = json::array();
    for (const auto& w : rep.witnesses) j["witnesses"].push_back(encode_pair(w));
    j["nodes_visited"] = rep.nodes_visited;
    j["nodes_pruned"] = rep.nodes_pruned;
    j["elapsed_ms"] = rep.elapsed.count();
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "P_" << ell << "(" << n << ") = " << rep.value << "\n";
        out << "conjectured_max: " << (n >= 2 * ell ? conjectured_max(n, ell).to_string() : "n/a") << "\n";
        out << "frankl_rodl:     " << frankl_rodl_bound(n, ell).to_string() << "\n";
        out << "witnesses: " << rep.witnesses.size() << " (canonical-minimal first)\n";
        for (const auto& w : rep.witnesses) out << encode_pair(w);
        out << "nodes visited " << rep.nodes_visited << ", pruned " << rep.nodes_pruned << ", elapsed "
            << rep.elapsed.count() << " ms\n";
    }
    return 0;
}

int cmd_bounds(int n, int ell, bool as_json, std::ostream& out) {
    json j;
    j["n"] = n;
    j["ell"] = ell;
    j["sperner"] = sperner_bound(n).to_int64();
    j["frankl_rodl"] = frankl_rodl_bound(n, ell).to_int64();
    j["conjectured_max"] = conjectured_max(n, ell).to_int64();
    j["construction_lower_bound"] = conjectured_max(n, ell).to_int64();
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "n " << n << " ell " << ell << "\n";
        out << "sperner                  " << sperner_bound(n).to_string() << "\n";
        out << "frankl_rodl              " << frankl_rodl_bound(n, ell).to_string() << "\n";
        out << "conjectured_max          " << conjectured_max(n, ell).to_string() << "\n";
        out << "construction_lower_bound " << conjectured_max(n, ell).to_string() << "\n";
    }
    return 0;
}

int cmd_analyze(const std::string& path, int b1_index, bool as_json, std::ostream& out) {
    CrossPair p = read_pair_file(path);
    auto [k, h] = span_dims(p, b1_index);
    auto [ma, mb] = dual_forms(p, b1_index);

    RowClassification rc = classify_rows(ma.matrix, SelectStrategy::MaxColumn);

    json j;
    j["n"] = p.n;
    j["k"] = k;
    j["h"] = h;
    j["k_plus_h"] = k + h;
    j["b1"] = p.b.members()[static_cast<size_t>(b1_index)].elements();
    json pivots = json::array();
    for (int c : ma.pivot_cols) pivots.push_back(c + 1);
    j["pivot_cols"] = pivots;
    j["r"] = rc.r_rows.size();
    j["s"] = rc.s_rows.size();
    j["c"] = rc.c_rows.size();
    json log = json::array();
    for (const auto& [col, rows] : rc.selection_log) {
        json entry;
        entry["column"] = ma.col_perm[static_cast<size_t>(col)] + 1;  // original element index
        json rws = json::array();
        for (int r : rows) rws.push_back(r + 1);
        entry["rows"] = rws;
        log.push_back(entry);
    }
    j["selection_log"] = log;
    if (k + h == p.n) {
        j["duality"] = duality_check(ma, mb);
    } else {
        j["duality"] = "n/a";
    }
    if (as_json) {
        out << j.dump(2) << "\n";
    } else {
        out << "n " << p.n << "  k " << k << "  h " << h << "  k+h " << (k + h) << "\n";
        out << "pivot_cols:";
        for (int c : ma.pivot_cols) out << " " << (c + 1);
        out << "\nr " << rc.r_rows.size() << "  s " << rc.s_rows.size() << "  c " << rc.c_rows.size()
            << "\n";
        out << "duality: " << (k + h == p.n ? (duality_check(ma, mb) ? "true" : "false") : "n/a") << "\n";
    }
    return 0;
}

int cmd_classify(const std::string& path, bool as_json, std::ostream& out) {
    CrossPair p = read_pair_file(path);
    ClassificationResult r = classify_extremal(p);
    if (as_json) {
        out << classification_json(r, p.ell).dump(2) << "\n";
    } else if (r.matched) {
        out << "matched: kappa=" << r.params.kappa << " tau=" << r.params.tau
            << " nprime=" << r.params.nprime << " swapped=" << (r.swapped ? "true" : "false")
            << (p.ell == 0 ? " (extension beyond paper)" : "") << "\n";
    } else {
        out << "unmatched\n";
    }
    return r.matched ? 0 : 1;
}

int cmd_selftest(uint64_t seed, std::ostream& out) {
    std::mt19937_64 rng(seed);
    int checks = 0;

    // Galois laws on random families
    for (int rep = 0; rep < 50; ++rep) {
        int n = 2 + static_cast<int>(rng() % 4);
        int ell = static_cast<int>(rng() % 3);
        std::vector<SubsetMask> ms;
        int count = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < count; ++i) ms.push_back(SubsetMask(static_cast<uint32_t>(rng() & ((1u << n) - 1))));
        Family f(n, ms);
        Family bf = beta_operator(f, ell);
        CrossPair cl = closure(f, ell);
        // f ⊆ α(β(f)) and β(α(β(f))) = β(f)
        for (const auto& m : f.members()) {
            if (!cl.a.contains(m)) return 1;
        }
        if (beta_operator(cl.a, ell) != bf) return 1;
        ++checks;
    }

    // classify_rows partition + replay on random small matrices
    for (int rep = 0; rep < 200; ++rep) {
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
        RationalMatrix m(rows, cols);
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c = 0; c < cols; ++c) m.at(r, c) = Rational(static_cast<long long>(rng() % 5) - 2);
        }
        auto rc = classify_rows(m, SelectStrategy::MaxColumn);
        if (rc.r_rows.size() + rc.s_rows.size() + rc.c_rows.size() != rows) return 1;
        std::vector<int> cols_logged;
        for (const auto& [c, rs] : rc.selection_log) cols_logged.push_back(c);
        auto replay = classify_rows_replay(m, cols_logged);
        if (replay.r_rows != rc.r_rows) return 1;
        ++checks;
    }

    // sumset inequality
    for (int rep = 0; rep < 100; ++rep) {
        std::set<Rational> a, b;
        int sa = 1 + static_cast<int>(rng() % 5), sb = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < sa; ++i) a.insert(Rational(static_cast<long long>(rng() % 19) - 9));
        for (int i = 0; i < sb; ++i) b.insert(Rational(static_cast<long long>(rng() % 19) - 9));
        if (sumset(a, b).size() + 1 < a.size() + b.size()) return 1;
        ++checks;
    }

    out << "selftest: " << checks << " checks passed (seed " << seed << ")\n";
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact search and verification lab for ell-cross-intersecting set families"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a named pair and write it as .fam");
    std::string kind, variant = "omega", out_path;
    int n = 0, ell = 0, kappa = 0, tau = 0, nprime = 0, k = -1;
    construct->add_option("--kind", kind, "acz | canonical | matrix")->required();
    construct->add_option("--n", n, "ground-set size")->required();
    construct->add_option("--ell", ell, "intersection size")->required();
    construct->add_option("--kappa", kappa);
    construct->add_option("--tau", tau);
    construct->add_option("--nprime", nprime);
    construct->add_option("--variant", variant, "omega | o1 | o2");
    construct->add_option("--k", k, "matrix-variant row count override");
    construct->add_option("-o,--output", out_path, "output file (stdout when absent)");

    // verify
    auto* verify = app.add_subcommand("verify", "check the exact-ell cross property of a pair file");
    std::string verify_path;
    bool verify_json = false;
    verify->add_option("file", verify_path)->required();
    verify->add_flag("--json", verify_json);

    // search
    auto* search = app.add_subcommand("search", "exact P_ell(n) by closed-pair enumeration");
    int s_n = 0, s_ell = 0, workers = 1;
    bool all_optima = false, search_json = false;
    std::vector<std::string> prune = {"product"};
    search->add_option("--n", s_n)->required();
    search->add_option("--ell", s_ell)->required();
    search->add_option("--prune", prune, "product | dimension | none (repeatable)");
    search->add_flag("--all-optima", all_optima);
    search->add_option("--workers", workers);
    search->add_flag("--json", search_json);

    // bounds
    auto* bounds = app.add_subcommand("bounds", "counting bounds for (n, ell)");
    int b_n = 0, b_ell = 0;
    bool bounds_json = false;
    bounds->add_option("--n", b_n)->required();
    bounds->add_option("--ell", b_ell)->required();
    bounds->add_flag("--json", bounds_json);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "span dims, echelon pivots, R/S/C rows, duality");
    std::string analyze_path;
    int b1 = 1;
    bool analyze_json = false;
    analyze->add_option("file", analyze_path)->required();
    analyze->add_option("--b1", b1, "1-based index of B1 in canonical member order");
    analyze->add_flag("--json", analyze_json);

    // classify
    auto* classify = app.add_subcommand("classify", "match a pair against the canonical extremal family");
    std::string classify_path;
    bool classify_json = false;
    classify->add_option("file", classify_path)->required();
    classify->add_flag("--json", classify_json);

    // selftest (hidden)
    auto* selftest = app.add_subcommand("selftest", "randomized property batteries");
    selftest->group("");
    uint64_t seed = 20260808;
    selftest->add_option("--seed", seed);

    std::vector<const char*> argv;
    argv.push_back("crossint");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (construct->parsed())
            return cmd_construct(kind, n, ell, kappa, tau, nprime, variant, k, out_path, out, err);
        if (verify->parsed()) return cmd_verify(verify_path, verify_json, out);
        if (search->parsed())
            return cmd_search(s_n, s_ell, prune, all_optima, workers, search_json, out, err);
        if (bounds->parsed()) return cmd_bounds(b_n, b_ell, bounds_json, out);
        if (analyze->parsed()) return cmd_analyze(analyze_path, b1 - 1, analyze_json, out);
        if (classify->parsed()) return cmd_classify(classify_path, classify_json, out);
        if (selftest->parsed()) return cmd_selftest(seed, out);
    } catch (const FamFormatError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace crossint
