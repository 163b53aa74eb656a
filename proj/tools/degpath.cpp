// Command line front end: decide the forbidden configuration, compute or
// bound the extremal edge count, and expose the standalone formulas.
//
// Exit codes: 0 success, 1 property false (a witness was found), 2 usage or
// input error, 3 internal inconsistency.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "degpath/canonical.hpp"
#include "degpath/extremal.hpp"
#include "degpath/graph.hpp"
#include "degpath/graph6.hpp"
#include "degpath/path_finder.hpp"
#include "degpath/structure.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

int thread_count(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("DEGPATH_THREADS")) {
        int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    return 0;  // library default: hardware concurrency
}

degpath::Graph load_graph(const std::string& g6, const std::string& file) {
    std::string text = g6;
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw degpath::Error(degpath::ErrorCode::bad_args, "cannot open " + file);
        while (std::getline(in, text))
            if (!text.empty()) break;
        if (text.empty())
            throw degpath::Error(degpath::ErrorCode::malformed, "no graph6 line in " + file);
    }
    return degpath::graph6_decode(text);
}

int run_check(const degpath::Graph& g, int l) {
    auto witness = degpath::find_equal_degree_path(g, l);
    if (!witness) {
        std::cout << "AVOIDS\n";
        return kExitOk;
    }
    std::cout << "CONTAINS\n";
    for (std::size_t i = 0; i < witness->vertices.size(); ++i)
        std::cout << (i ? " " : "") << witness->vertices[i];
    std::cout << "\n";
    return kExitPropertyFalse;
}

int run_extremal(int n, int l, bool exact, const degpath::SearchConfig& cfg,
                 const std::string& out_path) {
    degpath::ExtremalReport report =
        exact ? degpath::enumerate_exact(n, l, cfg.threads) : degpath::search_lower_bound(n, l, cfg);
    std::cout << degpath::report_tsv_header() << "\n" << degpath::report_tsv_row(report) << "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw degpath::Error(degpath::ErrorCode::bad_args, "cannot write " + out_path);
        for (const auto& g6 : report.extremal_graph6) out << g6 << "\n";
    } else {
        for (const auto& g6 : report.extremal_graph6) std::cout << g6 << "\n";
    }
    std::cerr << "examined=" << report.graphs_examined << " seed=" << report.seed
              << " wall_s=" << report.wall_seconds << "\n";
    return kExitOk;
}

int run_lambda(int nu, int delta, int beta, int b, bool with_oracle) {
    degpath::LambdaParams params{nu, delta, beta, b};
    long long closed = degpath::lambda_closed(params);
    if (!with_oracle) {
        std::cout << closed << "\n";
        return kExitOk;
    }
    long long oracle = degpath::lambda_oracle(params);
    std::cout << closed << "\t" << oracle << "\n";
    if (closed != oracle) {
        std::cerr << "closed form disagrees with exhaustive maximum\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

int run_decompose(const degpath::Graph& g, int u, int v) {
    auto d = degpath::decompose(g, u, v);
    std::cout << "indicator=" << (d.adjacent ? 1 : 0) << " B=" << d.common_size()
              << " Au=" << d.only_u_size() << " Av=" << d.only_v_size()
              << " D=" << d.neither_size() << "\n";
    const int n = g.vertex_count();
    std::cout << "identity " << d.common_size() << " = " << g.degree(u) << " + " << g.degree(v)
              << " + " << d.neither_size() << " - " << n << " + "
              << 2 * (1 - (d.adjacent ? 1 : 0)) << "\n";
    return kExitOk;
}

int run_audit(const degpath::Graph& g) {
    auto report = degpath::audit_common_neighbor_bound(g);
    std::cout << "applicable=" << (report.applicable ? 1 : 0)
              << " violations=" << report.violations.size() << "\n";
    if (report.applicable && !report.violations.empty()) {
        for (const auto& t : report.violations)
            std::cerr << "violation u=" << t.u << " v=" << t.v << " w=" << t.w << "\n";
        return kExitInconsistent;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equal-degree path configuration toolkit"};
    app.require_subcommand(1);

    int threads = 0;

    // check
    auto* check = app.add_subcommand("check", "decide whether a graph avoids the configuration");
    int check_l = 0;
    std::string check_g6, check_file;
    check->add_option("--l", check_l, "path length")->required();
    auto* check_g6_opt = check->add_option("--g6", check_g6, "graph6 string");
    check->add_option("--file", check_file, "file with a graph6 line")->excludes(check_g6_opt);

    // extremal
    auto* extremal = app.add_subcommand("extremal", "exact or heuristic extremal edge count");
    int ext_l = 0, ext_n = 0;
    bool ext_exact = false, ext_search = false;
    degpath::SearchConfig cfg;
    std::string out_path;
    extremal->add_option("--l", ext_l, "path length")->required();
    extremal->add_option("--n", ext_n, "vertex count")->required();
    auto* exact_flag = extremal->add_flag("--exact", ext_exact, "exhaustive enumeration (n <= 10)");
    extremal->add_flag("--search", ext_search, "seeded hill climb")->excludes(exact_flag);
    extremal->add_option("--seed", cfg.seed, "search seed");
    extremal->add_option("--restarts", cfg.restarts, "search restarts");
    extremal->add_option("--moves", cfg.moves_per_restart, "moves per restart");
    extremal->add_option("--out", out_path, "sidecar file for graph6 lines");
    extremal->add_option("--threads", threads, "worker cap (default: hardware, or DEGPATH_THREADS)");

    // lambda
    auto* lambda = app.add_subcommand("lambda", "constrained degree-sum maximum");
    int nu = 0, delta = 0, beta = 0, b = 0;
    bool with_oracle = false;
    lambda->add_option("--nu", nu)->required();
    lambda->add_option("--delta", delta)->required();
    lambda->add_option("--beta", beta)->required();
    lambda->add_option("--b", b)->required();
    lambda->add_flag("--oracle", with_oracle, "also run the exhaustive maximization");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "pair decomposition sizes and identity");
    std::string dec_g6;
    int dec_u = 0, dec_v = 0;
    decompose->add_option("--g6", dec_g6, "graph6 string")->required();
    decompose->add_option("--u", dec_u)->required();
    decompose->add_option("--v", dec_v)->required();

    // audit-dudv
    auto* audit = app.add_subcommand("audit-dudv", "common-neighbor degree bound audit");
    std::string audit_g6, audit_file;
    auto* audit_g6_opt = audit->add_option("--g6", audit_g6, "graph6 string");
    audit->add_option("--file", audit_file, "file with a graph6 line")->excludes(audit_g6_opt);

    // gen
    auto* gen = app.add_subcommand("gen", "emit a named construction as graph6");
    std::vector<int> knm;
    int half = 0, kn = 0;
    auto* knm_opt = gen->add_option("--knm", knm, "complete bipartite sides a b")->expected(2);
    auto* half_opt = gen->add_option("--half", half, "half graph size")->excludes(knm_opt);
    gen->add_option("--kn", kn, "complete graph size")->excludes(knm_opt)->excludes(half_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*check) {
            if (check_g6.empty() && check_file.empty())
                throw degpath::Error(degpath::ErrorCode::bad_args, "check needs --g6 or --file");
            return run_check(load_graph(check_g6, check_file), check_l);
        }
        if (*extremal) {
            if (ext_exact == ext_search)
                throw degpath::Error(degpath::ErrorCode::bad_args,
                                     "extremal needs exactly one of --exact / --search");
            cfg.threads = thread_count(threads);
            return run_extremal(ext_n, ext_l, ext_exact, cfg, out_path);
        }
        if (*lambda) return run_lambda(nu, delta, beta, b, with_oracle);
        if (*decompose) return run_decompose(degpath::graph6_decode(dec_g6), dec_u, dec_v);
        if (*audit) {
            if (audit_g6.empty() && audit_file.empty())
                throw degpath::Error(degpath::ErrorCode::bad_args, "audit-dudv needs --g6 or --file");
            return run_audit(load_graph(audit_g6, audit_file));
        }
        if (*gen) {
            degpath::Graph g = !knm.empty() ? degpath::complete_bipartite(knm[0], knm[1])
                               : half > 0   ? degpath::half_graph(half)
                               : kn > 0     ? degpath::complete_graph(kn)
                                            : throw degpath::Error(degpath::ErrorCode::bad_args,
                                                                   "gen needs --knm, --half or --kn");
            std::cout << degpath::graph6_encode(g) << "\n";
            return kExitOk;
        }
    } catch (const degpath::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitUsage;
}
