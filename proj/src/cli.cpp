#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "berge/constructions.hpp"
#include "berge/io.hpp"

namespace berge {
namespace cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParameterError("cannot write '" + out_path + "'");
    f << text;
}

void emit_report(const json& j, const std::string& out_path, std::ostream& out) {
    emit_text(j.dump(2) + "\n", out_path, out);
}

// C5 / P4 / K3 / S4 (star, 4 leaves) / M2 (matching, 2 edges), or the path
// of a 2-uniform edge-list file
PatternGraph pattern_from_arg(const std::string& arg) {
    if (arg.size() >= 2) {
        char c = arg[0];
        bool digits = true;
        for (size_t i = 1; i < arg.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(arg[i]))) digits = false;
        if (digits && (c == 'C' || c == 'P' || c == 'K' || c == 'S' || c == 'M')) {
            int k = std::stoi(arg.substr(1));
            switch (c) {
                case 'C': return cycle_graph(k);
                case 'P': return path_graph(k);
                case 'K': return complete_graph(k);
                case 'S': return star_graph(k);
                default: return matching_graph(k);
            }
        }
    }
    Hypergraph g = parse_hypergraph(read_file(arg));
    if (g.r() != 2) throw UniformityError("pattern file must be 2-uniform, got r=" +
                                          std::to_string(g.r()));
    return PatternGraph(std::move(g));
}

std::string emit_partition(const Partition& p) {
    std::ostringstream out;
    out << p.k << ' ' << p.size() << '\n';
    for (int i = 0; i < p.size(); ++i) {
        if (i) out << ' ';
        out << p.part[static_cast<size_t>(i)];
    }
    out << '\n';
    return out.str();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Berge pattern workbench: detection, peeling, class bounds, extremal search"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--seed", cfg.seed, "seed for the randomized partition search");

    int status = 0;
    std::string out_path;

    // detect
    auto* detect = app.add_subcommand("detect", "look for a (induced) Berge copy of a pattern");
    std::string d_host, d_pat, d_mode = "berge", d_cert, d_expect;
    detect->add_option("--host", d_host, "host hypergraph file")->required();
    detect->add_option("--pattern", d_pat, "pattern: C5/P4/K3/S4/M2 or a file")->required();
    detect->add_option("--mode", d_mode, "berge or induced")
        ->check(CLI::IsMember({"berge", "induced"}));
    detect->add_option("--certificate", d_cert, "verify this certificate instead of searching");
    detect->add_option("--expect", d_expect, "exit 1 unless the verdict matches")
        ->check(CLI::IsMember({"present", "absent"}));
    detect->add_option("--out", out_path, "write the report here instead of stdout");
    detect->callback([&] {
        Hypergraph host = parse_hypergraph(read_file(d_host));
        PatternGraph f = pattern_from_arg(d_pat);
        bool stripped = f.has_isolated_vertices();
        PatternGraph pat = stripped ? strip_isolated(f) : f;
        if (!d_cert.empty()) {
            BergeCertificate c = certificate_from_json(json::parse(read_file(d_cert)), host);
            bool ok = verify_certificate(host, pat, c);
            json rep = report_envelope("verify-certificate", cfg);
            rep["host"] = hypergraph_json(host);
            rep["valid"] = ok;
            emit_report(rep, out_path, out);
            status = ok ? 0 : 1;
            return;
        }
        BergeMode mode = d_mode == "induced" ? BergeMode::induced : BergeMode::berge;
        auto cert = mode == BergeMode::induced ? find_induced_berge(host, f) : find_berge(host, f);
        emit_report(detect_report(host, pat, mode, cert, stripped, cfg), out_path, out);
        if (d_expect == "absent")
            status = cert ? 1 : 0;
        else
            status = cert ? 0 : 1;
    });

    // core
    auto* core = app.add_subcommand("core", "peel to the codegree core and re-check it");
    std::string c_host, c_parts;
    int c_alpha = 2;
    core->add_option("--host", c_host, "host hypergraph file")->required();
    core->add_option("--alpha", c_alpha, "codegree threshold, at least 1")->required();
    core->add_option("--parts", c_parts, "partition file enabling the trace check");
    core->add_option("--out", out_path, "write the report here instead of stdout");
    core->callback([&] {
        Hypergraph host = parse_hypergraph(read_file(c_host));
        std::optional<Partition> parts;
        if (!c_parts.empty()) parts = parse_partition(read_file(c_parts));
        CoreDecomposition d = alpha_core(host, c_alpha);
        CoreReport checks = verify_core(host, parts, d);
        emit_report(core_report(host, d, checks, cfg), out_path, out);
        status = checks.all_pass() ? 0 : 1;
    });

    // gtclass
    auto* gt = app.add_subcommand("gtclass", "list the sparse class or test membership");
    int g_t = 0, g_cap = 9;
    std::string g_pat;
    auto* g_t_opt = gt->add_option("--t", g_t, "list all members on t vertices");
    auto* g_p_opt = gt->add_option("--pattern", g_pat, "test this pattern for membership");
    g_t_opt->excludes(g_p_opt);
    gt->add_flag("--list", "emit the full member list (implied by --t)");
    gt->add_option("--cap", g_cap, "largest member order the generator may touch");
    gt->add_option("--out", out_path, "write the report here instead of stdout");
    gt->callback([&] {
        if (g_p_opt->count() > 0) {
            PatternGraph f = pattern_from_arg(g_pat);
            PatternGraph pat = f.has_isolated_vertices() ? strip_isolated(f) : f;
            auto w = is_in_gt(pat, g_cap);
            emit_report(gt_member_report(pat, w, cfg), out_path, out);
            status = w ? 0 : 1;
        } else if (g_t_opt->count() > 0) {
            emit_report(gt_list_report(g_t, generate_gt(g_t, g_cap), cfg), out_path, out);
        } else {
            throw ParameterError("gtclass needs --t or --pattern");
        }
    });

    // construct
    auto* cons = app.add_subcommand("construct", "build a named host family");
    std::string k_kind, k_host, k_parts_out;
    int k_n = 0, k_r = 0, k_t = 0, k_k = 0;
    cons->add_option("kind", k_kind, "matching|sunflower|star-clique|multipartite|lift|extract")
        ->required()
        ->check(CLI::IsMember(
            {"matching", "sunflower", "star-clique", "multipartite", "lift", "extract"}));
    cons->add_option("--n", k_n, "vertex count");
    cons->add_option("--r", k_r, "uniformity");
    cons->add_option("--t", k_t, "pattern order for star-clique");
    cons->add_option("--k", k_k, "part count for multipartite");
    cons->add_option("--host", k_host, "input hypergraph for lift/extract");
    cons->add_option("--parts-out", k_parts_out, "where extract writes the partition");
    cons->add_option("--out", out_path, "write the hypergraph here instead of stdout");
    cons->callback([&] {
        if (k_kind == "matching") {
            emit_text(emit_hypergraph(matching_construction(k_n, k_r)), out_path, out);
        } else if (k_kind == "sunflower") {
            emit_text(emit_hypergraph(sunflower_construction(k_n, k_r)), out_path, out);
        } else if (k_kind == "star-clique") {
            emit_text(emit_hypergraph(star_clique_construction(k_n, k_r, k_t)), out_path, out);
        } else if (k_kind == "multipartite") {
            int parts = k_k > 0 ? k_k : k_r;
            emit_text(emit_hypergraph(complete_multipartite_construction(k_n, k_r, parts)),
                      out_path, out);
            if (!k_parts_out.empty())
                emit_text(emit_partition(balanced_partition(k_n, parts)), k_parts_out, out);
        } else if (k_kind == "lift") {
            Hypergraph h = parse_hypergraph(read_file(k_host));
            emit_text(emit_hypergraph(lift_construction(h)), out_path, out);
        } else {
            Hypergraph h = parse_hypergraph(read_file(k_host));
            RPartiteExtraction ex = extract_r_partite(h, cfg.seed);
            std::string text = "# tries " + std::to_string(ex.tries) + "\n" +
                               emit_hypergraph(ex.sub);
            emit_text(text, out_path, out);
            if (!k_parts_out.empty()) emit_text(emit_partition(ex.parts), k_parts_out, out);
        }
    });

    // search
    auto* search = app.add_subcommand("search", "exact extremal values with witnesses");
    std::string s_problem, s_pat, s_tier = "auto";
    int s_n = 0, s_r = 3, s_s = 2;
    bool s_all = false, s_timing = false;
    std::string s_mode = "berge";
    search->add_option("--problem", s_problem, "subgraph|clique|berge|induced-berge")
        ->required()
        ->check(CLI::IsMember({"subgraph", "clique", "cliques", "berge", "induced-berge"}));
    search->add_option("--pattern", s_pat, "forbidden pattern")->required();
    search->add_option("--n", s_n, "host vertex count")->required();
    search->add_option("--r", s_r, "host uniformity for berge problems");
    search->add_option("--s", s_s, "clique size for the clique problem");
    search->add_option("--mode", s_mode, "berge or induced, for --problem berge")
        ->check(CLI::IsMember({"berge", "induced"}));
    search->add_option("--tier", s_tier, "auto|exhaustive|bb")
        ->check(CLI::IsMember({"auto", "exhaustive", "bb"}));
    search->add_flag("--all-witnesses", s_all, "collect every extremal witness");
    search->add_flag("--timing", s_timing, "include wall-clock ms in the report");
    search->add_option("--out", out_path, "write the report here instead of stdout");
    search->callback([&] {
        PatternGraph f = pattern_from_arg(s_pat);
        SearchResult res;
        BergeMode mode = BergeMode::berge;
        if (s_problem == "subgraph") {
            res = ex_clique(s_n, 2, f, cfg, s_all);
        } else if (s_problem == "clique" || s_problem == "cliques") {
            res = ex_clique(s_n, s_s, f, cfg, s_all);
        } else {
            mode = s_problem == "induced-berge" || s_mode == "induced" ? BergeMode::induced
                                                                       : BergeMode::berge;
            SearchTier tier = s_tier == "exhaustive" ? SearchTier::exhaustive
                              : s_tier == "bb"       ? SearchTier::branch_and_bound
                                                     : SearchTier::automatic;
            res = ex_berge(s_n, s_r, f, mode, cfg, s_all, tier);
        }
        emit_report(search_report(res, f, mode, cfg, s_timing), out_path, out);
    });

    // verify chain
    auto* verify = app.add_subcommand("verify", "re-check derived inequalities");
    verify->require_subcommand(1);
    auto* chain = verify->add_subcommand("chain", "inequalities between the extremal numbers");
    std::string v_pat;
    int v_n = 0, v_r = 3;
    chain->add_option("--pattern", v_pat, "forbidden pattern")->required();
    chain->add_option("--n", v_n, "host vertex count")->required();
    chain->add_option("--r", v_r, "host uniformity")->required();
    chain->add_option("--out", out_path, "write the report here instead of stdout");
    chain->callback([&] {
        PatternGraph f = pattern_from_arg(v_pat);
        BoundReport rep = verify_chain(v_n, v_r, f, cfg);
        emit_report(chain_report(rep, f, cfg), out_path, out);
        status = rep.all_pass() ? 0 : 1;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        err << "error[" << e.code << "] line " << e.line << ", column " << e.column << ": "
            << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}

}  // namespace cli
}  // namespace berge
