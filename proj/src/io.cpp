#include "berge/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace berge {

namespace {

struct Token {
    std::string text;
    int line;
    int column;  // 1-based offset of the first character
};

struct Line {
    std::vector<Token> tokens;
    int number;
};

// content lines only; '#' lines and blank lines are dropped here
std::vector<Line> content_lines(const std::string& text) {
    std::vector<Line> out;
    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Line line;
        line.number = lineno;
        size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
            line.tokens.push_back({raw.substr(i, j - i), lineno, static_cast<int>(i) + 1});
            i = j;
        }
        if (line.tokens.empty()) continue;
        if (line.tokens.front().text[0] == '#') continue;
        out.push_back(std::move(line));
    }
    return out;
}

long long int_token(const Token& tok, const char* code) {
    const std::string& s = tok.text;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) throw ParseError(code, tok.line, tok.column, "expected an integer, got '" + s + "'");
    for (size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError(code, tok.line, tok.column, "expected an integer, got '" + s + "'");
    if (s.size() > 12)
        throw ParseError(code, tok.line, tok.column, "integer out of range: '" + s + "'");
    return std::stoll(s);
}

}  // namespace

Hypergraph parse_hypergraph(const std::string& text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError("unexpected-eof", 0, 0, "missing header line");

    const Line& head = lines[0];
    if (head.tokens.size() != 3)
        throw ParseError("bad-header", head.number, head.tokens[0].column,
                         "header must be 'r n m'");
    long long r = int_token(head.tokens[0], "bad-header");
    long long n = int_token(head.tokens[1], "bad-header");
    long long m = int_token(head.tokens[2], "bad-header");
    if (r < 1 || r > 64)
        throw ParseError("bad-header", head.number, head.tokens[0].column,
                         "uniformity must be in 1..64");
    if (n < 0 || n > 1000000)
        throw ParseError("bad-header", head.number, head.tokens[1].column,
                         "vertex count must be in 0..1000000");
    if (m < 0 || m > 1000000)
        throw ParseError("bad-header", head.number, head.tokens[2].column,
                         "edge count must be in 0..1000000");

    std::vector<VertexSet> edges;
    std::set<std::vector<int>> seen;
    for (long long e = 0; e < m; ++e) {
        size_t li = static_cast<size_t>(e) + 1;
        if (li >= lines.size())
            throw ParseError("unexpected-eof", lines.back().number, 0,
                             "expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(e));
        const Line& line = lines[li];
        if (static_cast<long long>(line.tokens.size()) != r)
            throw ParseError("wrong-arity", line.number, line.tokens[0].column,
                             "edge line has " + std::to_string(line.tokens.size()) +
                                 " vertices, uniformity is " + std::to_string(r));
        std::vector<int> ids;
        for (const Token& tok : line.tokens) {
            long long v = int_token(tok, "bad-token");
            if (v < 1 || v > n)
                throw ParseError("vertex-range", tok.line, tok.column,
                                 "vertex " + tok.text + " outside 1.." + std::to_string(n));
            for (int prev : ids)
                if (prev == v)
                    throw ParseError("duplicate-vertex", tok.line, tok.column,
                                     "vertex " + tok.text + " repeated in one edge");
            ids.push_back(static_cast<int>(v));
        }
        std::sort(ids.begin(), ids.end());
        if (!seen.insert(ids).second)
            throw ParseError("duplicate-edge", line.number, line.tokens[0].column,
                             "edge repeats an earlier one");
        edges.push_back(VertexSet{std::move(ids)});
    }
    if (lines.size() > static_cast<size_t>(m) + 1) {
        const Line& extra = lines[static_cast<size_t>(m) + 1];
        throw ParseError("trailing-content", extra.number, extra.tokens[0].column,
                         "content after the last edge line");
    }
    return Hypergraph(static_cast<int>(r), static_cast<int>(n), std::move(edges));
}

std::string emit_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    out << h.r() << ' ' << h.n() << ' ' << h.m() << '\n';
    for (const VertexSet& e : h.edges()) {
        bool first = true;
        for (int v : e.vertices()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

Partition parse_partition(const std::string& text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError("unexpected-eof", 0, 0, "missing header line");

    const Line& head = lines[0];
    if (head.tokens.size() != 2)
        throw ParseError("bad-header", head.number, head.tokens[0].column,
                         "header must be 'k n'");
    long long k = int_token(head.tokens[0], "bad-header");
    long long n = int_token(head.tokens[1], "bad-header");
    if (k < 1 || k > 1000000)
        throw ParseError("bad-header", head.number, head.tokens[0].column,
                         "part count must be positive");
    if (n < 0 || n > 1000000)
        throw ParseError("bad-header", head.number, head.tokens[1].column,
                         "vertex count must be in 0..1000000");

    std::vector<int> part;
    for (size_t li = 1; li < lines.size(); ++li) {
        for (const Token& tok : lines[li].tokens) {
            if (static_cast<long long>(part.size()) == n)
                throw ParseError("trailing-content", tok.line, tok.column,
                                 "content after the last part id");
            long long p = int_token(tok, "bad-token");
            if (p < 1 || p > k)
                throw ParseError("part-range", tok.line, tok.column,
                                 "part " + tok.text + " outside 1.." + std::to_string(k));
            part.push_back(static_cast<int>(p));
        }
    }
    if (static_cast<long long>(part.size()) < n)
        throw ParseError("unexpected-eof", lines.back().number, 0,
                         "expected " + std::to_string(n) + " part ids, got " +
                             std::to_string(part.size()));
    return Partition(static_cast<int>(k), std::move(part));
}

json config_json(const Config& cfg) {
    json caps;
    caps["chromatic"] = cfg.caps.chromatic;
    caps["gt"] = cfg.caps.gt;
    caps["clique_n_pairs"] = cfg.caps.clique_n_pairs;
    caps["clique_n"] = cfg.caps.clique_n;
    caps["berge_exhaustive"] = cfg.caps.berge_exhaustive;
    caps["berge_branch_bound"] = cfg.caps.berge_branch_bound;
    json j;
    j["seed"] = cfg.seed;
    j["caps"] = std::move(caps);
    return j;
}

static json edge_list_json(const std::vector<VertexSet>& edges) {
    json arr = json::array();
    for (const VertexSet& e : edges) arr.push_back(e.vertices());
    return arr;
}

json hypergraph_json(const Hypergraph& h) {
    json j;
    j["r"] = h.r();
    j["n"] = h.n();
    j["m"] = h.m();
    j["edges"] = edge_list_json(h.edges());
    return j;
}

static json pattern_json(const PatternGraph& f) {
    json j;
    j["t"] = f.t();
    j["q"] = f.q();
    json arr = json::array();
    for (auto [a, b] : f.edge_pairs()) arr.push_back(json::array({a, b}));
    j["edges"] = std::move(arr);
    return j;
}

static const char* mode_name(BergeMode mode) {
    return mode == BergeMode::berge ? "berge" : "induced";
}

json certificate_json(const BergeCertificate& c, const Hypergraph& host) {
    json j;
    j["mode"] = mode_name(c.mode);
    j["base"] = c.base;
    j["edge_indices"] = c.edges;
    json arr = json::array();
    for (int i : c.edges) {
        if (i < 0 || i >= host.m()) throw ParameterError("certificate edge index out of range");
        arr.push_back(host.edge(i).vertices());
    }
    j["edges"] = std::move(arr);
    return j;
}

BergeCertificate certificate_from_json(const json& j, const Hypergraph& host) {
    BergeCertificate c;
    std::string mode = j.at("mode").get<std::string>();
    if (mode == "berge")
        c.mode = BergeMode::berge;
    else if (mode == "induced")
        c.mode = BergeMode::induced;
    else
        throw ParameterError("unknown certificate mode '" + mode + "'");
    c.base = j.at("base").get<std::vector<int>>();
    if (j.contains("edge_indices")) {
        c.edges = j.at("edge_indices").get<std::vector<int>>();
    } else {
        for (const json& e : j.at("edges")) {
            VertexSet s{e.get<std::vector<int>>()};
            int idx = host.edge_index(s);
            if (idx < 0) throw ParameterError("certificate edge " + s.str() + " not in the host");
            c.edges.push_back(idx);
        }
    }
    return c;
}

json report_envelope(const std::string& kind, const Config& cfg) {
    json j;
    j["schema"] = kReportSchema;
    j["kind"] = kind;
    j["tool_version"] = kToolVersion;
    j["config"] = config_json(cfg);
    return j;
}

json detect_report(const Hypergraph& host, const PatternGraph& f, BergeMode mode,
                   const std::optional<BergeCertificate>& cert, bool pattern_stripped,
                   const Config& cfg) {
    json j = report_envelope("detect", cfg);
    j["mode"] = mode_name(mode);
    j["host"] = hypergraph_json(host);
    j["pattern"] = pattern_json(f);
    j["pattern_stripped"] = pattern_stripped;
    j["found"] = cert.has_value();
    if (cert) {
        j["certificate"] = certificate_json(*cert, host);
        j["certificate_valid"] = verify_certificate(host, f, *cert);
    } else {
        j["certificate"] = nullptr;
    }
    return j;
}

static json check_json(const CoreCheck& c) {
    json j;
    j["checked"] = c.checked;
    j["pass"] = c.pass;
    j["note"] = c.note;
    return j;
}

json core_report(const Hypergraph& host, const CoreDecomposition& d, const CoreReport& checks,
                 const Config& cfg) {
    json j = report_envelope("core", cfg);
    j["alpha"] = d.alpha;
    j["host"] = hypergraph_json(host);
    j["core"] = hypergraph_json(d.core);
    j["witness"] = hypergraph_json(d.witness);
    json log = json::array();
    for (const PeelStep& step : d.peel_log) {
        json s;
        s["low_set"] = step.low_set.vertices();
        s["removed"] = edge_list_json(step.removed);
        s["kept"] = step.kept.vertices();
        log.push_back(std::move(s));
    }
    j["peel_log"] = std::move(log);
    json ch;
    ch["property_a"] = check_json(checks.property_a);
    ch["ratio"] = check_json(checks.ratio);
    ch["trace"] = check_json(checks.trace);
    j["checks"] = std::move(ch);
    j["all_pass"] = checks.all_pass();
    return j;
}

static json member_json(const GTMember& m) {
    json j;
    j["code"] = canonical_code(m.graph);
    j["t"] = m.graph.t();
    j["q"] = m.graph.q();
    json arr = json::array();
    for (auto [a, b] : m.graph.edge_pairs()) arr.push_back(json::array({a, b}));
    j["edges"] = std::move(arr);
    json tr = json::array();
    for (const ApexStep& s : m.trace) {
        json st;
        st["apex"] = s.apex;
        st["x"] = s.x;
        st["y"] = s.y;
        tr.push_back(std::move(st));
    }
    j["trace"] = std::move(tr);
    return j;
}

json gt_list_report(int t, const std::vector<GTMember>& members, const Config& cfg) {
    json j = report_envelope("class-list", cfg);
    j["t"] = t;
    j["count"] = members.size();
    json arr = json::array();
    for (const GTMember& m : members) arr.push_back(member_json(m));
    j["members"] = std::move(arr);
    return j;
}

json gt_member_report(const PatternGraph& g, const std::optional<GTWitness>& w,
                      const Config& cfg) {
    json j = report_envelope("class-membership", cfg);
    j["pattern"] = pattern_json(g);
    j["member"] = w.has_value();
    if (w) {
        json wit;
        wit["target"] = member_json(w->member);
        wit["embedding"] = w->embedding;
        j["witness"] = std::move(wit);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

static const char* problem_name(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::graph_subgraph: return "subgraph";
        case ProblemKind::clique_count: return "cliques";
        case ProblemKind::berge: return "berge";
        default: return "induced-berge";
    }
}

json search_report(const SearchResult& res, const PatternGraph& f, BergeMode mode,
                   const Config& cfg, bool include_timing) {
    (void)mode;
    json j = report_envelope("search", cfg);
    j["problem"] = problem_name(res.kind);
    j["n"] = res.n;
    j["r"] = res.r;
    j["s"] = res.s;
    j["pattern"] = pattern_json(f);
    j["value"] = res.value;
    json arr = json::array();
    for (const Hypergraph& w : res.witnesses) arr.push_back(hypergraph_json(w));
    j["witnesses"] = std::move(arr);
    json stats;
    stats["nodes"] = res.stats.nodes;
    if (include_timing) stats["ms"] = res.stats.ms;
    j["stats"] = std::move(stats);
    return j;
}

json chain_report(const BoundReport& rep, const PatternGraph& f, const Config& cfg) {
    json j = report_envelope("chain", cfg);
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["pattern"] = pattern_json(f);
    json vals = json::array();
    for (const auto& [name, value] : rep.values) {
        json v;
        v["name"] = name;
        v["value"] = value;
        vals.push_back(std::move(v));
    }
    j["values"] = std::move(vals);
    json arr = json::array();
    for (const BoundEntry& e : rep.entries) {
        json ej;
        ej["name"] = e.name;
        if (e.verdict == BoundEntry::Verdict::skipped) {
            ej["verdict"] = "skipped";
            ej["note"] = e.note;
        } else {
            ej["left"] = e.left.str();
            ej["right"] = e.right.str();
            ej["verdict"] = e.verdict == BoundEntry::Verdict::pass ? "pass" : "fail";
        }
        arr.push_back(std::move(ej));
    }
    j["entries"] = std::move(arr);
    j["all_pass"] = rep.all_pass();
    return j;
}

Rational rational_from_string(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational::integer(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParameterError("malformed rational '" + s + "'");
    }
}

std::vector<BoundEntry> chain_entries_from_json(const json& j) {
    std::vector<BoundEntry> out;
    for (const json& ej : j.at("entries")) {
        BoundEntry e;
        e.name = ej.at("name").get<std::string>();
        std::string verdict = ej.at("verdict").get<std::string>();
        if (verdict == "skipped") {
            e.verdict = BoundEntry::Verdict::skipped;
            e.note = ej.at("note").get<std::string>();
        } else {
            e.verdict = verdict == "pass" ? BoundEntry::Verdict::pass : BoundEntry::Verdict::fail;
            e.left = rational_from_string(ej.at("left").get<std::string>());
            e.right = rational_from_string(ej.at("right").get<std::string>());
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace berge
