#include "berge/detect.hpp"

#include <algorithm>

namespace berge {

namespace {

struct PatternInfo {
    int p = 0;  // pattern vertices
    int q = 0;  // pattern edges
    std::vector<std::pair<int, int>> fedges;
    std::vector<int> fdeg;   // 1-based
    std::vector<int> order;  // assignment order: descending degree, then id
};

PatternInfo analyze(const PatternGraph& f) {
    PatternInfo info;
    info.p = f.t();
    info.q = f.q();
    info.fedges = f.edge_pairs();
    info.fdeg.assign(static_cast<size_t>(info.p) + 1, 0);
    for (auto [a, b] : info.fedges) {
        ++info.fdeg[static_cast<size_t>(a)];
        ++info.fdeg[static_cast<size_t>(b)];
    }
    info.order.resize(static_cast<size_t>(info.p));
    for (int v = 1; v <= info.p; ++v) info.order[static_cast<size_t>(v) - 1] = v;
    std::stable_sort(info.order.begin(), info.order.end(), [&](int a, int b) {
        return info.fdeg[static_cast<size_t>(a)] > info.fdeg[static_cast<size_t>(b)];
    });
    return info;
}

struct Searcher {
    BergeMode mode;
    int n;
    std::span<const VertexSet> edges;
    const PatternInfo& info;
    // when set, the certificate must use host edge `forced_host` for pattern
    // edge `forced_fe`
    int forced_fe = -1;
    int forced_host = -1;

    std::vector<int> base;       // F vertex -> host vertex, 0 unassigned
    std::vector<char> used;      // host vertex taken as base
    std::vector<int> host_deg;   // host vertex -> incident edge count
    std::optional<BergeCertificate> found;

    Searcher(BergeMode mode_, int n_, std::span<const VertexSet> edges_, const PatternInfo& info_)
        : mode(mode_), n(n_), edges(edges_), info(info_) {
        base.assign(static_cast<size_t>(info.p) + 1, 0);
        used.assign(static_cast<size_t>(n) + 1, 0);
        host_deg.assign(static_cast<size_t>(n) + 1, 0);
        for (const VertexSet& e : edges)
            for (int v : e.vertices()) ++host_deg[static_cast<size_t>(v)];
    }

    // number of assigned base vertices inside e
    int assigned_in(const VertexSet& e) const {
        int c = 0;
        for (int v = 1; v <= info.p; ++v)
            if (base[static_cast<size_t>(v)] != 0 && e.contains(base[static_cast<size_t>(v)])) ++c;
        return c;
    }

    bool candidate_ok(int v, int w) const {
        if (used[static_cast<size_t>(w)]) return false;
        if (host_deg[static_cast<size_t>(w)] < info.fdeg[static_cast<size_t>(v)]) return false;
        for (auto [a, b] : info.fedges) {
            int other = 0;
            if (a == v)
                other = b;
            else if (b == v)
                other = a;
            else
                continue;
            int wo = base[static_cast<size_t>(other)];
            if (wo == 0) continue;
            bool any = false;
            for (const VertexSet& e : edges) {
                if (!e.contains(w) || !e.contains(wo)) continue;
                if (mode == BergeMode::berge) {
                    any = true;
                    break;
                }
                // induced: a third already-assigned base vertex in e rules it
                // out for this pattern edge forever (W only grows)
                int inside = assigned_in(e) + (e.contains(w) ? 1 : 0);
                if (inside == 2) {
                    any = true;
                    break;
                }
            }
            if (!any) return false;
        }
        return true;
    }

    bool augment(int fe, const std::vector<std::vector<int>>& cand, std::vector<int>& match_host,
                 std::vector<int>& match_fe, std::vector<char>& visited) const {
        for (int h : cand[static_cast<size_t>(fe)]) {
            if (h == forced_host) continue;  // pinned elsewhere
            if (visited[static_cast<size_t>(h)]) continue;
            visited[static_cast<size_t>(h)] = 1;
            if (match_host[static_cast<size_t>(h)] == -1 ||
                augment(match_host[static_cast<size_t>(h)], cand, match_host, match_fe, visited)) {
                match_host[static_cast<size_t>(h)] = fe;
                match_fe[static_cast<size_t>(fe)] = h;
                return true;
            }
        }
        return false;
    }

    bool complete() {
        std::vector<int> assign(static_cast<size_t>(info.q), -1);
        if (mode == BergeMode::induced) {
            for (int j = 0; j < info.q; ++j) {
                auto [a, b] = info.fedges[static_cast<size_t>(j)];
                int wa = base[static_cast<size_t>(a)], wb = base[static_cast<size_t>(b)];
                if (j == forced_fe) {
                    const VertexSet& e = edges[static_cast<size_t>(forced_host)];
                    if (!(e.contains(wa) && e.contains(wb) && assigned_in(e) == 2)) return false;
                    assign[static_cast<size_t>(j)] = forced_host;
                    continue;
                }
                for (size_t h = 0; h < edges.size(); ++h) {
                    const VertexSet& e = edges[h];
                    // exact trace: both ends in, no other base vertex
                    if (e.contains(wa) && e.contains(wb) && assigned_in(e) == 2) {
                        assign[static_cast<size_t>(j)] = static_cast<int>(h);
                        break;
                    }
                }
                if (assign[static_cast<size_t>(j)] == -1) return false;
            }
            // distinct pattern edges have distinct image pairs, hence exact
            // traces force distinct host edges; no matching step is needed
        } else {
            std::vector<std::vector<int>> cand(static_cast<size_t>(info.q));
            for (int j = 0; j < info.q; ++j) {
                auto [a, b] = info.fedges[static_cast<size_t>(j)];
                int wa = base[static_cast<size_t>(a)], wb = base[static_cast<size_t>(b)];
                for (size_t h = 0; h < edges.size(); ++h)
                    if (edges[h].contains(wa) && edges[h].contains(wb))
                        cand[static_cast<size_t>(j)].push_back(static_cast<int>(h));
                if (cand[static_cast<size_t>(j)].empty()) return false;
            }
            std::vector<int> match_host(edges.size(), -1);
            std::vector<int> match_fe(static_cast<size_t>(info.q), -1);
            if (forced_fe >= 0) {
                auto& c = cand[static_cast<size_t>(forced_fe)];
                if (std::find(c.begin(), c.end(), forced_host) == c.end()) return false;
                match_host[static_cast<size_t>(forced_host)] = forced_fe;
                match_fe[static_cast<size_t>(forced_fe)] = forced_host;
            }
            for (int j = 0; j < info.q; ++j) {
                if (match_fe[static_cast<size_t>(j)] != -1) continue;
                std::vector<char> visited(edges.size(), 0);
                if (!augment(j, cand, match_host, match_fe, visited)) return false;
            }
            assign = match_fe;
        }
        BergeCertificate cert;
        cert.mode = mode;
        cert.base.assign(base.begin() + 1, base.end());
        cert.edges = assign;
        found = cert;
        return true;
    }

    bool search_from(size_t pos) {
        while (pos < info.order.size() && base[static_cast<size_t>(info.order[pos])] != 0) ++pos;
        if (pos == info.order.size()) return complete();
        int v = info.order[pos];
        for (int w = 1; w <= n; ++w) {
            if (!candidate_ok(v, w)) continue;
            base[static_cast<size_t>(v)] = w;
            used[static_cast<size_t>(w)] = 1;
            if (search_from(pos + 1)) return true;
            base[static_cast<size_t>(v)] = 0;
            used[static_cast<size_t>(w)] = 0;
        }
        return false;
    }
};

}  // namespace

namespace detail {

std::optional<BergeCertificate> find_pattern(BergeMode mode, int r, int n,
                                             std::span<const VertexSet> edges,
                                             const PatternGraph& f,
                                             std::optional<int> required_edge) {
    (void)r;
    PatternGraph pat = f.has_isolated_vertices() ? strip_isolated(f) : f;
    if (pat.q() == 0) throw PatternError("pattern has no edges");
    PatternInfo info = analyze(pat);
    if (info.q > static_cast<int>(edges.size())) return std::nullopt;
    if (info.p > n) return std::nullopt;
    if (!required_edge) {
        Searcher s(mode, n, edges, info);
        if (s.search_from(0)) return s.found;
        return std::nullopt;
    }
    int req = *required_edge;
    if (req < 0 || req >= static_cast<int>(edges.size()))
        throw ParameterError("required edge index out of range");
    const VertexSet& re = edges[static_cast<size_t>(req)];
    // the required edge must serve some pattern edge, so two of its vertices
    // are the images of that edge's endpoints; pin them and search the rest
    for (int j = 0; j < info.q; ++j) {
        auto [a, b] = info.fedges[static_cast<size_t>(j)];
        for (int u : re.vertices()) {
            for (int v : re.vertices()) {
                if (u == v) continue;
                Searcher s(mode, n, edges, info);
                s.forced_fe = j;
                s.forced_host = req;
                if (!s.candidate_ok(a, u)) continue;
                s.base[static_cast<size_t>(a)] = u;
                s.used[static_cast<size_t>(u)] = 1;
                if (!s.candidate_ok(b, v)) continue;
                s.base[static_cast<size_t>(b)] = v;
                s.used[static_cast<size_t>(v)] = 1;
                if (s.search_from(0)) return s.found;
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

std::optional<BergeCertificate> find_berge(const Hypergraph& host, const PatternGraph& f) {
    return detail::find_pattern(BergeMode::berge, host.r(), host.n(), host.edges(), f,
                                std::nullopt);
}

std::optional<BergeCertificate> find_induced_berge(const Hypergraph& host,
                                                   const PatternGraph& f) {
    return detail::find_pattern(BergeMode::induced, host.r(), host.n(), host.edges(), f,
                                std::nullopt);
}

std::optional<BergeCertificate> find_berge_using(const Hypergraph& host, const PatternGraph& f,
                                                 int edge_index) {
    return detail::find_pattern(BergeMode::berge, host.r(), host.n(), host.edges(), f,
                                edge_index);
}

std::optional<BergeCertificate> find_induced_berge_using(const Hypergraph& host,
                                                         const PatternGraph& f, int edge_index) {
    return detail::find_pattern(BergeMode::induced, host.r(), host.n(), host.edges(), f,
                                edge_index);
}

bool verify_certificate(const Hypergraph& host, const PatternGraph& f,
                        const BergeCertificate& c) {
    if (static_cast<int>(c.base.size()) != f.t()) return false;
    if (static_cast<int>(c.edges.size()) != f.q()) return false;
    std::vector<char> vert_used(static_cast<size_t>(host.n()) + 1, 0);
    for (int w : c.base) {
        if (w < 1 || w > host.n()) return false;
        if (vert_used[static_cast<size_t>(w)]) return false;
        vert_used[static_cast<size_t>(w)] = 1;
    }
    std::vector<char> edge_used(static_cast<size_t>(host.m()), 0);
    for (int h : c.edges) {
        if (h < 0 || h >= host.m()) return false;
        if (edge_used[static_cast<size_t>(h)]) return false;
        edge_used[static_cast<size_t>(h)] = 1;
    }
    const auto& fedges = f.edge_pairs();
    for (size_t j = 0; j < fedges.size(); ++j) {
        auto [a, b] = fedges[j];
        int wa = c.base[static_cast<size_t>(a) - 1];
        int wb = c.base[static_cast<size_t>(b) - 1];
        const VertexSet& e = host.edge(c.edges[j]);
        if (!e.contains(wa) || !e.contains(wb)) return false;
        if (c.mode == BergeMode::induced) {
            int inside = 0;
            for (int w : c.base)
                if (e.contains(w)) ++inside;
            if (inside != 2) return false;
        }
    }
    return true;
}

std::optional<StronglyRepresentable> find_strongly_representable(
    const std::vector<VertexSet>& family, int s) {
    if (s < 1) throw ParameterError("subfamily size must be at least 1");
    if (s > static_cast<int>(family.size())) return std::nullopt;

    std::vector<int> chosen;
    // private vertex of member i against the other chosen members
    auto private_vertex = [&](int i) -> int {
        for (int v : family[static_cast<size_t>(i)].vertices()) {
            bool priv = true;
            for (int j : chosen)
                if (j != i && family[static_cast<size_t>(j)].contains(v)) {
                    priv = false;
                    break;
                }
            if (priv) return v;
        }
        return 0;
    };
    auto all_private = [&]() {
        for (int i : chosen)
            if (private_vertex(i) == 0) return false;
        return true;
    };

    std::optional<StronglyRepresentable> result;
    auto rec = [&](auto&& self, size_t from) -> bool {
        if (static_cast<int>(chosen.size()) == s) {
            StronglyRepresentable w;
            w.members = chosen;
            for (int i : chosen) w.reps.push_back(private_vertex(i));
            result = std::move(w);
            return true;
        }
        for (size_t i = from; i < family.size(); ++i) {
            if (family.size() - i < static_cast<size_t>(s) - chosen.size()) break;
            chosen.push_back(static_cast<int>(i));
            // privacy only shrinks as the subfamily grows, so prune now
            if (all_private() && self(self, i + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    rec(rec, 0);
    return result;
}

}  // namespace berge
