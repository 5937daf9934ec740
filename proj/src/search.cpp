#include "berge/search.hpp"

#include "berge/gt_class.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace berge {

unsigned long long binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * static_cast<unsigned long long>(n - k + i) /
                                       static_cast<unsigned long long>(i);
    return out;
}

unsigned long long falling_factorial(int a, int b) {
    if (a < 0 || b < 0) throw ParameterError("falling factorial needs non-negative arguments");
    unsigned long long out = 1;
    for (int i = 0; i < b; ++i) {
        if (a - i <= 0) return 0;
        out *= static_cast<unsigned long long>(a - i);
    }
    return out;
}

static long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

Rational::Rational(long long num_, long long den_) : num(num_), den(den_) {
    if (den == 0) throw ParameterError("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = gcd_ll(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

bool Rational::operator<=(const Rational& o) const {
    return static_cast<__int128>(num) * o.den <= static_cast<__int128>(o.num) * den;
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
}

long long Rational::floor() const {
    long long q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

static unsigned long long ipow(long long base, int exp) {
    unsigned long long out = 1;
    for (int i = 0; i < exp; ++i) out *= static_cast<unsigned long long>(base);
    return out;
}

static unsigned long long factorial(int k) {
    unsigned long long out = 1;
    for (int i = 2; i <= k; ++i) out *= static_cast<unsigned long long>(i);
    return out;
}

namespace {

// ---- maximum clique-count search over F-free graphs ----

struct CliqueSearch {
    int n, s, m;                    // m = C(n,2) candidate pairs
    const PatternGraph& pat;        // stripped pattern
    int full_t;                     // pattern order before stripping
    std::vector<std::pair<int, int>> cand;  // colex order
    std::vector<std::uint64_t> adj;
    long long cnt = 0;
    std::vector<int> cur;
    std::uint64_t nodes = 0;

    long long best = -1;
    std::vector<int> best_set;
    bool capture_all = false;
    long long target = 0;
    std::vector<std::vector<int>> hits;

    // pattern-embedding order over the stripped pattern's vertices
    std::vector<int> peorder;

    CliqueSearch(int n_, int s_, const PatternGraph& pat_, int full_t_)
        : n(n_), s(s_), m(n_ * (n_ - 1) / 2), pat(pat_), full_t(full_t_) {
        for (int b = 2; b <= n; ++b)
            for (int a = 1; a < b; ++a) cand.emplace_back(a, b);
        adj.assign(static_cast<size_t>(n) + 1, 0);
        peorder.resize(static_cast<size_t>(pat.t()));
        for (int v = 1; v <= pat.t(); ++v) peorder[static_cast<size_t>(v) - 1] = v;
        std::stable_sort(peorder.begin(), peorder.end(),
                         [&](int a, int b) { return pat.degree(a) > pat.degree(b); });
    }

    bool adjacent(int u, int v) const { return (adj[static_cast<size_t>(u)] >> (v - 1)) & 1; }

    void toggle(int u, int v) {
        adj[static_cast<size_t>(u)] ^= std::uint64_t{1} << (v - 1);
        adj[static_cast<size_t>(v)] ^= std::uint64_t{1} << (u - 1);
    }

    bool embed_rest(std::vector<int>& image, std::uint64_t& used, size_t pos) {
        while (pos < peorder.size() && image[static_cast<size_t>(peorder[pos])] != 0) ++pos;
        if (pos == peorder.size()) return true;
        int v = peorder[pos];
        for (int w = 1; w <= n; ++w) {
            if ((used >> (w - 1)) & 1) continue;
            bool ok = true;
            for (int u = 1; u <= pat.t() && ok; ++u) {
                int wu = image[static_cast<size_t>(u)];
                if (wu != 0 && pat.adjacent(v, u) && !adjacent(w, wu)) ok = false;
            }
            if (!ok) continue;
            image[static_cast<size_t>(v)] = w;
            used |= std::uint64_t{1} << (w - 1);
            if (embed_rest(image, used, pos + 1)) return true;
            image[static_cast<size_t>(v)] = 0;
            used &= ~(std::uint64_t{1} << (w - 1));
        }
        return false;
    }

    // would the pattern appear as a subgraph through host edge (x, y)?
    bool appears_using(int x, int y) {
        if (full_t > n) return false;
        for (auto [a, b] : pat.edge_pairs()) {
            for (int flip = 0; flip < 2; ++flip) {
                int ia = flip ? b : a, ib = flip ? a : b;
                std::vector<int> image(static_cast<size_t>(pat.t()) + 1, 0);
                std::uint64_t used = 0;
                image[static_cast<size_t>(ia)] = x;
                image[static_cast<size_t>(ib)] = y;
                used |= std::uint64_t{1} << (x - 1);
                used |= std::uint64_t{1} << (y - 1);
                bool ok = true;
                for (int u = 1; u <= pat.t() && ok; ++u) {
                    int wu = image[static_cast<size_t>(u)];
                    if (wu == 0) continue;
                    for (int v2 = 1; v2 <= pat.t() && ok; ++v2) {
                        int wv = image[static_cast<size_t>(v2)];
                        if (wv != 0 && pat.adjacent(u, v2) && !adjacent(wu, wv)) ok = false;
                    }
                }
                if (ok && embed_rest(image, used, 0)) return true;
            }
        }
        return false;
    }

    long long cliques_in_mask(std::uint64_t allowed, int size, int from) const {
        if (size == 0) return 1;
        long long total = 0;
        for (int v = from; v <= n; ++v) {
            if (!((allowed >> (v - 1)) & 1)) continue;
            total += cliques_in_mask(allowed & adj[static_cast<size_t>(v)], size - 1, v + 1);
        }
        return total;
    }

    long long count_all(int size) const {
        std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        return cliques_in_mask(all, size, 1);
    }

    // cliques of the graph with every candidate from idx on added; an upper
    // bound for every extension below this node
    long long optimistic(int idx) {
        std::vector<int> touched;
        for (int i = idx; i < m; ++i) {
            auto [u, v] = cand[static_cast<size_t>(i)];
            if (!adjacent(u, v)) {
                toggle(u, v);
                touched.push_back(i);
            }
        }
        long long bound = count_all(s);
        for (int i : touched) {
            auto [u, v] = cand[static_cast<size_t>(i)];
            toggle(u, v);
        }
        return bound;
    }

    void dfs(int idx) {
        ++nodes;
        if (!capture_all && cnt > best) {
            best = cnt;
            best_set = cur;
        }
        if (capture_all && cnt == target) hits.push_back(cur);
        if (s >= 3) {
            long long bound = optimistic(idx);
            if (capture_all ? bound < target : bound <= best) return;
        }
        for (int i = idx; i < m; ++i) {
            if (s == 2) {
                long long reach = cnt + (m - i);
                if (capture_all ? reach < target : reach <= best) break;
            }
            auto [u, v] = cand[static_cast<size_t>(i)];
            toggle(u, v);
            if (appears_using(u, v)) {
                toggle(u, v);
                continue;
            }
            long long gained = 1;
            if (s != 2) {
                if (s == 1)
                    gained = 0;
                else
                    gained = cliques_in_mask(adj[static_cast<size_t>(u)] & adj[static_cast<size_t>(v)],
                                             s - 2, 1);
            }
            cnt += gained;
            cur.push_back(i);
            dfs(i + 1);
            cur.pop_back();
            cnt -= gained;
            toggle(u, v);
        }
    }

    // value pass with the first taken edge pinned to {1,2}: every non-empty
    // graph is isomorphic to one through that pair
    void run_pinned() {
        ++nodes;
        best = cnt;  // empty graph
        best_set.clear();
        if (m == 0) return;
        auto [u, v] = cand[0];
        toggle(u, v);
        if (appears_using(u, v)) {
            toggle(u, v);
            return;
        }
        long long gained = s == 2 ? 1 : (s == 1 ? 0 : cliques_in_mask(0, s - 2, 1));
        cnt += gained;
        cur.push_back(0);
        dfs(1);
        cur.pop_back();
        cnt -= gained;
        toggle(u, v);
    }

    Hypergraph to_graph(const std::vector<int>& set) const {
        std::vector<VertexSet> edges;
        for (int i : set) {
            auto [u, v] = cand[static_cast<size_t>(i)];
            edges.push_back(VertexSet{u, v});
        }
        return Hypergraph(2, n, std::move(edges));
    }
};

}  // namespace

SearchResult ex_clique(int n, int s, const PatternGraph& f, const Config& cfg,
                       bool all_witnesses) {
    if (s < 1) throw ParameterError("clique size must be at least 1");
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (f.q() == 0) throw PatternError("pattern has no edges");
    int cap = s == 2 ? cfg.caps.clique_n_pairs : cfg.caps.clique_n;
    if (n > cap) throw SizeError("host order " + std::to_string(n) + " above cap " +
                                 std::to_string(cap));
    if (n > 64) throw SizeError("clique search capped at 64 vertices");

    auto t0 = std::chrono::steady_clock::now();
    PatternGraph stripped = f.has_isolated_vertices() ? strip_isolated(f) : f;
    CliqueSearch search(n, s, stripped, f.t());

    SearchResult res;
    res.kind = s == 2 ? ProblemKind::graph_subgraph : ProblemKind::clique_count;
    res.n = n;
    res.r = 2;
    res.s = s;

    if (s == 1) {
        // every graph has n vertices; the empty graph is the first witness
        res.value = static_cast<unsigned long long>(n);
        res.witnesses.push_back(Hypergraph::empty(2, n));
        res.stats.nodes = 1;
    } else {
        search.run_pinned();
        res.value = static_cast<unsigned long long>(search.best);
        if (!all_witnesses) {
            res.witnesses.push_back(search.to_graph(search.best_set));
        } else {
            search.capture_all = true;
            search.target = search.best;
            search.cur.clear();
            search.cnt = 0;
            search.dfs(0);
            for (const auto& set : search.hits) res.witnesses.push_back(search.to_graph(set));
        }
        res.stats.nodes = search.nodes;
    }
    res.stats.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

namespace {

// ---- maximum edge count over (induced-)Berge-F-free hosts ----

// colex on sorted r-sets: compare from the largest element down
bool colex_less(const VertexSet& a, const VertexSet& b) {
    const auto& x = a.vertices();
    const auto& y = b.vertices();
    for (size_t i = x.size(); i-- > 0;) {
        if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
}

struct BergeSearch {
    BergeMode mode;
    int n, r, m;
    const PatternGraph& pat;  // stripped
    int full_t;
    std::vector<VertexSet> cand;

    // conflict cache over minimal forbidden q-subsets (q <= 4); when absent,
    // every addition runs the certificate search pinned to the new edge
    bool cache_ready = false;
    int q = 0;
    std::uint64_t bad1 = 0;
    std::vector<std::uint64_t> bad2;                 // [i] -> partners
    std::vector<std::vector<std::uint64_t>> bad3;    // [i][j], i < j -> third
    std::vector<std::uint64_t> bad4;                 // [rank(i,j,k)] -> fourth

    std::vector<int> cur;
    std::vector<VertexSet> cur_edges;
    std::uint64_t cur_mask = 0;
    std::uint64_t nodes = 0;

    long long best = -1;
    std::vector<int> best_set;
    bool capture_all = false;
    long long target = 0;
    std::vector<std::vector<int>> hits;

    BergeSearch(BergeMode mode_, int n_, int r_, const PatternGraph& pat_, int full_t_)
        : mode(mode_), n(n_), r(r_), pat(pat_), full_t(full_t_), q(pat_.q()) {
        std::vector<int> base(static_cast<size_t>(n), 0);
        std::iota(base.begin(), base.end(), 1);
        for (VertexSet& s : subsets_of(VertexSet{std::move(base)}, r)) cand.push_back(std::move(s));
        std::sort(cand.begin(), cand.end(), colex_less);
        m = static_cast<int>(cand.size());
    }

    int rank3(int a, int b, int c) const {  // a < b < c
        return static_cast<int>(binomial(c, 3) + binomial(b, 2) + binomial(a, 1));
    }

    bool subset_bad(const std::vector<int>& idx) const {
        std::vector<VertexSet> fam;
        for (int i : idx) fam.push_back(cand[static_cast<size_t>(i)]);
        return detail::find_pattern(mode, r, n, fam, pat, std::nullopt).has_value();
    }

    void build_cache() {
        if (full_t > n) {  // pattern can never embed; nothing is ever bad
            cache_ready = true;
            return;
        }
        std::vector<int> idx(static_cast<size_t>(q));
        if (q == 1) {
            for (int i = 0; i < m; ++i)
                if (subset_bad({i})) bad1 |= std::uint64_t{1} << i;
        } else if (q == 2) {
            bad2.assign(static_cast<size_t>(m), 0);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    if (subset_bad({i, j})) {
                        bad2[static_cast<size_t>(i)] |= std::uint64_t{1} << j;
                        bad2[static_cast<size_t>(j)] |= std::uint64_t{1} << i;
                    }
        } else if (q == 3) {
            bad3.assign(static_cast<size_t>(m), std::vector<std::uint64_t>(static_cast<size_t>(m), 0));
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    for (int k = j + 1; k < m; ++k)
                        if (subset_bad({i, j, k})) {
                            bad3[static_cast<size_t>(i)][static_cast<size_t>(j)] |= std::uint64_t{1} << k;
                            bad3[static_cast<size_t>(i)][static_cast<size_t>(k)] |= std::uint64_t{1} << j;
                            bad3[static_cast<size_t>(j)][static_cast<size_t>(k)] |= std::uint64_t{1} << i;
                        }
        } else {  // q == 4
            bad4.assign(static_cast<size_t>(binomial(m, 3)), 0);
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    for (int c = b + 1; c < m; ++c)
                        for (int d = c + 1; d < m; ++d)
                            if (subset_bad({a, b, c, d})) {
                                bad4[static_cast<size_t>(rank3(a, b, c))] |= std::uint64_t{1} << d;
                                bad4[static_cast<size_t>(rank3(a, b, d))] |= std::uint64_t{1} << c;
                                bad4[static_cast<size_t>(rank3(a, c, d))] |= std::uint64_t{1} << b;
                                bad4[static_cast<size_t>(rank3(b, c, d))] |= std::uint64_t{1} << a;
                            }
        }
        cache_ready = true;
    }

    bool stays_free_cached(int c) const {
        if (full_t > n) return true;
        if (q == 1) return !((bad1 >> c) & 1);
        if (q == 2) return (bad2[static_cast<size_t>(c)] & cur_mask) == 0;
        if (q == 3) {
            for (size_t x = 0; x < cur.size(); ++x)
                for (size_t y = x + 1; y < cur.size(); ++y) {
                    int a = cur[x], b = cur[y];
                    if (a > b) std::swap(a, b);
                    if ((bad3[static_cast<size_t>(a)][static_cast<size_t>(b)] >> c) & 1) return false;
                }
            return true;
        }
        for (size_t x = 0; x < cur.size(); ++x)
            for (size_t y = x + 1; y < cur.size(); ++y)
                for (size_t z = y + 1; z < cur.size(); ++z) {
                    int a = cur[x], b = cur[y], d = cur[z];
                    // cur is increasing, so a < b < d already
                    if ((bad4[static_cast<size_t>(rank3(a, b, d))] >> c) & 1) return false;
                }
        return true;
    }

    bool stays_free_detect(int c) {
        cur_edges.push_back(cand[static_cast<size_t>(c)]);
        auto hit = detail::find_pattern(mode, r, n, cur_edges, pat,
                                        static_cast<int>(cur_edges.size()) - 1);
        cur_edges.pop_back();
        return !hit.has_value();
    }

    bool stays_free(int c) { return cache_ready ? stays_free_cached(c) : stays_free_detect(c); }

    void take(int c) {
        cur.push_back(c);
        cur_edges.push_back(cand[static_cast<size_t>(c)]);
        cur_mask |= std::uint64_t{1} << c;
    }

    void drop(int c) {
        cur.pop_back();
        cur_edges.pop_back();
        cur_mask &= ~(std::uint64_t{1} << c);
    }

    void dfs(int idx, bool bound) {
        ++nodes;
        long long size = static_cast<long long>(cur.size());
        if (!capture_all && size > best) {
            best = size;
            best_set = cur;
        }
        if (capture_all && size == target) hits.push_back(cur);
        for (int i = idx; i < m; ++i) {
            if (bound) {
                long long reach = size + (m - i);
                if (capture_all ? reach < target : reach <= best) break;
            }
            if (!stays_free(i)) continue;
            take(i);
            dfs(i + 1, bound);
            drop(i);
        }
    }

    // value pass with the first edge pinned to the colex-minimum r-set
    void run_pinned() {
        ++nodes;
        best = 0;
        best_set.clear();
        if (m == 0) return;
        if (!stays_free(0)) return;  // then no single edge is free, by relabelling
        take(0);
        dfs(1, true);
        drop(0);
    }

    Hypergraph to_host(const std::vector<int>& set) const {
        std::vector<VertexSet> edges;
        for (int i : set) edges.push_back(cand[static_cast<size_t>(i)]);
        return Hypergraph(r, n, std::move(edges));
    }
};

}  // namespace

SearchResult ex_berge(int n, int r, const PatternGraph& f, BergeMode mode, const Config& cfg,
                      bool all_witnesses, SearchTier tier) {
    if (r < 1) throw ParameterError("uniformity must be at least 1");
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (f.q() == 0) throw PatternError("pattern has no edges");
    long long m = static_cast<long long>(binomial(n, r));
    if (m > 64) throw SizeError("candidate pool above 64 edges");
    if (tier == SearchTier::automatic)
        tier = m <= cfg.caps.berge_exhaustive ? SearchTier::exhaustive
                                              : SearchTier::branch_and_bound;
    if (m > cfg.caps.berge_branch_bound)
        throw SizeError("candidate pool " + std::to_string(m) + " above cap " +
                        std::to_string(cfg.caps.berge_branch_bound));

    auto t0 = std::chrono::steady_clock::now();
    PatternGraph stripped = f.has_isolated_vertices() ? strip_isolated(f) : f;
    BergeSearch search(mode, n, r, stripped, f.t());

    if (tier == SearchTier::branch_and_bound) {
        if (search.q <= 4 && static_cast<double>(binomial(search.m, search.q)) <= 200000.0)
            search.build_cache();
        search.run_pinned();
    } else {
        search.dfs(0, false);
    }

    SearchResult res;
    res.kind = mode == BergeMode::berge ? ProblemKind::berge : ProblemKind::induced_berge;
    res.n = n;
    res.r = r;
    res.s = 0;
    res.value = static_cast<unsigned long long>(search.best);
    if (!all_witnesses) {
        res.witnesses.push_back(search.to_host(search.best_set));
    } else {
        search.capture_all = true;
        search.target = search.best;
        search.cur.clear();
        search.cur_edges.clear();
        search.cur_mask = 0;
        search.dfs(0, tier == SearchTier::branch_and_bound);
        for (const auto& set : search.hits) res.witnesses.push_back(search.to_host(set));
    }
    res.stats.nodes = search.nodes;
    res.stats.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

unsigned long long rpartite_bound(int n, int r, const PatternGraph& f,
                                  const std::map<int, unsigned long long>& clique_values) {
    (void)n;
    if (r < 2) throw ParameterError("uniformity must be at least 2");
    PatternGraph stripped = f.has_isolated_vertices() ? strip_isolated(f) : f;
    if (stripped.q() == 0) throw PatternError("pattern has no edges");
    int t = stripped.t();
    unsigned long long sum = 0;
    for (int i = 2; i <= r; ++i) {
        auto it = clique_values.find(i);
        if (it == clique_values.end())
            throw ParameterError("missing clique value for size " + std::to_string(i));
        sum += ipow(t - 2, r - i) * falling_factorial(r, r - i) * it->second;
    }
    return sum;
}

Rational rpartite_bound_general(int n, int r, const PatternGraph& f,
                                const std::map<int, unsigned long long>& clique_values) {
    unsigned long long sum = rpartite_bound(n, r, f, clique_values);
    return Rational(static_cast<long long>(ipow(r, r) * sum), static_cast<long long>(factorial(r)));
}

GtBounds gt_bound(int n, int r, const PatternGraph& f, unsigned long long ex_f, int gt_cap) {
    (void)n;
    if (r < 2) throw ParameterError("uniformity must be at least 2");
    PatternGraph stripped = f.has_isolated_vertices() ? strip_isolated(f) : f;
    if (!is_in_gt(stripped, gt_cap))
        throw DomainError("pattern is outside the generated class");
    int t = stripped.t();
    unsigned long long pw = ipow(t - 2, r - 2);
    GtBounds b;
    b.rpartite = pw * (factorial(r) / 2) * ex_f;
    b.general_exact = Rational(static_cast<long long>(ipow(r, r) * pw * ex_f), 2);
    b.general = static_cast<unsigned long long>(b.general_exact.floor());
    return b;
}

StarBounds star_bounds(int n, int r, int t) {
    if (r < 2) throw ParameterError("uniformity must be at least 2");
    if (t < 3) throw ParameterError("star parameter must be at least 3");
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    int block = r + t - 3;
    int a = n / block, b = n % block;
    StarBounds out;
    out.lower = static_cast<unsigned long long>(a) * binomial(block, r) + binomial(b, r);
    out.upper = Rational(static_cast<long long>(n) * static_cast<long long>(binomial(block, r - 1)),
                         r);
    return out;
}

bool BoundReport::all_pass() const {
    for (const BoundEntry& e : entries)
        if (e.verdict == BoundEntry::Verdict::fail) return false;
    return true;
}

BoundReport verify_chain(int n, int r, const PatternGraph& f, const Config& cfg) {
    if (r < 2) throw ParameterError("chain needs uniformity at least 2");
    if (n < 1) throw ParameterError("need at least one vertex");
    if (f.q() == 0) throw PatternError("pattern has no edges");

    PatternGraph stripped = f.has_isolated_vertices() ? strip_isolated(f) : f;
    BoundReport rep;
    rep.n = n;
    rep.r = r;

    auto value_of = [&](auto&& fn) -> std::optional<unsigned long long> {
        try {
            return fn();
        } catch (const SizeError&) {
            return std::nullopt;
        }
    };

    std::map<int, unsigned long long> cliques;
    bool cliques_complete = true;
    for (int i = 2; i <= r; ++i) {
        auto v = value_of([&] { return ex_clique(n, i, f, cfg).value; });
        if (v) {
            cliques[i] = *v;
            rep.values.emplace_back("clique_" + std::to_string(i), *v);
        } else {
            cliques_complete = false;
        }
    }
    auto berge_v = value_of([&] { return ex_berge(n, r, f, BergeMode::berge, cfg).value; });
    if (berge_v) rep.values.emplace_back("berge", *berge_v);
    auto induced_v = value_of([&] { return ex_berge(n, r, f, BergeMode::induced, cfg).value; });
    if (induced_v) rep.values.emplace_back("induced", *induced_v);
    auto down_n = value_of([&] { return ex_berge(n, r - 1, f, BergeMode::induced, cfg).value; });
    if (down_n) rep.values.emplace_back("induced_down_n", *down_n);
    auto down_nm1 =
        value_of([&] { return ex_berge(n - 1, r - 1, f, BergeMode::induced, cfg).value; });
    if (down_nm1) rep.values.emplace_back("induced_down_nm1", *down_nm1);

    auto add = [&](const std::string& name, std::optional<Rational> left,
                   std::optional<Rational> right, const std::string& skip_note) {
        BoundEntry e;
        e.name = name;
        if (left && right && skip_note.empty()) {
            e.left = *left;
            e.right = *right;
            e.verdict = *left <= *right ? BoundEntry::Verdict::pass : BoundEntry::Verdict::fail;
        } else {
            e.verdict = BoundEntry::Verdict::skipped;
            e.note = skip_note.empty() ? "value not computed (cap exceeded)" : skip_note;
        }
        rep.entries.push_back(std::move(e));
    };
    auto as_rat = [](std::optional<unsigned long long> v) -> std::optional<Rational> {
        if (!v) return std::nullopt;
        return Rational::integer(static_cast<long long>(*v));
    };

    add("cliques-le-berge", as_rat(cliques.count(r) ? std::optional<unsigned long long>(cliques[r])
                                                    : std::nullopt),
        as_rat(berge_v), "");
    add("berge-le-induced", as_rat(berge_v), as_rat(induced_v), "");

    bool star = stripped.is_star();
    if (star) {
        add("scaled-lower-uniformity", std::nullopt, std::nullopt, "pattern is a star");
        add("apex-lift-lower", std::nullopt, std::nullopt, "pattern is a star");
    } else {
        std::optional<Rational> scaled;
        if (down_n) scaled = Rational(static_cast<long long>(n - r + 1) *
                                          static_cast<long long>(*down_n),
                                      n);
        add("scaled-lower-uniformity", scaled, as_rat(induced_v), "");
        add("apex-lift-lower", as_rat(down_nm1), as_rat(induced_v), "");
    }

    if (cliques_complete && induced_v) {
        add("shadow-sum-upper", as_rat(induced_v),
            rpartite_bound_general(n, r, f, cliques), "");
    } else {
        add("shadow-sum-upper", std::nullopt, std::nullopt, "");
    }

    {
        std::optional<GTWitness> member;
        std::string note;
        try {
            member = is_in_gt(stripped, cfg.caps.gt);
        } catch (const SizeError&) {
            note = "pattern above the class cap";
        }
        if (!note.empty()) {
            add("class-upper", std::nullopt, std::nullopt, note);
        } else if (!member) {
            add("class-upper", std::nullopt, std::nullopt, "pattern is outside the class");
        } else if (cliques.count(2) && induced_v) {
            GtBounds gb = gt_bound(n, r, f, cliques[2], cfg.caps.gt);
            add("class-upper", as_rat(induced_v), gb.general_exact, "");
        } else {
            add("class-upper", std::nullopt, std::nullopt, "");
        }
    }

    if (star) {
        StarBounds sb = star_bounds(n, r, stripped.t());
        add("star-lower", Rational::integer(static_cast<long long>(sb.lower)), as_rat(induced_v),
            "");
        add("star-upper", as_rat(induced_v), sb.upper, "");
    } else {
        add("star-lower", std::nullopt, std::nullopt, "pattern is not a star");
        add("star-upper", std::nullopt, std::nullopt, "pattern is not a star");
    }

    return rep;
}

}  // namespace berge
