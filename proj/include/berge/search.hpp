#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "berge/detect.hpp"
#include "berge/hypergraph.hpp"
#include "berge/pattern.hpp"

namespace berge {

unsigned long long binomial(int n, int k);
// (a)_b = a (a-1) ... (a-b+1); empty product for b = 0.
unsigned long long falling_factorial(int a, int b);

// Exact fraction; den > 0, reduced. Bounds that are not integers stay exact.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long num_, long long den_);
    static Rational integer(long long v) { return Rational(v, 1); }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<=(const Rational& o) const;
    bool operator<(const Rational& o) const;
    bool is_integer() const { return den == 1; }
    long long floor() const;
    std::string str() const;  // "27" or "243/2"
};

struct Caps {
    int chromatic = 12;
    int gt = 9;
    int clique_n_pairs = 9;          // ex_clique host cap for s = 2
    int clique_n = 8;                // ex_clique host cap for s >= 3
    long long berge_exhaustive = 24; // C(n,r) cap of the exhaustive tier
    long long berge_branch_bound = 40;
};

struct Config {
    Caps caps;
    std::uint64_t seed = 12345;
};

enum class ProblemKind { graph_subgraph, clique_count, berge, induced_berge };
enum class SearchTier { automatic, exhaustive, branch_and_bound };

struct SearchStats {
    std::uint64_t nodes = 0;
    double ms = 0.0;  // wall clock; excluded from default reports
};

struct SearchResult {
    ProblemKind kind = ProblemKind::graph_subgraph;
    int n = 0;
    int r = 0;  // host uniformity (2 for the clique problems)
    int s = 0;  // counted clique size, 0 for the edge-count problems
    unsigned long long value = 0;
    std::vector<Hypergraph> witnesses;
    SearchStats stats;
};

// Maximum number of K_s subgraphs over F-free graphs on n labelled
// vertices; s = 2 is the plain extremal number. Exact branch and bound:
// edges added in colex order, pruned on pattern appearance through the new
// edge, optimistic completion bound, first taken edge pinned to {1,2} by
// relabelling (the pin is dropped when all witnesses are requested).
SearchResult ex_clique(int n, int s, const PatternGraph& f, const Config& cfg = {},
                       bool all_witnesses = false);

// Maximum edge count over (induced-)Berge-F-free r-uniform hosts on n
// labelled vertices. The exhaustive tier walks every free family; the
// branch-and-bound tier adds the completion bound, the first-edge pin and a
// cache of minimal forbidden edge subsets. Both check freeness only through
// the edge being added.
SearchResult ex_berge(int n, int r, const PatternGraph& f, BergeMode mode,
                      const Config& cfg = {}, bool all_witnesses = false,
                      SearchTier tier = SearchTier::automatic);

// Sum over i = 2..r of (t-2)^(r-i) (r)_(r-i) clique_values[i], the edge
// bound for r-partite hosts; clique_values must cover 2..r.
unsigned long long rpartite_bound(int n, int r, const PatternGraph& f,
                                  const std::map<int, unsigned long long>& clique_values);
// The same bound scaled by r^r / r!, valid for every host.
Rational rpartite_bound_general(int n, int r, const PatternGraph& f,
                                const std::map<int, unsigned long long>& clique_values);

struct GtBounds {
    unsigned long long rpartite = 0;  // (t-2)^(r-2) (r!/2) ex_f
    unsigned long long general = 0;   // floor of (1/2) r^r (t-2)^(r-2) ex_f
    Rational general_exact;
};

// Bounds available when f belongs to the generated sparse class; membership
// is checked and DomainError raised otherwise. ex_f is ex(n, f).
GtBounds gt_bound(int n, int r, const PatternGraph& f, unsigned long long ex_f,
                  int gt_cap = 9);

struct StarBounds {
    unsigned long long lower = 0;  // a C(r+t-3, r) + C(b, r)
    Rational upper;                // (n/r) C(r+t-3, r-1), kept exact
};

StarBounds star_bounds(int n, int r, int t);

struct BoundEntry {
    std::string name;
    Rational left;
    Rational right;  // asserted relation is always left <= right
    enum class Verdict { pass, fail, skipped } verdict = Verdict::skipped;
    std::string note;
};

struct BoundReport {
    int n = 0;
    int r = 0;
    std::vector<std::pair<std::string, unsigned long long>> values;  // computed extremal numbers
    std::vector<BoundEntry> entries;
    bool all_pass() const;
};

// Computes the exact extremal numbers the chain touches and re-checks every
// applicable inequality between them. Cap overruns do not throw: affected
// entries come back skipped with a note.
BoundReport verify_chain(int n, int r, const PatternGraph& f, const Config& cfg = {});

}  // namespace berge
