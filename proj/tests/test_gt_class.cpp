#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "berge/errors.hpp"
#include "berge/gt_class.hpp"
#include "berge/pattern.hpp"
#include "oracle.hpp"

using namespace berge;

namespace {

PatternGraph replay(const std::vector<ApexStep>& trace) {
    PatternGraph g(2, {{1, 2}});
    for (const ApexStep& s : trace) g = f_plus(g, s.x, s.y);
    return g;
}

}  // namespace

TEST_CASE("member counts per level") {
    const std::vector<size_t> counts = {1, 1, 1, 2, 5, 12};  // t = 2..7
    for (int t = 2; t <= 7; ++t) CHECK(generate_gt(t).size() == counts[static_cast<size_t>(t - 2)]);
    CHECK_THROWS_AS(generate_gt(1), ParameterError);
    CHECK_THROWS_AS(generate_gt(10, 9), SizeError);
}

TEST_CASE("level invariants up to seven vertices") {
    for (int t = 2; t <= 7; ++t) {
        std::set<std::uint64_t> codes;
        std::uint64_t prev = 0;
        bool first = true;
        for (const GTMember& m : generate_gt(t)) {
            CHECK(m.graph.t() == t);
            CHECK(m.graph.q() == 2 * t - 3);
            CHECK(chromatic_number(m.graph) <= 3);
            CHECK(!m.graph.has_isolated_vertices());
            std::uint64_t code = canonical_code(m.graph);
            CHECK(codes.insert(code).second);  // pairwise non-isomorphic
            if (!first) CHECK(prev < code);    // listed by canonical code
            prev = code;
            first = false;
            // the growth trace rebuilds the member vertex for vertex
            CHECK(static_cast<int>(m.trace.size()) == t - 2);
            CHECK(replay(m.trace) == m.graph);
            for (size_t i = 0; i < m.trace.size(); ++i)
                CHECK(m.trace[i].apex == static_cast<int>(i) + 3);
        }
    }
}

TEST_CASE("levels agree with the brute-force grower") {
    for (int t = 2; t <= 6; ++t) {
        auto lib = generate_gt(t);
        auto ora = oracle::gt_members(t);
        REQUIRE(lib.size() == ora.size());
        for (const GTMember& m : lib) {
            bool matched = false;
            for (const PatternGraph& g : ora)
                if (oracle::iso(m.graph, g)) matched = true;
            CHECK(matched);
        }
    }
}

TEST_CASE("apexing any member lands in the next level") {
    for (int t = 2; t <= 6; ++t) {
        std::set<std::uint64_t> next;
        for (const GTMember& m : generate_gt(t + 1)) next.insert(canonical_code(m.graph));
        for (const GTMember& m : generate_gt(t))
            for (auto [x, y] : m.graph.edge_pairs())
                CHECK(next.count(canonical_code(f_plus(m.graph, x, y))) == 1);
    }
}

TEST_CASE("the two five-vertex members") {
    auto lvl = generate_gt(5);
    REQUIRE(lvl.size() == 2);
    auto pairs = [](const GTMember& m) { return m.graph.edge_pairs(); };
    CHECK(pairs(lvl[0]) == std::vector<std::pair<int, int>>{
                               {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    CHECK(pairs(lvl[1]) == std::vector<std::pair<int, int>>{
                               {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {3, 5}});
    // the five-cycle spans the second member but not the first
    CHECK(!subgraph_embed(cycle_graph(5), lvl[0].graph));
    auto emb = subgraph_embed(cycle_graph(5), lvl[1].graph);
    REQUIRE(emb.has_value());
    CHECK(*emb == std::vector<int>{1, 4, 2, 3, 5});
}

TEST_CASE("subgraph embedding basics") {
    CHECK(subgraph_embed(path_graph(3), cycle_graph(3)).has_value());
    CHECK(!subgraph_embed(complete_graph(4), PatternGraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3},
                                                              {2, 4}})));
    PatternGraph c4 = cycle_graph(4);
    PatternGraph k5 = complete_graph(5);
    auto emb = subgraph_embed(c4, k5);
    REQUIRE(emb.has_value());
    for (auto [a, b] : c4.edge_pairs())
        CHECK(k5.adjacent((*emb)[static_cast<size_t>(a) - 1],
                          (*emb)[static_cast<size_t>(b) - 1]));
    CHECK(!subgraph_embed(cycle_graph(4), path_graph(6)));
}

TEST_CASE("membership accepts cycles paths and trees") {
    for (int t = 3; t <= 7; ++t) {
        PatternGraph cyc = cycle_graph(t);
        auto w = is_in_gt(cyc);
        REQUIRE(w.has_value());
        CHECK(w->member.graph.t() == t);
        // witness embedding is spanning and maps edges to edges
        std::vector<int> seen = w->embedding;
        std::sort(seen.begin(), seen.end());
        for (int i = 1; i <= t; ++i) CHECK(seen[static_cast<size_t>(i) - 1] == i);
        for (auto [a, b] : cyc.edge_pairs())
            CHECK(w->member.graph.adjacent(w->embedding[static_cast<size_t>(a) - 1],
                                           w->embedding[static_cast<size_t>(b) - 1]));
    }
    for (int t = 2; t <= 7; ++t) CHECK(is_in_gt(path_graph(t)).has_value());

    // every labelled tree on up to six vertices
    for (int t = 2; t <= 6; ++t) {
        if (t == 2) {
            CHECK(is_in_gt(oracle::tree_from_pruefer({})).has_value());
            continue;
        }
        std::vector<int> seq(static_cast<size_t>(t - 2), 1);
        for (;;) {
            CHECK(is_in_gt(oracle::tree_from_pruefer(seq)).has_value());
            size_t i = 0;
            while (i < seq.size() && seq[i] == t) seq[i++] = 1;
            if (i == seq.size()) break;
            ++seq[i];
        }
    }
}

TEST_CASE("membership rejections") {
    CHECK(!is_in_gt(complete_graph(4)));
    CHECK(!is_in_gt(complete_graph(5)));
    CHECK_THROWS_AS(is_in_gt(PatternGraph(3, {})), PatternError);
    CHECK_THROWS_AS(is_in_gt(complete_graph(12), 9), SizeError);
}

TEST_CASE("membership matches the oracle on random graphs") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 80; ++it) {
        int n = 3 + static_cast<int>(rng() % 4);
        int m = 1 + static_cast<int>(rng() % (2 * n - 3));
        PatternGraph g = oracle::random_graph(rng, n, m);
        if (g.q() == 0) continue;
        PatternGraph s = g.has_isolated_vertices() ? strip_isolated(g) : g;
        if (s.q() == 0) continue;
        auto w = is_in_gt(s, 7);
        CHECK(w.has_value() == oracle::in_gt(s, 7));
        if (w) {
            CHECK(w->member.graph.t() == s.t());
            for (auto [a, b] : s.edge_pairs())
                CHECK(w->member.graph.adjacent(w->embedding[static_cast<size_t>(a) - 1],
                                               w->embedding[static_cast<size_t>(b) - 1]));
        }
    }
}

TEST_CASE("apex builder") {
    CHECK(oracle::iso(f_plus(PatternGraph(2, {{1, 2}}), 1, 2), cycle_graph(3)));
    PatternGraph k4e = f_plus(cycle_graph(3), 2, 3);
    CHECK(k4e.t() == 4);
    CHECK(k4e.q() == 5);
    CHECK(oracle::iso(k4e, f_plus(cycle_graph(3), 1, 2)));
    CHECK_THROWS_AS(f_plus(path_graph(3), 1, 3), ParameterError);
}

TEST_CASE("canonical code is an isomorphism invariant") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + static_cast<int>(rng() % 5);
        PatternGraph g = oracle::random_graph(rng, n, static_cast<int>(rng() % (n * 2)));
        std::vector<int> perm(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> relabeled;
        for (auto [a, b] : g.edge_pairs())
            relabeled.emplace_back(perm[static_cast<size_t>(a) - 1],
                                   perm[static_cast<size_t>(b) - 1]);
        CHECK(canonical_code(g) == canonical_code(PatternGraph(n, relabeled)));
    }
    CHECK(canonical_code(path_graph(4)) != canonical_code(cycle_graph(4)));
    CHECK(canonical_code(cycle_graph(3)) != canonical_code(path_graph(3)));
}
