#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "berge/detect.hpp"
#include "berge/errors.hpp"
#include "berge/pattern.hpp"
#include "oracle.hpp"

using namespace berge;

namespace {

Hypergraph triples(int n, std::vector<std::vector<int>> es) {
    std::vector<VertexSet> out;
    for (auto& e : es) out.emplace_back(e);
    return Hypergraph(3, n, std::move(out));
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("the four triangle systems split between the two modes") {
    Hypergraph s1 = triples(4, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    Hypergraph s2 = triples(5, {{1, 2, 4}, {1, 3, 4}, {2, 3, 5}});
    Hypergraph s3 = triples(6, {{1, 2, 4}, {1, 3, 5}, {2, 3, 6}});
    Hypergraph s4 = triples(5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}});
    PatternGraph c3 = cycle_graph(3);

    for (const Hypergraph* h : {&s1, &s2, &s3, &s4}) {
        auto b = find_berge(*h, c3);
        REQUIRE(b.has_value());
        CHECK(verify_certificate(*h, c3, *b));
    }
    for (const Hypergraph* h : {&s1, &s2, &s3}) {
        auto c = find_induced_berge(*h, c3);
        REQUIRE(c.has_value());
        CHECK(verify_certificate(*h, c3, *c));
        CHECK(sorted(c->base) == std::vector<int>{1, 2, 3});
    }
    CHECK(!find_induced_berge(s4, c3));
}

TEST_CASE("too few edges is an immediate miss") {
    Hypergraph h = triples(4, {{1, 2, 3}, {1, 2, 4}});
    CHECK(!find_berge(h, cycle_graph(3)));
    CHECK(!find_induced_berge(h, cycle_graph(3)));
}

TEST_CASE("graph hosts reduce both modes to subgraph containment") {
    Hypergraph c4(2, 4, {VertexSet{1, 2}, VertexSet{2, 3}, VertexSet{3, 4}, VertexSet{1, 4}});
    CHECK(!find_berge(c4, cycle_graph(3)));
    CHECK(!find_induced_berge(c4, cycle_graph(3)));
    CHECK(find_berge(c4, path_graph(4)).has_value());
    CHECK(find_induced_berge(c4, cycle_graph(4)).has_value());

    std::mt19937_64 rng(5);
    for (int it = 0; it < 60; ++it) {
        Hypergraph h = oracle::random_hypergraph(rng, 2, 6, 7);
        PatternGraph host_view(h);
        for (const PatternGraph& f : {cycle_graph(3), path_graph(4), star_graph(3)}) {
            bool sub = oracle::subgraph(f, host_view);
            CHECK(find_berge(h, f).has_value() == sub);
            CHECK(find_induced_berge(h, f).has_value() == sub);
        }
    }
}

TEST_CASE("finders agree with the brute-force oracle") {
    std::mt19937_64 rng(99);
    std::vector<PatternGraph> pats = {PatternGraph(2, {{1, 2}}), path_graph(3), cycle_graph(3),
                                      star_graph(3)};
    for (int r : {2, 3}) {
        for (int it = 0; it < 40; ++it) {
            int n = 4 + static_cast<int>(rng() % 3);
            int m = 2 + static_cast<int>(rng() % 7);
            Hypergraph h = oracle::random_hypergraph(rng, r, n, m);
            for (const PatternGraph& f : pats) {
                auto b = find_berge(h, f);
                auto i = find_induced_berge(h, f);
                CHECK(b.has_value() == oracle::contains(h, f, BergeMode::berge));
                CHECK(i.has_value() == oracle::contains(h, f, BergeMode::induced));
                if (b) CHECK(verify_certificate(h, f, *b));
                if (i) CHECK(verify_certificate(h, f, *i));
                if (i) CHECK(b.has_value());  // induced copies are berge copies
            }
        }
    }
}

TEST_CASE("presence survives adding edges") {
    std::mt19937_64 rng(17);
    PatternGraph c3 = cycle_graph(3);
    for (int it = 0; it < 40; ++it) {
        Hypergraph h = oracle::random_hypergraph(rng, 3, 6, 5);
        if (!find_berge(h, c3)) continue;
        Hypergraph big = oracle::random_hypergraph(rng, 3, 6, 12);
        std::vector<VertexSet> merged = h.edges();
        for (const VertexSet& e : big.edges())
            if (!h.has_edge(e)) merged.push_back(e);
        Hypergraph grown(3, 6, std::move(merged));
        CHECK(find_berge(grown, c3).has_value());
    }
}

TEST_CASE("isolated pattern vertices are ignored") {
    Hypergraph s1 = triples(4, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    PatternGraph padded(6, {{1, 2}, {1, 3}, {2, 3}});
    auto c = find_induced_berge(s1, padded);
    REQUIRE(c.has_value());
    CHECK(c->base.size() == 3);
    CHECK(verify_certificate(s1, strip_isolated(padded), *c));
}

TEST_CASE("edgeless patterns are rejected") {
    Hypergraph h = triples(3, {{1, 2, 3}});
    CHECK_THROWS_AS(find_berge(h, PatternGraph(3, {})), PatternError);
    CHECK_THROWS_AS(find_induced_berge(h, PatternGraph(3, {})), PatternError);
}

TEST_CASE("certificate verification rejects malformed data") {
    Hypergraph h = triples(5, {{1, 2, 3}, {1, 3, 4}, {2, 3, 5}});
    PatternGraph p3 = path_graph(3);

    BergeCertificate good;
    good.mode = BergeMode::berge;
    good.base = {1, 2, 3};  // w1=1 w2=2 w3=3, P3 edges 12, 23
    good.edges = {0, 2};    // {1,2,3} covers 12, {2,3,5} covers 23
    CHECK(verify_certificate(h, p3, good));

    BergeCertificate dup = good;
    dup.edges = {0, 0};
    CHECK(!verify_certificate(h, p3, dup));

    BergeCertificate repeat = good;
    repeat.base = {1, 1, 3};
    CHECK(!verify_certificate(h, p3, repeat));

    BergeCertificate range = good;
    range.edges = {0, 9};
    CHECK(!verify_certificate(h, p3, range));

    BergeCertificate shape = good;
    shape.base = {1, 2};
    CHECK(!verify_certificate(h, p3, shape));

    BergeCertificate miss = good;
    miss.edges = {1, 2};  // {1,3,4} misses the pair {1,2}
    CHECK(!verify_certificate(h, p3, miss));

    // berge-valid but not induced: the serving edge holds a third base vertex
    BergeCertificate tight = good;
    tight.mode = BergeMode::induced;
    CHECK(!verify_certificate(h, p3, tight));  // {1,2,3} traces to {1,2,3}, not {1,2}
    Hypergraph clean = triples(6, {{1, 2, 6}, {2, 3, 5}});
    BergeCertificate ind;
    ind.mode = BergeMode::induced;
    ind.base = {1, 2, 3};
    ind.edges = {0, 1};
    CHECK(verify_certificate(clean, p3, ind));
}

TEST_CASE("pinned-edge finders only report copies through the pin") {
    Hypergraph s1 = triples(4, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    PatternGraph c3 = cycle_graph(3);
    for (int e = 0; e < s1.m(); ++e) {
        auto b = find_berge_using(s1, c3, e);
        REQUIRE(b.has_value());
        CHECK(std::find(b->edges.begin(), b->edges.end(), e) != b->edges.end());
        auto i = find_induced_berge_using(s1, c3, e);
        REQUIRE(i.has_value());
        CHECK(std::find(i->edges.begin(), i->edges.end(), e) != i->edges.end());
    }

    // the pinned edge cannot serve: {4,5,6} shares no pair with the copy
    Hypergraph far = triples(6, {{1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {4, 5, 6}});
    auto pinned = find_berge_using(far, c3, far.edge_index(VertexSet{4, 5, 6}));
    CHECK(!pinned.has_value());
    CHECK(find_berge(far, c3).has_value());
}

TEST_CASE("pinned finders match an exhaustive union over pins") {
    std::mt19937_64 rng(31);
    PatternGraph c3 = cycle_graph(3);
    for (int it = 0; it < 30; ++it) {
        Hypergraph h = oracle::random_hypergraph(rng, 3, 6, 6);
        bool any = false;
        for (int e = 0; e < h.m(); ++e) {
            auto c = find_berge_using(h, c3, e);
            if (c) {
                CHECK(verify_certificate(h, c3, *c));
                CHECK(std::find(c->edges.begin(), c->edges.end(), e) != c->edges.end());
                any = true;
            }
        }
        CHECK(any == find_berge(h, c3).has_value());
    }
}

TEST_CASE("strongly representable subfamilies") {
    std::vector<VertexSet> disjoint = {VertexSet{1}, VertexSet{2}, VertexSet{3}};
    auto r = find_strongly_representable(disjoint, 3);
    REQUIRE(r.has_value());
    CHECK(r->members == std::vector<int>{0, 1, 2});
    CHECK(r->reps == std::vector<int>{1, 2, 3});

    std::vector<VertexSet> triangle = {VertexSet{1, 2}, VertexSet{1, 3}, VertexSet{2, 3}};
    CHECK(!find_strongly_representable(triangle, 3));
    auto two = find_strongly_representable(triangle, 2);
    REQUIRE(two.has_value());
    CHECK(two->members == std::vector<int>{0, 1});
    CHECK(two->reps == std::vector<int>{2, 3});

    CHECK(!find_strongly_representable({}, 1));
    CHECK(!find_strongly_representable(disjoint, 4));
    CHECK_THROWS_AS(find_strongly_representable(disjoint, 0), ParameterError);
}

TEST_CASE("strongly representable choice is private to the subfamily") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 30; ++it) {
        Hypergraph h = oracle::random_hypergraph(rng, 2, 6, 6);
        std::vector<VertexSet> fam = h.edges();
        for (int s = 1; s <= 4; ++s) {
            auto res = find_strongly_representable(fam, s);
            if (!res) continue;
            REQUIRE(res->members.size() == static_cast<size_t>(s));
            REQUIRE(res->reps.size() == static_cast<size_t>(s));
            for (size_t i = 0; i < res->members.size(); ++i) {
                int rep = res->reps[i];
                CHECK(fam[static_cast<size_t>(res->members[i])].contains(rep));
                for (size_t j = 0; j < res->members.size(); ++j)
                    if (j != i) CHECK(!fam[static_cast<size_t>(res->members[j])].contains(rep));
            }
        }
    }
}
