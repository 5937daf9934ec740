#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "berge/errors.hpp"
#include "berge/hypergraph.hpp"
#include "oracle.hpp"

using namespace berge;

TEST_CASE("vertex set canonicalizes and answers queries") {
    VertexSet s({4, 1, 3});
    CHECK(s.vertices() == std::vector<int>{1, 3, 4});
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK(!s.contains(2));
    CHECK(s.str() == "{1,3,4}");
    CHECK_THROWS_AS(VertexSet({2, 2}), ParameterError);
    CHECK(VertexSet(std::vector<int>{}).empty());
}

TEST_CASE("vertex set algebra") {
    VertexSet a{1, 2, 3}, b{2, 3, 5};
    CHECK(a.intersection_size(b) == 2);
    CHECK(a.intersect(b) == VertexSet{2, 3});
    CHECK(a.unite(b) == VertexSet{1, 2, 3, 5});
    CHECK(a.with(9) == VertexSet{1, 2, 3, 9});
    CHECK(a.with(2) == a);
    CHECK(a.without(2) == VertexSet{1, 3});
    CHECK(a.without(7) == a);
    CHECK(VertexSet{2, 3}.subset_of(a));
    CHECK(!a.subset_of(b));
    CHECK(VertexSet{1, 2} < VertexSet{1, 3});
    CHECK(VertexSet{1, 3} < VertexSet{2, 3});
}

TEST_CASE("vertex set works past the 64 bit mask range") {
    VertexSet big{1, 70, 200};
    CHECK(big.contains(70));
    CHECK(!big.contains(71));
    CHECK(VertexSet{1, 70}.subset_of(big));
    CHECK(big.intersection_size(VertexSet{1, 70}) == 2);
    CHECK(big.intersect(VertexSet{3, 200}) == VertexSet{200});
}

TEST_CASE("mask path and merge path agree on shifted copies") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        std::vector<int> xs, ys, xs_hi, ys_hi;
        for (int v = 1; v <= 20; ++v) {
            if (rng() % 3 == 0) {
                xs.push_back(v);
                xs_hi.push_back(v + 100);
            }
            if (rng() % 3 == 0) {
                ys.push_back(v);
                ys_hi.push_back(v + 100);
            }
        }
        VertexSet a(xs), b(ys), ah(xs_hi), bh(ys_hi);
        CHECK(a.intersection_size(b) == ah.intersection_size(bh));
        CHECK(a.subset_of(b) == ah.subset_of(bh));
        CHECK((a == b) == (ah == bh));
    }
}

TEST_CASE("hypergraph validates input and sorts edges") {
    Hypergraph h(3, 5, {VertexSet{2, 3, 4}, VertexSet{1, 2, 4}});
    CHECK(h.r() == 3);
    CHECK(h.n() == 5);
    CHECK(h.m() == 2);
    CHECK(h.edge(0) == VertexSet{1, 2, 4});
    CHECK(h.has_edge(VertexSet{2, 3, 4}));
    CHECK(h.edge_index(VertexSet{2, 3, 4}) == 1);
    CHECK(h.edge_index(VertexSet{1, 2, 3}) == -1);
    CHECK(h.degree(4) == 2);
    CHECK(h.degree(5) == 0);
    CHECK(h.support() == std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(Hypergraph(0, 3, {}), ParameterError);
    CHECK_THROWS_AS(Hypergraph(2, -1, {}), ParameterError);
    CHECK_THROWS_AS(Hypergraph(2, 3, {VertexSet{1, 2, 3}}), StructureError);
    CHECK_THROWS_AS(Hypergraph(2, 3, {VertexSet{3, 4}}), StructureError);
    CHECK_THROWS_AS(Hypergraph(2, 3, {VertexSet{1, 2}, VertexSet{1, 2}}), StructureError);
    CHECK(Hypergraph::empty(3, 6).m() == 0);
    CHECK(Hypergraph::empty(3, 6).n() == 6);
}

TEST_CASE("partition lookup and groups") {
    Partition p(3, {1, 1, 2, 2, 3, 3});
    CHECK(p.size() == 6);
    CHECK(p.part_of(3) == 2);
    auto g = p.groups();
    REQUIRE(g.size() == 3);
    CHECK(g[0] == std::vector<int>{1, 2});
    CHECK(g[2] == std::vector<int>{5, 6});
    CHECK_THROWS_AS(Partition(0, {}), ParameterError);
    CHECK_THROWS_AS(Partition(2, {1, 3}), ParameterError);
    CHECK_THROWS_AS(p.part_of(7), ParameterError);
}

TEST_CASE("shadow of a single triple") {
    Hypergraph h(3, 3, {VertexSet{1, 2, 3}});
    Hypergraph s2 = shadow(h, 2);
    CHECK(s2.r() == 2);
    CHECK(s2.m() == 3);
    CHECK(s2.has_edge(VertexSet{1, 3}));
    Hypergraph s1 = shadow(h, 1);
    CHECK(s1.m() == 3);
    CHECK(s1.has_edge(VertexSet{2}));
    CHECK_THROWS_AS(shadow(h, 0), ParameterError);
    CHECK_THROWS_AS(shadow(h, 4), ParameterError);
}

TEST_CASE("shadow merges overlapping edges") {
    Hypergraph h(3, 4, {VertexSet{1, 2, 3}, VertexSet{1, 2, 4}});
    Hypergraph s2 = shadow(h, 2);
    CHECK(s2.m() == 5);
    CHECK(!s2.has_edge(VertexSet{3, 4}));
}

TEST_CASE("shadow size matches a direct subset count") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 30; ++it) {
        Hypergraph h = oracle::random_hypergraph(rng, 3, 7, 6);
        for (int s = 1; s <= 3; ++s) {
            std::vector<VertexSet> all;
            for (const VertexSet& e : h.edges())
                for (const VertexSet& sub : subsets_of(e, s)) all.push_back(sub);
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            CHECK(shadow(h, s).m() == static_cast<int>(all.size()));
        }
    }
}

TEST_CASE("codegree counts containing edges") {
    Hypergraph h(3, 5, {VertexSet{1, 2, 3}, VertexSet{1, 2, 4}, VertexSet{1, 2, 5}});
    CHECK(codegree(h, VertexSet{1, 2}) == 3);
    CHECK(codegree(h, VertexSet{3, 4}) == 0);
    CHECK(codegree(h, VertexSet(std::vector<int>{})) == 3);
    CHECK(codegree(h, VertexSet{9}) == 0);
}

TEST_CASE("r-partiteness check") {
    Partition p(3, {1, 1, 2, 2, 3, 3});
    CHECK(is_r_partite(Hypergraph(3, 6, {VertexSet{1, 3, 5}}), p));
    CHECK(!is_r_partite(Hypergraph(3, 6, {VertexSet{1, 2, 5}}), p));
    CHECK(is_r_partite(Hypergraph::empty(3, 6), p));
    CHECK(!is_r_partite(Hypergraph::empty(2, 6), p));
}

TEST_CASE("part-deleted trace collapses duplicates and keeps ids") {
    Partition p(3, {1, 1, 2, 2, 3, 3});
    Hypergraph h(3, 6, {VertexSet{1, 3, 5}, VertexSet{1, 3, 6}});
    Hypergraph t3 = trace_minus_part(h, p, 3);
    CHECK(t3.r() == 2);
    CHECK(t3.n() == 6);
    CHECK(t3.m() == 1);
    CHECK(t3.has_edge(VertexSet{1, 3}));
    Hypergraph t1 = trace_minus_part(Hypergraph(3, 6, {VertexSet{1, 3, 5}}), p, 1);
    CHECK(t1.edges() == std::vector<VertexSet>{VertexSet{3, 5}});
    Hypergraph t2 =
        trace_minus_part(Hypergraph(3, 6, {VertexSet{1, 3, 5}, VertexSet{2, 4, 6}}), p, 2);
    CHECK(t2.m() == 2);
    CHECK(t2.has_edge(VertexSet{1, 5}));
    CHECK(t2.has_edge(VertexSet{2, 6}));
    CHECK_THROWS_AS(trace_minus_part(h, p, 4), ParameterError);
    CHECK_THROWS_AS(trace_minus_part(Hypergraph(3, 6, {VertexSet{1, 2, 5}}), p, 1),
                    StructureError);
}

TEST_CASE("subsets_of enumerates in ascending lexicographic order") {
    VertexSet s{1, 2, 3, 4};
    auto twos = subsets_of(s, 2);
    REQUIRE(twos.size() == 6);
    CHECK(twos.front() == VertexSet{1, 2});
    CHECK(twos[1] == VertexSet{1, 3});
    CHECK(twos.back() == VertexSet{3, 4});
    CHECK(subsets_of(s, 0).size() == 1);
    CHECK(subsets_of(s, 5).empty());
    CHECK_THROWS_AS(subsets_of(s, -1), ParameterError);
}
