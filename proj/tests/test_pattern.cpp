#include <doctest.h>

#include <random>

#include "berge/errors.hpp"
#include "berge/pattern.hpp"
#include "oracle.hpp"

using namespace berge;

TEST_CASE("pattern wraps a 2-uniform hypergraph") {
    PatternGraph f(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(f.t() == 4);
    CHECK(f.q() == 3);
    CHECK(f.adjacent(2, 3));
    CHECK(f.adjacent(3, 2));
    CHECK(!f.adjacent(1, 3));
    CHECK(!f.adjacent(2, 2));
    CHECK(f.degree(2) == 2);
    CHECK(f.degree(4) == 1);
    CHECK(f.edge_pairs() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
    CHECK_THROWS_AS(PatternGraph(Hypergraph(3, 3, {VertexSet{1, 2, 3}})), UniformityError);
}

TEST_CASE("star flag covers every common-vertex edge set") {
    CHECK(PatternGraph(2, {{1, 2}}).is_star());
    CHECK(path_graph(3).is_star());
    CHECK(star_graph(3).is_star());
    CHECK(!path_graph(4).is_star());
    CHECK(!cycle_graph(3).is_star());
    CHECK(!matching_graph(2).is_star());
}

TEST_CASE("strip keeps edge structure and drops isolated vertices") {
    PatternGraph f(3, {{1, 2}});
    CHECK(f.has_isolated_vertices());
    PatternGraph s = strip_isolated(f);
    CHECK(s.t() == 2);
    CHECK(s.q() == 1);
    CHECK(s.adjacent(1, 2));
    CHECK(!s.has_isolated_vertices());

    PatternGraph c = cycle_graph(4);
    CHECK(!c.has_isolated_vertices());
    CHECK(strip_isolated(c) == c);

    PatternGraph none(3, {});
    PatternGraph st = strip_isolated(none);
    CHECK(st.t() == 0);
    CHECK(st.q() == 0);

    // relabelling keeps relative order of the survivors
    PatternGraph gap(5, {{2, 4}, {4, 5}});
    PatternGraph sg = strip_isolated(gap);
    CHECK(sg.t() == 3);
    CHECK(sg.adjacent(1, 2));
    CHECK(sg.adjacent(2, 3));
    CHECK(!sg.adjacent(1, 3));
}

TEST_CASE("clique counting") {
    CHECK(count_cliques(complete_graph(4), 3) == 4);
    CHECK(count_cliques(complete_graph(4), 2) == 6);
    CHECK(count_cliques(cycle_graph(5), 3) == 0);
    CHECK(count_cliques(cycle_graph(5), 2) == 5);
    CHECK(count_cliques(path_graph(4), 1) == 4);
    CHECK(count_cliques(path_graph(4), 5) == 0);
    // complete 3-partite 2+2+1, transversal triples only
    PatternGraph p3(5, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    CHECK(count_cliques(p3, 3) == 4);
    CHECK(count_cliques(p3, 4) == 0);
    CHECK_THROWS_AS(count_cliques(p3, 0), ParameterError);
}

TEST_CASE("chromatic number on landmarks") {
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(path_graph(3)) == 2);
    CHECK(chromatic_number(path_graph(1)) == 1);
    CHECK(chromatic_number(matching_graph(3)) == 2);
    CHECK(chromatic_number(cycle_graph(6)) == 2);
    CHECK_THROWS_AS(chromatic_number(complete_graph(13), 12), SizeError);
}

TEST_CASE("chromatic number lower bounded by clique number on random graphs") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        PatternGraph g = oracle::random_graph(rng, 7, 9);
        int chi = chromatic_number(g);
        for (int s = 2; s <= 7; ++s)
            if (count_cliques(g, s) > 0) CHECK(chi >= s);
        // chi colors suffice, chi-1 must not: re-check by counting color classes
        CHECK(chi <= 7);
        if (g.q() > 0) CHECK(chi >= 2);
    }
}

TEST_CASE("builders produce the advertised graphs") {
    PatternGraph p = path_graph(4);
    CHECK(p.t() == 4);
    CHECK(p.q() == 3);
    PatternGraph c = cycle_graph(3);
    CHECK(c.q() == 3);
    CHECK(c.adjacent(1, 3));
    PatternGraph k = complete_graph(5);
    CHECK(k.q() == 10);
    PatternGraph s = star_graph(4);
    CHECK(s.t() == 5);
    CHECK(s.q() == 4);
    CHECK(s.degree(1) == 4);
    PatternGraph m = matching_graph(2);
    CHECK(m.t() == 4);
    CHECK(m.q() == 2);
    CHECK(m.adjacent(1, 2));
    CHECK(m.adjacent(3, 4));
    CHECK(!m.adjacent(2, 3));
    CHECK_THROWS_AS(cycle_graph(2), ParameterError);
    CHECK_THROWS_AS(path_graph(0), ParameterError);
    CHECK_THROWS_AS(star_graph(0), ParameterError);
    CHECK_THROWS_AS(matching_graph(0), ParameterError);
}
