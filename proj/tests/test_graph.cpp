#include <doctest.h>

#include <algorithm>
#include <set>

#include "arrangelab/corpus.h"
#include "fixtures.h"

using namespace arrangelab;
using fixtures::graph;

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 2}}), std::invalid_argument);

    const Graph g = graph(4, {{3, 4}, {2, 1}, {1, 3}});
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {3, 4}});
    CHECK(g.edge_index(3, 1) == 1u);
    CHECK_FALSE(g.edge_index(2, 4).has_value());
    CHECK(g.degree(1) == 2);
    CHECK(g.connected());
    CHECK_FALSE(graph(4, {{1, 2}}).connected());
}

TEST_CASE("blocks of the two-block example graph") {
    const auto b = blocks(fixtures::two_blocks());
    REQUIRE(b.size() == 2);
    CHECK(b[0].covered_vertices() == std::vector<int>{1, 2, 3, 4});
    CHECK(b[1].covered_vertices() == std::vector<int>{4, 5, 6});
    CHECK(b[0].size() == 5);
    CHECK(b[1].size() == 3);
}

TEST_CASE("blocks of trees, complete graphs and the empty graph") {
    CHECK(blocks(graph(4, {{1, 2}, {2, 3}, {2, 4}})).size() == 3);
    CHECK(blocks(path_graph(4)).size() == 3);
    const auto k4 = blocks(complete_graph(4));
    REQUIRE(k4.size() == 1);
    CHECK(k4[0] == complete_graph(4));
    CHECK(blocks(Graph(3, {})).empty());
}

// Removing any vertex of a block with at least three vertices leaves it connected.
static bool doubly_connected(const Graph& b) {
    const auto vs = b.covered_vertices();
    if (vs.size() <= 2) return true;
    for (int cut : vs) {
        std::vector<Edge> rest;
        for (const Edge& e : b.edges())
            if (e.u != cut && e.v != cut) rest.push_back(e);
        std::set<int> seen{vs.front() == cut ? vs[1] : vs.front()};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const Edge& e : rest) {
                if (seen.count(e.u) != seen.count(e.v)) {
                    seen.insert(e.u);
                    seen.insert(e.v);
                    grew = true;
                }
            }
        }
        if (seen.size() != vs.size() - 1) return false;
    }
    return true;
}

TEST_CASE("blocks partition the edges into doubly connected pieces sharing at most one vertex") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            const auto bs = blocks(g);
            std::vector<Edge> all;
            for (const auto& b : bs) {
                CHECK(doubly_connected(b));
                all.insert(all.end(), b.edges().begin(), b.edges().end());
            }
            std::sort(all.begin(), all.end());
            CHECK(all == g.edges());
            for (std::size_t i = 0; i < bs.size(); ++i) {
                for (std::size_t j = i + 1; j < bs.size(); ++j) {
                    std::vector<int> common;
                    const auto a = bs[i].covered_vertices(), b = bs[j].covered_vertices();
                    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                    CHECK(common.size() <= 1);
                }
            }
        }
    }
}

TEST_CASE("simplicial vertices") {
    for (int v = 1; v <= 4; ++v) CHECK(is_simplicial(complete_graph(4), v));
    CHECK_FALSE(is_simplicial(cycle_graph(4), 1));
    CHECK(is_simplicial(fixtures::kite(), 2));
    CHECK_FALSE(is_simplicial(fixtures::kite(), 1));
    CHECK_THROWS_AS(is_simplicial(cycle_graph(4), 5), std::out_of_range);
    CHECK_THROWS_AS(is_simplicial(cycle_graph(4), 0), std::out_of_range);
}

TEST_CASE("chordality certificates on named graphs") {
    const auto fig2 = chordality(fixtures::kite());
    REQUIRE(std::holds_alternative<EliminationOrdering>(fig2));
    CHECK(validates(fixtures::kite(), std::get<EliminationOrdering>(fig2)));
    CHECK(validates(fixtures::kite(), EliminationOrdering{{2, 1, 5, 4, 3}}));
    CHECK_FALSE(validates(fixtures::kite(), EliminationOrdering{{1, 2, 5, 4, 3}}));

    const auto c4 = chordality(cycle_graph(4));
    REQUIRE(std::holds_alternative<ChordlessCycle>(c4));
    CHECK(std::get<ChordlessCycle>(c4).cycle == std::vector<int>{1, 2, 3, 4});

    CHECK(is_chordal(complete_graph(5)));
    CHECK(is_chordal(path_graph(5)));
    CHECK(is_chordal(Graph(0, {})));
    CHECK_FALSE(is_chordal(cycle_graph(5)));
    CHECK(std::get<ChordlessCycle>(chordality(cycle_graph(6))).cycle.size() == 6);
}

TEST_CASE("chordality agrees with greedy simplicial elimination and certificates validate") {
    std::size_t chordal = 0, total = 0;
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : all_graphs(n)) {
            const auto cert = chordality(g);
            const bool yes = std::holds_alternative<EliminationOrdering>(cert);
            CHECK(yes == fixtures::chordal_by_elimination(g));
            if (yes) {
                CHECK(validates(g, std::get<EliminationOrdering>(cert)));
            } else {
                const auto& c = std::get<ChordlessCycle>(cert);
                CHECK(c.cycle.size() >= 4);
                CHECK(validates(g, c));
            }
            chordal += yes;
            ++total;
        }
    }
    CHECK(total == 1 + 2 + 4 + 11 + 34 + 156);
    // Chordal graphs on 1..6 vertices: 1, 2, 4, 10, 27, 94.
    CHECK(chordal == 1 + 2 + 4 + 10 + 27 + 94);
}

TEST_CASE("certificate validation rejects bad witnesses") {
    const Graph c5 = cycle_graph(5);
    CHECK_FALSE(validates(c5, EliminationOrdering{{1, 2, 3, 4, 5}}));
    CHECK_FALSE(validates(c5, EliminationOrdering{{1, 2, 3}}));
    CHECK_FALSE(validates(complete_graph(4), ChordlessCycle{{1, 2, 3, 4}}));
    CHECK_FALSE(validates(c5, ChordlessCycle{{1, 2, 3}}));
}

TEST_CASE("topological order prefers the smallest label and reports cycles") {
    Digraph d(5);
    d.add_arc(2, 1);
    d.add_arc(2, 3);
    d.add_arc(2, 5);
    d.add_arc(1, 3);
    d.add_arc(1, 4);
    d.add_arc(1, 5);
    d.add_arc(5, 3);
    d.add_arc(5, 4);
    d.add_arc(4, 3);
    CHECK(d.arc_count() == 9);
    auto order = topological_order(d);
    REQUIRE(std::holds_alternative<std::vector<int>>(order));
    CHECK(std::get<std::vector<int>>(order) == std::vector<int>{2, 1, 5, 4, 3});

    d.add_arc(3, 2);
    auto cyc = topological_order(d);
    REQUIRE(std::holds_alternative<DirectedCycle>(cyc));
    const auto& c = std::get<DirectedCycle>(cyc).cycle;
    REQUIRE(c.size() >= 2);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& out = d.out(c[i]);
        CHECK(std::find(out.begin(), out.end(), c[(i + 1) % c.size()]) != out.end());
    }
}
