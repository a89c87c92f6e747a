#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "arrangelab/campaign.h"
#include "arrangelab/corpus.h"
#include "arrangelab/errors.h"
#include "arrangelab/graph_io.h"
#include "fixtures.h"

using namespace arrangelab;

namespace {

// Proper k-colourings by exhaustive search.
std::int64_t count_colourings(const Graph& g, int k) {
    std::vector<int> colour(static_cast<std::size_t>(g.order()) + 1, -1);
    std::function<std::int64_t(int)> go = [&](int v) -> std::int64_t {
        if (v > g.order()) return 1;
        std::int64_t total = 0;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (const Edge& e : g.edges())
                if ((e.u == v && e.v < v && colour[e.v] == c) || (e.v == v && e.u < v && colour[e.u] == c)) ok = false;
            if (!ok) continue;
            colour[v] = c;
            total += go(v + 1);
        }
        colour[v] = -1;
        return total;
    };
    return go(1);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int a = perm[e.u - 1], b = perm[e.v - 1];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(g.order(), edges);
}

}  // namespace

TEST_CASE("deletion-contraction on named graphs") {
    CHECK(oracle::chromatic_polynomial_dc(complete_graph(3)).to_string() == "t^3 - 3t^2 + 2t");
    CHECK(oracle::chromatic_polynomial_dc(cycle_graph(4)).to_string() == "t^4 - 4t^3 + 6t^2 - 3t");
    CHECK(oracle::chromatic_polynomial_dc(complete_graph(2)).to_string() == "t^2 - t");
    CHECK(oracle::chromatic_polynomial_dc(Graph(3, {})) == IntPolynomial::monomial(1, 3));
    CHECK(oracle::chromatic_polynomial_dc(Graph(0, {})) == IntPolynomial::monomial(1, 0));
    CHECK_THROWS_AS(oracle::chromatic_polynomial_dc(complete_graph(9)), BoundExceeded);
}

TEST_CASE("deletion-contraction counts colourings") {
    for (int n = 1; n <= 5; ++n) {
        for (const Graph& g : all_graphs(n)) {
            const auto p = oracle::chromatic_polynomial_dc(g);
            for (int k = 0; k <= 4; ++k) CHECK(p.evaluate(k) == count_colourings(g, k));
        }
    }
}

TEST_CASE("characteristic polynomial equals the chromatic polynomial on connected graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : connected_graphs(n))
            CHECK(characteristic_polynomial(build_lattice(Arrangement::graphical(g))) ==
                  oracle::chromatic_polynomial_dc(g));
    }
}

TEST_CASE("graph counts") {
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044};
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(all_graphs(n).size() == all[n - 1]);
        CHECK(connected_graphs(n).size() == connected[n - 1]);
    }
    CHECK_THROWS_AS(all_graphs(0), std::invalid_argument);
    CHECK_THROWS_AS(all_graphs(10), BoundExceeded);
}

TEST_CASE("generated graphs are pairwise non-isomorphic and canonical") {
    for (int n = 1; n <= 5; ++n) {
        const auto gs = all_graphs(n);
        for (std::size_t i = 0; i < gs.size(); ++i) {
            CHECK(canonical_form(gs[i]) == gs[i]);
            for (std::size_t j = i + 1; j < gs.size(); ++j) CHECK_FALSE(isomorphic(gs[i], gs[j]));
        }
    }
}

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(20240611);
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : connected_graphs(n)) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 1);
            std::shuffle(perm.begin(), perm.end(), rng);
            const Graph h = relabel(g, perm);
            CHECK(canonical_form(h) == canonical_form(g));
            CHECK(isomorphic(g, h));
        }
    }
    CHECK_FALSE(isomorphic(cycle_graph(4), path_graph(4)));
    CHECK_FALSE(isomorphic(complete_graph(3), complete_graph(4)));
}

TEST_CASE("naive rank and intersections") {
    const Arrangement a = Arrangement::graphical(complete_graph(4));
    CHECK(oracle::naive_rank(a, a.all()) == 3);
    CHECK(oracle::naive_rank(a, HyperplaneSet(a.size())) == 0);
    const auto basis = oracle::intersection_basis(a, a.all());
    REQUIRE(basis.size() == 1);
    for (std::size_t i = 1; i < 4; ++i) CHECK(basis[0][i] == basis[0][0]);
    CHECK(oracle::intersection_basis(a, HyperplaneSet(a.size())).size() == 4);
}

TEST_CASE("naive modularity on small lattices") {
    const auto k4 = build_lattice(Arrangement::graphical(complete_graph(4)));
    std::size_t modular = 0;
    for (FlatId x = 0; x < k4.size(); ++x) modular += oracle::naive_modular(k4, x);
    // Only the three flats made of two disjoint edges fail.
    CHECK(modular == k4.size() - 3);
    CHECK(oracle::enumerate_flats_bruteforce(Arrangement::graphical(complete_graph(4))).size() == 15);
    CHECK_THROWS_AS(oracle::enumerate_flats_bruteforce(Arrangement::graphical(complete_graph(7))), BoundExceeded);
}

TEST_CASE("theorem suite on named graphs") {
    const auto k4 = theorem_suite(complete_graph(4));
    CHECK_FALSE(k4.failed());
    CHECK_FALSE(k4.skipped());
    REQUIRE(k4.outcomes.size() == 4);
    for (const auto& o : k4.outcomes) {
        CHECK(o.status == CheckStatus::passed);
        if (o.id == Theorem::T3) CHECK(o.cases == 203);  // Bell(6)
        if (o.id == Theorem::T4) CHECK(o.cases == 18);
    }
    const auto c4 = theorem_suite(cycle_graph(4));
    CHECK_FALSE(c4.failed());
    const auto j = c4.to_json();
    CHECK(j["graph6"] == write_graph6(cycle_graph(4)));

    SuiteOptions opts;
    opts.t3_max_hyperplanes = 3;
    const auto skipped = theorem_suite(complete_graph(4), opts);
    CHECK(skipped.skipped());
    CHECK_FALSE(skipped.failed());
}

TEST_CASE("theorem names") {
    CHECK(parse_theorem("t3") == Theorem::T3);
    CHECK(theorem_name(Theorem::T2) == "T2");
    CHECK_THROWS_AS(parse_theorem("T5"), std::invalid_argument);
    CHECK(parse_theorem_list("") == all_theorems());
    CHECK(parse_theorem_list("T1,T4") == std::set<Theorem>{Theorem::T1, Theorem::T4});
}

TEST_CASE("campaign over small orders") {
    CampaignOptions opts;
    opts.max_n = 5;
    opts.threads = 3;
    const auto r = campaign(opts);
    CHECK(r.exit_code() == 0);
    CHECK(r.graphs == 1 + 1 + 2 + 6 + 21);
    REQUIRE(r.orders.size() == 5);
    CHECK(r.orders[4].graphs == 21);
    CHECK(r.orders[4].passed == 21);
    CHECK(r.failures.empty());
    CHECK(r.cases.at(Theorem::T1) > 0);
    const auto j = r.to_json();
    CHECK(j["status"] == "pass");

    opts.connected_only = false;
    opts.max_n = 4;
    opts.threads = 1;
    CHECK(campaign(opts).graphs == 1 + 2 + 4 + 11);

    opts.max_n = 8;
    CHECK_THROWS_AS(campaign(opts), BoundExceeded);
}

TEST_CASE("campaign over a supplied corpus") {
    CampaignOptions opts;
    opts.corpus = parse_graph6_corpus("D~{\nCr\nE~~w\n");
    opts.suite.checks = {Theorem::T1, Theorem::T2};
    const auto r = campaign(opts);
    CHECK(r.graphs == 3);
    CHECK(r.exit_code() == 0);
    // K5 and K6 have 5!/2 and 6!/2 nice partitions, the four-cycle none.
    CHECK(r.cases.at(Theorem::T2) == 60 + 360);

    opts.suite.checks = {Theorem::T3};
    opts.suite.t3_max_hyperplanes = 6;
    const auto skipped = campaign(opts);
    CHECK(skipped.skipped == 2);
    CHECK(skipped.exit_code() == 2);
    CHECK(skipped.to_json()["status"] == "bound");
}
