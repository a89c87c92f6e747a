#include <doctest.h>

#include "arrangelab/corpus.h"
#include "arrangelab/errors.h"
#include "arrangelab/graph_io.h"
#include "fixtures.h"

using namespace arrangelab;

TEST_CASE("edge lists with comments and blank lines") {
    const Graph g = parse_edge_list("# triangle\n1 2\n\n2 3   # trailing\n3 1\n");
    CHECK(g == complete_graph(3));
    CHECK(write_edge_list(g) == "1 2\n1 3\n2 3\n");
    CHECK(parse_edge_list("").order() == 0);
}

TEST_CASE("edge list errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("1 2\n2 x\n") == 2);
    CHECK(line_of("1 2\n\n3\n") == 3);
    CHECK(line_of("1 1\n") == 1);
    CHECK(line_of("1 2\n2 1\n") == 2);
    CHECK(line_of("0 1\n") == 1);
    CHECK(line_of("1 2 3\n") == 1);
}

TEST_CASE("graph6 known encodings") {
    CHECK(parse_graph6("D~{") == complete_graph(5));
    CHECK(parse_graph6(">>graph6<<E~~w") == complete_graph(6));
    CHECK(write_graph6(complete_graph(5)) == "D~{");
    CHECK(write_graph6(Graph(1, {})) == "@");
    CHECK(parse_graph6("Cr") == fixtures::graph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    CHECK_THROWS_AS(parse_graph6("D~"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("graph6 round trip over every small graph") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) CHECK(parse_graph6(write_graph6(g)) == g);
}

TEST_CASE("graph6 corpus files") {
    const auto graphs = parse_graph6_corpus(">>graph6<<D~{\n\n# comment\nCr\n");
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(5));
    try {
        parse_graph6_corpus("D~{\nD~\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("format detection") {
    CHECK(looks_like_edge_list("1 2\n"));
    CHECK(looks_like_edge_list("# c\n\n12 3\n"));
    CHECK_FALSE(looks_like_edge_list("D~{\n"));
    CHECK_FALSE(looks_like_edge_list("Cr\n"));
    CHECK_FALSE(looks_like_edge_list(""));
}
