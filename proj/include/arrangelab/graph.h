#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace arrangelab {

/// Undirected edge {u, v} with u < v. Vertices are 1-based.
struct Edge {
    int u = 0;
    int v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n.
///
/// Construction rejects self-loops, repeated edges and out-of-range endpoints.
/// Edges are stored sorted lexicographically; the position of an edge in
/// `edges()` is its hyperplane index in the graphical arrangement.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
    const std::vector<int>& neighbors(int v) const { return nbrs_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    std::optional<std::size_t> edge_index(int u, int v) const;

    /// Vertices incident to at least one edge, ascending.
    std::vector<int> covered_vertices() const;

    /// Connected components as ascending vertex lists, ordered by minimum vertex.
    std::vector<std::vector<int>> components() const;
    bool connected() const;

    /// Same vertex set, only the given edges (each must be an edge of this graph).
    Graph edge_subgraph(std::span<const Edge> edges) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<char> adj_;
    std::vector<std::vector<int>> nbrs_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// Biconnected blocks, each returned on the full vertex set 1..n with only its
/// own edges. Disconnected inputs are handled per component. Blocks are ordered
/// by their smallest edge.
std::vector<Graph> blocks(const Graph& g);

bool is_simplicial(const Graph& g, int v);

/// Simpliciality of v inside the subgraph induced by vertices with alive[v] set.
bool is_simplicial_within(const Graph& g, int v, const std::vector<bool>& alive);

struct EliminationOrdering {
    std::vector<int> order;
};

/// Chordless cycle of length >= 4, rotated to start at its smallest vertex and
/// oriented toward the smaller of that vertex's two cycle neighbours.
struct ChordlessCycle {
    std::vector<int> cycle;
};

using ChordalityCertificate = std::variant<EliminationOrdering, ChordlessCycle>;

/// Visit order of maximum cardinality search, ties to the smallest label.
std::vector<int> maximum_cardinality_search(const Graph& g);

ChordalityCertificate chordality(const Graph& g);

bool is_chordal(const Graph& g);

bool validates(const Graph& g, const EliminationOrdering& ordering);
bool validates(const Graph& g, const ChordlessCycle& witness);

/// Directed graph on vertices 1..n; used for the orientation built from a nice partition.
class Digraph {
public:
    explicit Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n) + 1) {}

    void add_arc(int from, int to);

    int order() const { return n_; }
    const std::vector<int>& out(int v) const { return out_[static_cast<std::size_t>(v)]; }
    std::size_t arc_count() const;

private:
    int n_;
    std::vector<std::vector<int>> out_;
};

struct DirectedCycle {
    std::vector<int> cycle;
};

/// Kahn's algorithm taking the smallest available label at each step.
std::variant<std::vector<int>, DirectedCycle> topological_order(const Digraph& d);

}  // namespace arrangelab
