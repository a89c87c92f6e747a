#include "arrangelab/graph.h"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace arrangelab {

namespace {

void require_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.order())
        throw std::out_of_range("vertex " + std::to_string(v) + " outside 1.." + std::to_string(g.order()));
}

ChordlessCycle normalize_cycle(std::vector<int> cycle) {
    auto smallest = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), smallest, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return ChordlessCycle{std::move(cycle)};
}

// Shortest x-y path avoiding `blocked`, smallest labels explored first.
std::optional<std::vector<int>> shortest_path(const Graph& g, int x, int y, const std::vector<bool>& blocked) {
    std::vector<int> parent(static_cast<std::size_t>(g.order()) + 1, 0);
    std::vector<bool> seen(static_cast<std::size_t>(g.order()) + 1, false);
    std::queue<int> q;
    q.push(x);
    seen[static_cast<std::size_t>(x)] = true;
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        if (u == y) break;
        for (int w : g.neighbors(u)) {
            if (seen[static_cast<std::size_t>(w)] || blocked[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = true;
            parent[static_cast<std::size_t>(w)] = u;
            q.push(w);
        }
    }
    if (!seen[static_cast<std::size_t>(y)]) return std::nullopt;
    std::vector<int> path;
    for (int u = y; u != x; u = parent[static_cast<std::size_t>(u)]) path.push_back(u);
    path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// Cycle v-x-...-y-v through v's non-adjacent neighbours x, y; chordless when it exists.
std::optional<ChordlessCycle> cycle_through(const Graph& g, int v, int x, int y) {
    std::vector<bool> blocked(static_cast<std::size_t>(g.order()) + 1, false);
    blocked[static_cast<std::size_t>(v)] = true;
    for (int w : g.neighbors(v))
        if (w != x && w != y) blocked[static_cast<std::size_t>(w)] = true;
    auto path = shortest_path(g, x, y, blocked);
    if (!path) return std::nullopt;
    std::vector<int> cycle{v};
    cycle.insert(cycle.end(), path->begin(), path->end());
    return normalize_cycle(std::move(cycle));
}

std::optional<ChordlessCycle> cycle_at(const Graph& g, int v, const std::vector<bool>& alive) {
    std::vector<int> later;
    for (int w : g.neighbors(v))
        if (alive[static_cast<std::size_t>(w)]) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
        for (std::size_t b = a + 1; b < later.size(); ++b)
            if (!g.adjacent(later[a], later[b]))
                if (auto c = cycle_through(g, v, later[a], later[b])) return c;
    return std::nullopt;
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 1), 0);
    nbrs_.resize(static_cast<std::size_t>(n) + 1);
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > n)
            throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " outside 1.." + std::to_string(n));
        if (adj_[index(e.u, e.v)])
            throw std::invalid_argument("repeated edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        adj_[index(e.u, e.v)] = adj_[index(e.v, e.u)] = 1;
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    for (const auto& e : edges_) {
        nbrs_[static_cast<std::size_t>(e.u)].push_back(e.v);
        nbrs_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

std::optional<std::size_t> Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<int> Graph::covered_vertices() const {
    std::vector<int> out;
    for (int v = 1; v <= n_; ++v)
        if (!neighbors(v).empty()) out.push_back(v);
    return out;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
    for (int s = 1; s <= n_; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : neighbors(u))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::connected() const { return components().size() <= 1; }

Graph Graph::edge_subgraph(std::span<const Edge> edges) const {
    std::vector<Edge> kept(edges.begin(), edges.end());
    for (const auto& e : kept)
        if (!edge_index(e.u, e.v)) throw std::invalid_argument("edge_subgraph: not an edge of the graph");
    return Graph(n_, std::move(kept));
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    if (n >= 3) e.push_back({1, n});
    return Graph(n, std::move(e));
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    return Graph(n, std::move(e));
}

std::vector<Graph> blocks(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> disc(n + 1, 0), low(n + 1, 0);
    std::vector<Edge> stack;
    std::vector<std::vector<Edge>> found;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = ++timer;
        for (int w : g.neighbors(u)) {
            if (w == parent) continue;
            if (!disc[static_cast<std::size_t>(w)]) {
                stack.push_back({std::min(u, w), std::max(u, w)});
                dfs(w, u);
                low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) {
                    std::vector<Edge> block;
                    const Edge cut{std::min(u, w), std::max(u, w)};
                    while (true) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == cut) break;
                    }
                    found.push_back(std::move(block));
                }
            } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
                stack.push_back({std::min(u, w), std::max(u, w)});
                low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
            }
        }
    };
    for (int v = 1; v <= g.order(); ++v)
        if (!disc[static_cast<std::size_t>(v)]) dfs(v, 0);

    std::vector<Graph> out;
    for (auto& b : found) {
        std::sort(b.begin(), b.end());
        out.emplace_back(g.order(), std::move(b));
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.edges().front() < b.edges().front(); });
    return out;
}

bool is_simplicial(const Graph& g, int v) {
    require_vertex(g, v);
    const auto& nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (!g.adjacent(nb[a], nb[b])) return false;
    return true;
}

bool is_simplicial_within(const Graph& g, int v, const std::vector<bool>& alive) {
    require_vertex(g, v);
    std::vector<int> nb;
    for (int w : g.neighbors(v))
        if (alive[static_cast<std::size_t>(w)]) nb.push_back(w);
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            if (!g.adjacent(nb[a], nb[b])) return false;
    return true;
}

std::vector<int> maximum_cardinality_search(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> weight(n + 1, 0);
    std::vector<bool> visited(n + 1, false);
    std::vector<int> visit;
    visit.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        int best = 0;
        for (int v = 1; v <= g.order(); ++v)
            if (!visited[static_cast<std::size_t>(v)] && (best == 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        visited[static_cast<std::size_t>(best)] = true;
        visit.push_back(best);
        for (int w : g.neighbors(best))
            if (!visited[static_cast<std::size_t>(w)]) ++weight[static_cast<std::size_t>(w)];
    }
    return visit;
}

ChordalityCertificate chordality(const Graph& g) {
    auto order = maximum_cardinality_search(g);
    std::reverse(order.begin(), order.end());

    std::vector<bool> alive(static_cast<std::size_t>(g.order()) + 1, true);
    for (int v : order) {
        alive[static_cast<std::size_t>(v)] = false;
        if (!is_simplicial_within(g, v, alive)) {
            if (auto c = cycle_at(g, v, alive)) return *c;
            break;
        }
    }
    if (validates(g, EliminationOrdering{order})) return EliminationOrdering{std::move(order)};

    // First violated step gave no cycle; every chordless cycle passes through
    // some vertex with two non-adjacent neighbours, so a full scan succeeds.
    std::vector<bool> everyone(static_cast<std::size_t>(g.order()) + 1, true);
    for (int v = 1; v <= g.order(); ++v) {
        everyone[static_cast<std::size_t>(v)] = false;
        auto c = cycle_at(g, v, everyone);
        everyone[static_cast<std::size_t>(v)] = true;
        if (c) return *c;
    }
    throw std::logic_error("chordality: ordering failed but no chordless cycle found");
}

bool is_chordal(const Graph& g) {
    return std::holds_alternative<EliminationOrdering>(chordality(g));
}

bool validates(const Graph& g, const EliminationOrdering& ordering) {
    const auto n = static_cast<std::size_t>(g.order());
    if (ordering.order.size() != n) return false;
    std::vector<bool> alive(n + 1, true), used(n + 1, false);
    for (int v : ordering.order) {
        if (v < 1 || v > g.order() || used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(v)] = true;
    }
    for (int v : ordering.order) {
        alive[static_cast<std::size_t>(v)] = false;
        if (!is_simplicial_within(g, v, alive)) return false;
    }
    return true;
}

bool validates(const Graph& g, const ChordlessCycle& witness) {
    const auto& c = witness.cycle;
    const std::size_t k = c.size();
    if (k < 4) return false;
    std::vector<bool> used(static_cast<std::size_t>(g.order()) + 1, false);
    for (int v : c) {
        if (v < 1 || v > g.order() || used[static_cast<std::size_t>(v)]) return false;
        used[static_cast<std::size_t>(v)] = true;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if (g.adjacent(c[i], c[j]) != consecutive) return false;
        }
    return true;
}

void Digraph::add_arc(int from, int to) {
    if (from < 1 || from > n_ || to < 1 || to > n_ || from == to)
        throw std::invalid_argument("invalid arc");
    out_[static_cast<std::size_t>(from)].push_back(to);
}

std::size_t Digraph::arc_count() const {
    std::size_t c = 0;
    for (const auto& o : out_) c += o.size();
    return c;
}

std::variant<std::vector<int>, DirectedCycle> topological_order(const Digraph& d) {
    const auto n = static_cast<std::size_t>(d.order());
    std::vector<int> indegree(n + 1, 0);
    std::vector<std::vector<int>> in(n + 1);
    for (int v = 1; v <= d.order(); ++v)
        for (int w : d.out(v)) {
            ++indegree[static_cast<std::size_t>(w)];
            in[static_cast<std::size_t>(w)].push_back(v);
        }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 1; v <= d.order(); ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
    std::vector<int> order;
    std::vector<bool> done(n + 1, false);
    while (!ready.empty()) {
        const int v = ready.top();
        ready.pop();
        order.push_back(v);
        done[static_cast<std::size_t>(v)] = true;
        for (int w : d.out(v))
            if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
    if (order.size() == n) return order;

    // Every unfinished vertex has an unfinished predecessor; walk back until a repeat.
    int start = 1;
    while (done[static_cast<std::size_t>(start)]) ++start;
    std::vector<int> walk;
    std::vector<int> position(n + 1, -1);
    int v = start;
    while (position[static_cast<std::size_t>(v)] < 0) {
        position[static_cast<std::size_t>(v)] = static_cast<int>(walk.size());
        walk.push_back(v);
        int pred = 0;
        for (int p : in[static_cast<std::size_t>(v)])
            if (!done[static_cast<std::size_t>(p)] && (pred == 0 || p < pred)) pred = p;
        v = pred;
    }
    std::vector<int> cycle(walk.begin() + position[static_cast<std::size_t>(v)], walk.end());
    std::reverse(cycle.begin(), cycle.end());
    return DirectedCycle{std::move(cycle)};
}

}  // namespace arrangelab
