#pragma once

#include <string>
#include <vector>

#include "arrangelab/factorization.h"
#include "arrangelab/graph.h"
#include "arrangelab/oracle.h"

namespace fixtures {

using namespace arrangelab;

inline Graph graph(int n, std::vector<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.push_back({std::min(u, v), std::max(u, v)});
    return Graph(n, std::move(edges));
}

// Two blocks on {1,2,3,4} and {4,5,6}.
inline Graph two_blocks() { return graph(6, {{1, 2}, {1, 4}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {4, 6}, {5, 6}}); }

// K5 minus the edge 24.
inline Graph kite() {
    return graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

// kite() with a second block on {5,6,7,8}.
inline Graph glued() {
    return graph(8, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5},
                     {5, 6}, {5, 7}, {5, 8}, {6, 7}, {7, 8}});
}

inline std::size_t h(const Graph& g, int u, int v) { return *g.edge_index(std::min(u, v), std::max(u, v)); }

inline ArrangementPartition partition(const Graph& g, std::vector<std::vector<std::pair<int, int>>> parts) {
    std::vector<std::vector<std::size_t>> idx;
    for (const auto& part : parts) {
        std::vector<std::size_t> p;
        for (auto [u, v] : part) p.push_back(h(g, u, v));
        idx.push_back(std::move(p));
    }
    return ArrangementPartition(g.size(), std::move(idx));
}

inline ArrangementPartition two_blocks_partition(const Graph& g) {
    return partition(g, {{{2, 4}}, {{1, 2}, {1, 4}}, {{2, 3}, {3, 4}}, {{5, 6}}, {{4, 5}, {4, 6}}});
}

inline std::vector<std::vector<std::pair<int, int>>> kite_parts() {
    return {{{3, 4}}, {{3, 5}, {4, 5}}, {{1, 3}, {1, 4}, {1, 5}}, {{1, 2}, {2, 3}, {2, 5}}};
}

inline ArrangementPartition glued_partition(const Graph& g) {
    auto parts = kite_parts();
    parts.push_back({{6, 7}});
    parts.push_back({{5, 6}, {5, 7}});
    parts.push_back({{5, 8}, {7, 8}});
    return partition(g, parts);
}

// Flat chain generated by adding one hyperplane at a time.
inline FlatChain chain_from_steps(const IntersectionLattice& l, const std::vector<std::size_t>& steps) {
    FlatChain c{{l.bottom()}};
    for (std::size_t s : steps) {
        HyperplaneSet next = l.flat(c.flats.back()).hyperplanes;
        next.insert(s);
        c.flats.push_back(l.closure_id(next));
    }
    return c;
}

// Chordal iff repeatedly deleting some simplicial vertex empties the graph.
inline bool chordal_by_elimination(const Graph& g) {
    std::vector<bool> alive(static_cast<std::size_t>(g.order()) + 1, true);
    alive[0] = false;
    for (int left = g.order(); left > 0; --left) {
        int found = 0;
        for (int v = 1; v <= g.order() && !found; ++v) {
            if (!alive[v]) continue;
            bool clique = true;
            for (int a : g.neighbors(v))
                for (int b : g.neighbors(v))
                    if (a < b && alive[a] && alive[b] && !g.adjacent(a, b)) clique = false;
            if (clique) found = v;
        }
        if (!found) return false;
        alive[found] = false;
    }
    return true;
}

// Niceness straight from the definition: every section has full rank and
// every flat other than V meets some part exactly once. Uses only the
// rational-elimination rank and brute-force flats.
inline bool nice_by_definition(const Arrangement& a, const std::vector<HyperplaneSet>& flats,
                               const ArrangementPartition& p) {
    bool independent = true;
    for_each_section(p, [&](const Section& s) {
        HyperplaneSet set(a.size());
        for (auto x : s) set.insert(x);
        if (oracle::naive_rank(a, set) != static_cast<int>(s.size())) independent = false;
    });
    if (!independent) return false;
    const auto label = p.labels();
    for (const auto& f : flats) {
        if (f.empty()) continue;
        std::vector<int> count(p.size(), 0);
        f.for_each([&](std::size_t x) { ++count[label[x]]; });
        if (std::find(count.begin(), count.end(), 1) == count.end()) return false;
    }
    return true;
}

}  // namespace fixtures
