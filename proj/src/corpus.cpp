#include "arrangelab/corpus.h"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "arrangelab/errors.h"
#include "arrangelab/graph_io.h"

namespace arrangelab {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    Matrix a(n, std::vector<char>(n, 0));
    for (const Edge& e : g.edges()) {
        a[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)] = 1;
        a[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)] = 1;
    }
    return a;
}

// Colour refinement started from degrees; colours are ranks of sorted
// signatures, so they do not depend on the labelling.
std::vector<int> refine(const Matrix& a) {
    const std::size_t n = a.size();
    std::vector<int> colour(n);
    for (std::size_t v = 0; v < n; ++v) colour[v] = static_cast<int>(std::count(a[v].begin(), a[v].end(), 1));
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (std::size_t w = 0; w < n; ++w)
                if (a[v][w]) sig[v].second.push_back(colour[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
        if (sorted.size() == classes) break;
        classes = sorted.size();
    }
    return colour;
}

std::uint64_t key_of(const Matrix& a, const std::vector<std::size_t>& order) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j) key = key << 1 | static_cast<std::uint64_t>(a[order[i]][order[j]]);
    return key;
}

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.order() > 10) throw BoundExceeded("canonical labelling limited to 10 vertices");
    const Matrix a = adjacency(g);
    const auto colour = refine(a);
    std::map<int, std::vector<std::size_t>> cells;
    for (std::size_t v = 0; v < a.size(); ++v) cells[colour[v]].push_back(v);
    std::vector<std::vector<std::size_t>> cell_list;
    for (auto& [c, members] : cells) cell_list.push_back(members);

    std::vector<std::size_t> order, best;
    std::uint64_t best_key = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cell_list.size()) {
            const auto k = key_of(a, order);
            if (best.empty() || k > best_key) {
                best_key = k;
                best = order;
            }
            return;
        }
        auto cell = cell_list[c];
        do {
            order.insert(order.end(), cell.begin(), cell.end());
            rec(c + 1);
            order.resize(order.size() - cell.size());
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    rec(0);

    std::vector<int> position(a.size());
    for (std::size_t i = 0; i < best.size(); ++i) position[best[i]] = static_cast<int>(i) + 1;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        const int u = position[static_cast<std::size_t>(e.u - 1)], v = position[static_cast<std::size_t>(e.v - 1)];
        edges.push_back({std::min(u, v), std::max(u, v)});
    }
    return Graph(g.order(), std::move(edges));
}

bool isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

namespace {

std::vector<Graph> augment(const std::vector<Graph>& smaller, int n, bool connected) {
    std::set<std::vector<Edge>> seen;
    std::vector<Graph> out;
    for (const Graph& g : smaller) {
        for (std::uint32_t mask = connected ? 1 : 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<Edge> edges = g.edges();
            for (int v = 1; v < n; ++v)
                if (mask >> (v - 1) & 1) edges.push_back({v, n});
            Graph c = canonical_form(Graph(n, std::move(edges)));
            if (seen.insert(c.edges()).second) out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Graph& x, const Graph& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return write_graph6(x) < write_graph6(y);
    });
    return out;
}

std::vector<Graph> cached(int n, bool connected) {
    static std::mutex mutex;
    static std::map<std::pair<int, bool>, std::vector<Graph>> cache;
    if (n < 1) throw std::invalid_argument("graph corpus needs n >= 1");
    if (n > 9) throw BoundExceeded("built-in graph generator limited to 9 vertices");
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({n, connected}); it != cache.end()) return it->second;
    }
    std::vector<Graph> out = n == 1 ? std::vector<Graph>{Graph(1, {})} : augment(cached(n - 1, connected), n, connected);
    std::lock_guard lock(mutex);
    return cache.emplace(std::pair(n, connected), std::move(out)).first->second;
}

}  // namespace

std::vector<Graph> all_graphs(int n) { return cached(n, false); }

std::vector<Graph> connected_graphs(int n) { return cached(n, true); }

}  // namespace arrangelab
