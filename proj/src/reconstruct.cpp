#include <algorithm>
#include <string>

#include "arrangelab/factorization.h"

namespace arrangelab {

int star_vertex(const Graph& g, const std::vector<std::size_t>& part) {
    if (part.empty()) throw std::invalid_argument("empty part has no star vertex");
    for (std::size_t h : part)
        if (h >= g.size()) throw std::invalid_argument("hyperplane index out of range");
    const Edge first = g.edges()[part.front()];
    if (part.size() == 1) return first.v;
    for (int c : {first.u, first.v}) {
        const bool common = std::all_of(part.begin(), part.end(), [&](std::size_t h) {
            const Edge e = g.edges()[h];
            return e.u == c || e.v == c;
        });
        if (common) return c;
    }
    throw std::invalid_argument("edges of part do not share a common vertex");
}

namespace {

std::optional<std::vector<int>> orient_and_order(const Graph& g, const ArrangementPartition& p,
                                                 const BlockOrientation& b, std::vector<int>& stars) {
    Digraph d(g.order());
    for (std::size_t k = 0; k < b.parts.size(); ++k) {
        for (std::size_t h : p.part(b.parts[k])) {
            const Edge e = g.edges()[h];
            d.add_arc(stars[k], e.u == stars[k] ? e.v : e.u);
        }
    }
    auto topo = topological_order(d);
    const auto* order = std::get_if<std::vector<int>>(&topo);
    if (!order) return std::nullopt;
    std::vector<int> restricted;
    for (int v : *order)
        if (std::binary_search(b.vertices.begin(), b.vertices.end(), v)) restricted.push_back(v);
    return restricted;
}

}  // namespace

std::vector<BlockOrientation> orient_blocks(const Graph& g, const ArrangementPartition& p) {
    if (p.universe() != g.size()) throw std::invalid_argument("partition is over a different number of hyperplanes");
    const auto label = p.labels();
    std::vector<BlockOrientation> out;
    for (const Graph& block : blocks(g)) {
        BlockOrientation b;
        b.vertices = block.covered_vertices();
        for (const Edge& e : block.edges()) {
            const auto part = static_cast<std::size_t>(label[*g.edge_index(e.u, e.v)]);
            if (std::find(b.parts.begin(), b.parts.end(), part) == b.parts.end()) b.parts.push_back(part);
        }
        std::sort(b.parts.begin(), b.parts.end());
        for (std::size_t i : b.parts) {
            for (std::size_t h : p.part(i)) {
                const Edge e = g.edges()[h];
                if (!block.adjacent(e.u, e.v))
                    throw std::invalid_argument("part " + std::to_string(i) + " spans several blocks");
            }
            b.stars.push_back(star_vertex(g, p.part(i)));
        }

        // The singleton part may point either way; the larger endpoint is
        // tried first (star_vertex's default), then the smaller.
        std::optional<std::vector<int>> order = orient_and_order(g, p, b, b.stars);
        if (!order) {
            for (std::size_t k = 0; k < b.parts.size() && !order; ++k) {
                if (p.part(b.parts[k]).size() != 1) continue;
                const Edge e = g.edges()[p.part(b.parts[k]).front()];
                b.stars[k] = e.u;
                order = orient_and_order(g, p, b, b.stars);
                if (!order) b.stars[k] = e.v;
            }
        }
        if (!order) throw std::invalid_argument("orientation of block has a directed cycle");
        b.elimination_order = std::move(*order);

        // Step i uses the vertex at position k - i of the order.
        for (auto it = b.elimination_order.rbegin() + 1; it != b.elimination_order.rend(); ++it) {
            const int v = *it;
            int head = 0;
            for (std::size_t k = 0; k < b.parts.size(); ++k) {
                if (b.stars[k] != v) continue;
                for (std::size_t h : p.part(b.parts[k])) {
                    const Edge e = g.edges()[h];
                    const int w = e.u == v ? e.v : e.u;
                    if (!head || w < head) head = w;
                }
            }
            if (!head) throw std::invalid_argument("vertex " + std::to_string(v) + " has no outgoing edge");
            b.steps.push_back(*g.edge_index(v, head));
        }
        out.push_back(std::move(b));
    }
    return out;
}

FlatChain partition_to_modular_chain(const PartitionChecker& checker, const ArrangementPartition& p) {
    const auto& l = checker.lattice();
    const Arrangement& a = l.arrangement();
    if (a.kind() != ArrangementKind::graphical)
        throw std::invalid_argument("chain reconstruction needs a graphical arrangement");
    if (!checker.is_nice(p).nice) throw NotNicePartition("partition is not nice");

    const Graph& g = a.graph();
    FlatChain chain{{l.bottom()}};
    HyperplaneSet current = a.empty_set();
    for (const auto& b : orient_blocks(g, p)) {
        for (std::size_t h : b.steps) {
            current = l.flat(chain.flats.back()).hyperplanes;
            current.insert(h);
            chain.flats.push_back(l.closure_id(current));
        }
    }
    if (!is_maximal_chain(l, chain) || chain_to_partition(l, chain) != p)
        throw std::logic_error("reconstructed chain does not induce the partition");
    return chain;
}

FlatChain partition_to_modular_chain(const Graph& g, const ArrangementPartition& p) {
    const auto l = build_lattice(Arrangement::graphical(g));
    return partition_to_modular_chain(PartitionChecker(l), p);
}

}  // namespace arrangelab
