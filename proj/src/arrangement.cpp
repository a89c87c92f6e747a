#include "arrangelab/arrangement.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "arrangelab/errors.h"

namespace arrangelab {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

IntVector edge_normal(int dim, const Edge& e) {
    IntVector v(static_cast<std::size_t>(dim), 0);
    v[e.u - 1] = 1;
    v[e.v - 1] = -1;
    return v;
}

std::vector<IntVector> rows_of(const Arrangement& a, const HyperplaneSet& s) {
    std::vector<IntVector> rows;
    s.for_each([&](std::size_t i) { rows.push_back(a.normal(i)); });
    return rows;
}

}  // namespace

Arrangement Arrangement::graphical(const Graph& g) {
    Arrangement a;
    a.kind_ = ArrangementKind::graphical;
    a.dim_ = g.order();
    for (const auto& e : g.edges()) {
        a.hyperplanes_.push_back(GraphEdgeHyperplane{e});
        a.normals_.push_back(edge_normal(g.order(), e));
    }
    a.graph_ = g;
    return a;
}

Arrangement Arrangement::general(int ambient_dim, const std::vector<std::vector<Rational>>& normals) {
    if (ambient_dim < 0) throw std::invalid_argument("negative dimension");
    Arrangement a;
    a.kind_ = ArrangementKind::general;
    a.dim_ = ambient_dim;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (normals[i].size() != static_cast<std::size_t>(ambient_dim))
            throw std::invalid_argument("hyperplane " + std::to_string(i) + " has wrong length");
        IntVector v = canonical_normal(normals[i]);
        if (std::find(a.normals_.begin(), a.normals_.end(), v) != a.normals_.end())
            throw std::invalid_argument("hyperplane " + std::to_string(i) + " duplicates an earlier one");
        a.hyperplanes_.push_back(LinearHyperplane{v});
        a.normals_.push_back(std::move(v));
    }
    return a;
}

const Graph& Arrangement::graph() const {
    if (!graph_) throw std::logic_error("arrangement is not graphical");
    return *graph_;
}

std::string Arrangement::label(std::size_t i) const {
    if (const auto* e = std::get_if<GraphEdgeHyperplane>(&hyperplanes_[i]))
        return std::to_string(e->edge.u) + "-" + std::to_string(e->edge.v);
    return "h" + std::to_string(i);
}

std::optional<std::size_t> Arrangement::index_of_label(std::string_view label) const {
    auto to_int = [](std::string_view s) -> std::optional<int> {
        int v = 0;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
        return v;
    };
    if (kind_ == ArrangementKind::graphical) {
        const auto dash = label.find('-');
        if (dash == std::string_view::npos) return std::nullopt;
        auto u = to_int(label.substr(0, dash));
        auto v = to_int(label.substr(dash + 1));
        if (!u || !v) return std::nullopt;
        return graph_->edge_index(*u, *v);
    }
    if (label.empty() || label.front() != 'h') return std::nullopt;
    auto i = to_int(label.substr(1));
    if (!i || *i < 0 || static_cast<std::size_t>(*i) >= size()) return std::nullopt;
    return static_cast<std::size_t>(*i);
}

VertexPartition components_partition(const Graph& g, const HyperplaneSet& s) {
    UnionFind uf(g.order());
    s.for_each([&](std::size_t i) { uf.unite(g.edges()[i].u, g.edges()[i].v); });
    VertexPartition blocks;
    std::vector<int> slot(static_cast<std::size_t>(g.order()) + 1, -1);
    for (int v = 1; v <= g.order(); ++v) {
        const int root = uf.find(v);
        if (slot[root] < 0) {
            slot[root] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[slot[root]].push_back(v);
    }
    return blocks;
}

int Arrangement::rank(const HyperplaneSet& s) const {
    if (kind_ == ArrangementKind::graphical) {
        UnionFind uf(dim_);
        int r = 0;
        s.for_each([&](std::size_t i) { r += uf.unite(graph_->edges()[i].u, graph_->edges()[i].v) ? 1 : 0; });
        return r;
    }
    return static_cast<int>(integer_rank(rows_of(*this, s)));
}

Flat Arrangement::closure(const HyperplaneSet& s) const {
    Flat f;
    f.hyperplanes = HyperplaneSet(size());
    if (kind_ == ArrangementKind::graphical) {
        const Graph& g = *graph_;
        UnionFind uf(dim_);
        int r = 0;
        s.for_each([&](std::size_t i) { r += uf.unite(g.edges()[i].u, g.edges()[i].v) ? 1 : 0; });
        for (std::size_t i = 0; i < g.size(); ++i)
            if (uf.find(g.edges()[i].u) == uf.find(g.edges()[i].v)) f.hyperplanes.insert(i);
        f.rank = r;
        f.partition = components_partition(g, f.hyperplanes);
        return f;
    }

    // Greedy basis of span(s), then membership of every other normal.
    std::vector<IntVector> basis;
    s.for_each([&](std::size_t i) {
        basis.push_back(normals_[i]);
        if (integer_rank(basis) < basis.size()) basis.pop_back();
    });
    f.rank = static_cast<int>(basis.size());
    for (std::size_t i = 0; i < size(); ++i) {
        if (s.contains(i)) {
            f.hyperplanes.insert(i);
            continue;
        }
        basis.push_back(normals_[i]);
        if (integer_rank(basis) == static_cast<std::size_t>(f.rank)) f.hyperplanes.insert(i);
        basis.pop_back();
    }
    return f;
}

Arrangement Arrangement::as_general() const {
    Arrangement a;
    a.kind_ = ArrangementKind::general;
    a.dim_ = dim_;
    a.normals_ = normals_;
    for (const auto& n : normals_) a.hyperplanes_.push_back(LinearHyperplane{n});
    return a;
}

int rank_of_subset(const Arrangement& a, const HyperplaneSet& s) { return a.rank(s); }

Flat closure(const Arrangement& a, const HyperplaneSet& s) { return a.closure(s); }

HyperplaneSet localization(const Arrangement& a, const Flat& x) {
    if (x.hyperplanes.universe() != a.size()) throw std::invalid_argument("flat belongs to a different arrangement");
    Flat c = a.closure(x.hyperplanes);
    if (c.hyperplanes != x.hyperplanes || c.rank != x.rank)
        throw std::invalid_argument("hyperplane set is not a flat of this arrangement");
    return c.hyperplanes;
}

Arrangement product_arrangement(const Arrangement& a1, const Arrangement& a2) {
    const int n1 = a1.ambient_dim(), n2 = a2.ambient_dim();
    std::vector<std::vector<Rational>> normals;
    for (std::size_t i = 0; i < a1.size(); ++i) {
        std::vector<Rational> v(static_cast<std::size_t>(n1 + n2), 0);
        for (int k = 0; k < n1; ++k) v[k] = Rational(a1.normal(i)[k]);
        normals.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < a2.size(); ++i) {
        std::vector<Rational> v(static_cast<std::size_t>(n1 + n2), 0);
        for (int k = 0; k < n2; ++k) v[n1 + k] = Rational(a2.normal(i)[k]);
        normals.push_back(std::move(v));
    }
    return Arrangement::general(n1 + n2, normals);
}

Arrangement parse_general_arrangement(std::string_view text) {
    std::vector<std::vector<Rational>> normals;
    std::vector<std::size_t> line_of;
    int dim = -1;
    std::size_t ln = 0;
    while (!text.empty()) {
        ++ln;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<Rational> row;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) {
                try {
                    row.push_back(parse_rational(line.substr(i, j - i)));
                } catch (const std::invalid_argument& e) {
                    throw ParseError(ln, e.what());
                }
            }
            i = j;
        }
        if (row.empty()) continue;
        if (dim < 0) dim = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != dim)
            throw ParseError(ln, "expected " + std::to_string(dim) + " coefficients, got " + std::to_string(row.size()));
        if (std::all_of(row.begin(), row.end(), [](const Rational& q) { return q == 0; }))
            throw ParseError(ln, "zero normal vector");
        normals.push_back(std::move(row));
        line_of.push_back(ln);
    }
    std::vector<IntVector> seen;
    for (std::size_t k = 0; k < normals.size(); ++k) {
        IntVector v = canonical_normal(normals[k]);
        if (std::find(seen.begin(), seen.end(), v) != seen.end())
            throw ParseError(line_of[k], "duplicate hyperplane");
        seen.push_back(std::move(v));
    }
    return Arrangement::general(std::max(dim, 0), normals);
}

}  // namespace arrangelab
