#include "arrangelab/oracle.h"

#include <algorithm>
#include <map>
#include <set>

#include "arrangelab/errors.h"

namespace arrangelab::oracle {

namespace {

using Masks = std::vector<std::uint64_t>;

int edge_count(const Masks& adj) {
    int m = 0;
    for (auto a : adj) m += __builtin_popcountll(a);
    return m / 2;
}

// Merge vertex v into u and drop v, renumbering the vertices above it.
Masks contract(const Masks& adj, std::size_t u, std::size_t v) {
    Masks out = adj;
    out[u] |= out[v];
    for (std::size_t w = 0; w < out.size(); ++w)
        if (out[v] >> w & 1) out[w] |= std::uint64_t{1} << u;
    out[u] &= ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(v));
    for (auto& row : out) {
        const std::uint64_t low = row & ((std::uint64_t{1} << v) - 1);
        const std::uint64_t high = row >> (v + 1);
        row = low | (high << v);
    }
    return out;
}

class Chromatic {
public:
    IntPolynomial operator()(const Masks& adj) {
        const auto k = adj.size();
        const int m = edge_count(adj);
        if (m == 0) return IntPolynomial::monomial(1, static_cast<int>(k));
        const int full = static_cast<int>(k * (k - 1) / 2);
        if (m == full) {
            IntPolynomial p = IntPolynomial::monomial(1, 0);
            for (std::size_t i = 0; i < k; ++i) p = p * IntPolynomial::linear(static_cast<std::int64_t>(i));
            return p;
        }
        if (auto it = memo_.find(adj); it != memo_.end()) return it->second;

        IntPolynomial result;
        if (2 * m <= full) {
            // P(G) = P(G - e) - P(G / e)
            std::size_t u = 0;
            while (!adj[u]) ++u;
            const auto v = static_cast<std::size_t>(__builtin_ctzll(adj[u]));
            Masks deleted = adj;
            deleted[u] &= ~(std::uint64_t{1} << v);
            deleted[v] &= ~(std::uint64_t{1} << u);
            result = (*this)(deleted) - (*this)(contract(adj, u, v));
        } else {
            // P(G) = P(G + e) + P(G / e) for a non-edge e
            std::size_t u = 0, v = 0;
            for (u = 0; u < k; ++u) {
                const std::uint64_t missing = ~adj[u] & ((std::uint64_t{1} << k) - 1) & ~(std::uint64_t{1} << u);
                if (missing) {
                    v = static_cast<std::size_t>(__builtin_ctzll(missing));
                    break;
                }
            }
            Masks added = adj;
            added[u] |= std::uint64_t{1} << v;
            added[v] |= std::uint64_t{1} << u;
            result = (*this)(added) + (*this)(contract(adj, u, v));
        }
        memo_.emplace(adj, result);
        return result;
    }

private:
    std::map<Masks, IntPolynomial> memo_;
};

// Row echelon form over Q; returns the rank and leaves the pivots in `pivots`.
int eliminate(std::vector<std::vector<Rational>>& rows, std::vector<std::size_t>& pivots) {
    pivots.clear();
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const Rational lead = rows[r][c];
        for (auto& x : rows[r]) x /= lead;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            const Rational f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return static_cast<int>(r);
}

std::vector<std::vector<Rational>> normals_of(const Arrangement& a, const HyperplaneSet& s) {
    std::vector<std::vector<Rational>> rows;
    s.for_each([&](std::size_t h) {
        std::vector<Rational> row;
        for (const auto& c : a.normal(h)) row.emplace_back(c);
        rows.push_back(std::move(row));
    });
    return rows;
}

int rank_of(std::vector<std::vector<Rational>> rows) {
    std::vector<std::size_t> pivots;
    return eliminate(rows, pivots);
}

}  // namespace

IntPolynomial chromatic_polynomial_dc(const Graph& g) {
    if (g.size() > 30) throw BoundExceeded("deletion-contraction limited to 30 edges");
    if (g.order() > 64) throw BoundExceeded("deletion-contraction limited to 64 vertices");
    Masks adj(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u - 1)] |= std::uint64_t{1} << (e.v - 1);
        adj[static_cast<std::size_t>(e.v - 1)] |= std::uint64_t{1} << (e.u - 1);
    }
    return Chromatic{}(adj);
}

int naive_rank(const Arrangement& a, const HyperplaneSet& s) { return rank_of(normals_of(a, s)); }

std::vector<std::vector<Rational>> intersection_basis(const Arrangement& a, const HyperplaneSet& s) {
    const auto n = static_cast<std::size_t>(a.ambient_dim());
    auto rows = normals_of(a, s);
    std::vector<std::size_t> pivots;
    eliminate(rows, pivots);
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<Rational> v(n, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool naive_modular(const IntersectionLattice& l, FlatId x) {
    const Arrangement& a = l.arrangement();
    const int n = a.ambient_dim();
    const auto bx = intersection_basis(a, l.flat(x).hyperplanes);
    for (FlatId y = 0; y < l.size(); ++y) {
        auto sum = bx;
        const auto by = intersection_basis(a, l.flat(y).hyperplanes);
        sum.insert(sum.end(), by.begin(), by.end());
        const int dim_sum = rank_of(sum);
        // The smallest flat containing X + Y is cut out by A_X ∩ A_Y.
        const HyperplaneSet common = l.flat(x).hyperplanes & l.flat(y).hyperplanes;
        if (dim_sum != n - naive_rank(a, common)) return false;
    }
    return true;
}

std::vector<HyperplaneSet> enumerate_flats_bruteforce(const Arrangement& a) {
    const std::size_t m = a.size();
    if (m > 16) throw BoundExceeded("brute-force flat enumeration limited to 16 hyperplanes");
    std::set<HyperplaneSet> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        HyperplaneSet s(m);
        for (std::size_t h = 0; h < m; ++h)
            if (mask >> h & 1) s.insert(h);
        const int r = naive_rank(a, s);
        HyperplaneSet closed = s;
        for (std::size_t h = 0; h < m; ++h) {
            if (s.contains(h)) continue;
            HyperplaneSet t = s;
            t.insert(h);
            if (naive_rank(a, t) == r) closed.insert(h);
        }
        found.insert(closed);
    }
    return {found.begin(), found.end()};
}

}  // namespace arrangelab::oracle
