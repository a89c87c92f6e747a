#include "arrangelab/factorization.h"

#include <algorithm>
#include <map>
#include <string>

namespace arrangelab {

ArrangementPartition::ArrangementPartition(std::size_t m, std::vector<std::vector<std::size_t>> parts) : m_(m) {
    std::vector<bool> seen(m, false);
    for (auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("partition has an empty part");
        for (std::size_t h : part) {
            if (h >= m) throw std::invalid_argument("hyperplane index " + std::to_string(h) + " out of range");
            if (seen[h]) throw std::invalid_argument("hyperplane " + std::to_string(h) + " in two parts");
            seen[h] = true;
        }
        std::sort(part.begin(), part.end());
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::invalid_argument("partition does not cover every hyperplane");
    std::sort(parts.begin(), parts.end());
    parts_ = std::move(parts);
}

ArrangementPartition ArrangementPartition::from_labels(const std::vector<int>& labels) {
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t h = 0; h < labels.size(); ++h) groups[labels[h]].push_back(h);
    std::vector<std::vector<std::size_t>> parts;
    for (auto& [label, members] : groups) parts.push_back(std::move(members));
    return ArrangementPartition(labels.size(), std::move(parts));
}

std::vector<int> ArrangementPartition::labels() const {
    std::vector<int> out(m_, -1);
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (std::size_t h : parts_[i]) out[h] = static_cast<int>(i);
    return out;
}

std::size_t count_sections(const ArrangementPartition& p) {
    std::size_t total = 1;
    for (const auto& part : p.parts()) total *= part.size() + 1;
    return total;
}

void for_each_section(const ArrangementPartition& p, const std::function<void(const Section&)>& visit) {
    Section current;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == p.size()) {
            Section sorted = current;
            std::sort(sorted.begin(), sorted.end());
            visit(sorted);
            return;
        }
        rec(i + 1);
        for (std::size_t h : p.part(i)) {
            current.push_back(h);
            rec(i + 1);
            current.pop_back();
        }
    };
    rec(0);
}

namespace {

std::vector<HyperplaneSet> graph_cycles(const Arrangement& a) {
    const Graph& g = a.graph();
    std::vector<HyperplaneSet> out;
    std::vector<int> path;
    std::vector<bool> on_path(static_cast<std::size_t>(g.order()) + 1, false);

    // Cycles are rooted at their smallest vertex and traversed so that the
    // second vertex is smaller than the last; each appears once.
    std::function<void(int, int)> extend = [&](int root, int u) {
        for (int w : g.neighbors(u)) {
            if (w == root && path.size() >= 3 && path[1] < path.back()) {
                HyperplaneSet c(a.size());
                for (std::size_t k = 0; k < path.size(); ++k)
                    c.insert(*g.edge_index(path[k], path[(k + 1) % path.size()]));
                out.push_back(std::move(c));
            }
            if (w <= root || on_path[w]) continue;
            on_path[w] = true;
            path.push_back(w);
            extend(root, w);
            path.pop_back();
            on_path[w] = false;
        }
    };
    for (int root = 1; root <= g.order(); ++root) {
        path = {root};
        on_path[root] = true;
        extend(root, root);
        on_path[root] = false;
    }
    return out;
}

std::vector<HyperplaneSet> rank_circuits(const Arrangement& a) {
    std::vector<HyperplaneSet> out;
    HyperplaneSet current = a.empty_set();
    std::function<void(std::size_t, int)> rec = [&](std::size_t from, int r) {
        for (std::size_t h = from; h < a.size(); ++h) {
            current.insert(h);
            if (a.rank(current) == r + 1) {
                rec(h + 1, r + 1);
            } else {
                bool minimal = true;
                current.for_each([&](std::size_t f) {
                    if (!minimal || f == h) return;
                    HyperplaneSet smaller = current;
                    smaller.erase(f);
                    minimal = a.rank(smaller) == r;
                });
                if (minimal) out.push_back(current);
            }
            current.erase(h);
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace

std::vector<HyperplaneSet> circuits(const Arrangement& a) {
    auto out = a.kind() == ArrangementKind::graphical ? graph_cycles(a) : rank_circuits(a);
    std::sort(out.begin(), out.end(), [](const HyperplaneSet& x, const HyperplaneSet& y) {
        if (x.count() != y.count()) return x.count() < y.count();
        return x < y;
    });
    return out;
}

PartitionChecker::PartitionChecker(const IntersectionLattice& l)
    : lattice_(&l), circuits_(arrangelab::circuits(l.arrangement())) {
    members_.reserve(l.size());
    chi_.reserve(l.size());
    for (FlatId x = 0; x < l.size(); ++x) {
        members_.push_back(l.flat(x).hyperplanes.to_vector());
        chi_.push_back(localized_characteristic_polynomial(l, x));
    }
}

void PartitionChecker::require_universe(const ArrangementPartition& p) const {
    if (p.universe() != lattice_->arrangement().size())
        throw std::invalid_argument("partition is over a different number of hyperplanes");
}

IndependenceResult PartitionChecker::independence(const ArrangementPartition& p) const {
    require_universe(p);
    const auto label = p.labels();
    std::vector<bool> used(p.size(), false);
    for (const auto& c : circuits_) {
        std::fill(used.begin(), used.end(), false);
        bool rainbow = true;
        c.for_each([&](std::size_t h) {
            if (used[label[h]]) rainbow = false;
            used[label[h]] = true;
        });
        if (rainbow) return {false, c.to_vector()};
    }
    return {};
}

NiceCertificate PartitionChecker::is_nice(const ArrangementPartition& p) const {
    auto ind = independence(p);
    if (!ind.independent) return {false, *ind.dependent_section};
    const auto label = p.labels();
    std::vector<int> count(p.size(), 0);
    for (FlatId x = 1; x < lattice_->size(); ++x) {
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t h : members_[x]) ++count[label[h]];
        if (std::find(count.begin(), count.end(), 1) == count.end()) return {false, x};
    }
    return {true, std::monostate{}};
}

std::optional<FlatId> PartitionChecker::factorization_failure(const ArrangementPartition& p) const {
    require_universe(p);
    const auto label = p.labels();
    const int n = lattice_->arrangement().ambient_dim();
    const int parts = static_cast<int>(p.size());
    std::vector<std::int64_t> count(p.size(), 0);
    for (FlatId x = 0; x < lattice_->size(); ++x) {
        std::fill(count.begin(), count.end(), 0);
        for (std::size_t h : members_[x]) ++count[label[h]];
        // Parts missing A_X contribute a factor t each.
        const int zeros = static_cast<int>(std::count(count.begin(), count.end(), 0));
        const int exponent = n - parts + zeros;
        if (exponent < 0) return x;
        IntPolynomial rhs = IntPolynomial::monomial(1, exponent);
        for (auto c : count)
            if (c) rhs = rhs * IntPolynomial::linear(c);
        if (rhs != chi_[x]) return x;
    }
    return std::nullopt;
}

IndependenceResult is_independent_partition(const Arrangement& a, const ArrangementPartition& p) {
    if (p.universe() != a.size()) throw std::invalid_argument("partition is over a different number of hyperplanes");
    const auto label = p.labels();
    for (const auto& c : circuits(a)) {
        std::vector<bool> used(p.size(), false);
        bool rainbow = true;
        c.for_each([&](std::size_t h) {
            if (used[label[h]]) rainbow = false;
            used[label[h]] = true;
        });
        if (rainbow) return {false, c.to_vector()};
    }
    return {};
}

NiceCertificate is_nice(const IntersectionLattice& l, const ArrangementPartition& p) {
    return PartitionChecker(l).is_nice(p);
}

bool certificate_valid(const IntersectionLattice& l, const ArrangementPartition& p, const NiceCertificate& c) {
    if (c.nice) return std::holds_alternative<std::monostate>(c.failure);
    const auto label = p.labels();
    if (const auto* s = std::get_if<Section>(&c.failure)) {
        HyperplaneSet set(p.universe());
        std::vector<bool> used(p.size(), false);
        for (std::size_t h : *s) {
            if (h >= p.universe() || used[label[h]]) return false;
            used[label[h]] = true;
            set.insert(h);
        }
        return l.arrangement().rank(set) < static_cast<int>(s->size());
    }
    if (const auto* x = std::get_if<FlatId>(&c.failure)) {
        if (*x == l.bottom() || *x >= l.size()) return false;
        std::vector<int> count(p.size(), 0);
        l.flat(*x).hyperplanes.for_each([&](std::size_t h) { ++count[label[h]]; });
        return std::find(count.begin(), count.end(), 1) == count.end();
    }
    return false;
}

std::vector<std::vector<std::size_t>> localize_partition(const IntersectionLattice& l, const ArrangementPartition& p,
                                                         FlatId x) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& part : p.parts()) {
        std::vector<std::size_t> kept;
        for (std::size_t h : part)
            if (l.flat(x).hyperplanes.contains(h)) kept.push_back(h);
        if (!kept.empty()) out.push_back(std::move(kept));
    }
    return out;
}

bool verify_factorization(const IntersectionLattice& l, const ArrangementPartition& p) {
    return PartitionChecker(l).verify_factorization(p);
}

ArrangementPartition chain_to_partition(const IntersectionLattice& l, const FlatChain& chain) {
    if (!is_maximal_chain(l, chain)) throw std::invalid_argument("chain is not a maximal chain of the lattice");
    std::vector<std::vector<std::size_t>> parts;
    for (std::size_t i = 1; i < chain.flats.size(); ++i)
        parts.push_back((l.flat(chain.flats[i]).hyperplanes - l.flat(chain.flats[i - 1]).hyperplanes).to_vector());
    return ArrangementPartition(l.arrangement().size(), std::move(parts));
}

std::vector<FlatChain> inducing_chains(const IntersectionLattice& l, const ArrangementPartition& p,
                                       std::size_t limit) {
    std::vector<FlatChain> out;
    for_each_maximal_chain(l, [&](const FlatChain& c) {
        if (chain_to_partition(l, c) == p) out.push_back(c);
        return limit == 0 || out.size() < limit;
    });
    return out;
}

}  // namespace arrangelab
