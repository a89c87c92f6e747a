#include "arrangelab/lattice.h"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "arrangelab/errors.h"

namespace arrangelab {

std::size_t default_flat_bound() {
    if (const char* env = std::getenv("ARRANGELAB_FLAT_BOUND")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1'000'000;
}

IntersectionLattice IntersectionLattice::build(const Arrangement& a, LatticeOptions opts) {
    IntersectionLattice l;
    l.arrangement_ = a;

    std::vector<Flat> found;
    std::unordered_map<HyperplaneSet, std::size_t, HyperplaneSetHash> seen;
    std::vector<std::pair<std::size_t, std::size_t>> covers;

    found.push_back(a.closure(a.empty_set()));
    seen.emplace(found.front().hyperplanes, 0);
    std::vector<std::size_t> level{0};
    while (!level.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t x : level) {
            const HyperplaneSet base = found[x].hyperplanes;
            for (std::size_t h = 0; h < a.size(); ++h) {
                if (base.contains(h)) continue;
                HyperplaneSet s = base;
                s.insert(h);
                // Only the smallest hyperplane of each new flat generates it from x.
                Flat f = a.closure(s);
                bool smallest = true;
                (f.hyperplanes - base).for_each([&](std::size_t k) { smallest = smallest && k >= h; });
                if (!smallest) continue;
                auto [it, inserted] = seen.emplace(f.hyperplanes, found.size());
                if (inserted) {
                    if (found.size() >= opts.flat_bound)
                        throw BoundExceeded("intersection lattice exceeds " + std::to_string(opts.flat_bound) + " flats");
                    found.push_back(std::move(f));
                    next.push_back(it->second);
                }
                covers.emplace_back(x, it->second);
            }
        }
        level = std::move(next);
    }

    // Canonical numbering: rank, then sorted hyperplane list.
    std::vector<std::size_t> order(found.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<std::vector<std::size_t>> keys(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) keys[i] = found[i].hyperplanes.to_vector();
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (found[x].rank != found[y].rank) return found[x].rank < found[y].rank;
        return keys[x] < keys[y];
    });
    std::vector<FlatId> renumber(found.size());
    for (std::size_t k = 0; k < order.size(); ++k) renumber[order[k]] = k;

    l.flats_.reserve(found.size());
    for (std::size_t k : order) l.flats_.push_back(std::move(found[k]));
    for (FlatId x = 0; x < l.flats_.size(); ++x) l.index_.emplace(l.flats_[x].hyperplanes, x);

    l.up_.assign(l.flats_.size(), {});
    l.down_.assign(l.flats_.size(), {});
    for (auto [x, y] : covers) {
        l.up_[renumber[x]].push_back(renumber[y]);
        l.down_[renumber[y]].push_back(renumber[x]);
    }
    for (auto& v : l.up_) std::sort(v.begin(), v.end());
    for (auto& v : l.down_) std::sort(v.begin(), v.end());

    l.by_rank_.assign(static_cast<std::size_t>(l.rank()) + 1, {});
    for (FlatId x = 0; x < l.flats_.size(); ++x) l.by_rank_[static_cast<std::size_t>(l.flats_[x].rank)].push_back(x);

    l.mobius_.assign(l.flats_.size(), 0);
    l.mobius_[0] = 1;
    for (FlatId x = 1; x < l.flats_.size(); ++x) {
        std::int64_t sum = 0;
        for (FlatId y = 0; y < x && l.flats_[y].rank < l.flats_[x].rank; ++y)
            if (l.leq(y, x)) sum += l.mobius_[y];
        l.mobius_[x] = -sum;
    }
    return l;
}

const std::vector<FlatId>& IntersectionLattice::of_rank(int r) const {
    static const std::vector<FlatId> none;
    if (r < 0 || static_cast<std::size_t>(r) >= by_rank_.size()) return none;
    return by_rank_[static_cast<std::size_t>(r)];
}

std::optional<FlatId> IntersectionLattice::find(const HyperplaneSet& closed) const {
    auto it = index_.find(closed);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

FlatId IntersectionLattice::closure_id(const HyperplaneSet& s) const {
    auto id = find(arrangement_.closure(s).hyperplanes);
    if (!id) throw std::logic_error("closure is missing from the lattice");
    return *id;
}

FlatId IntersectionLattice::join(FlatId x, FlatId y) const {
    if (leq(x, y)) return y;
    if (leq(y, x)) return x;
    return closure_id(flats_[x].hyperplanes | flats_[y].hyperplanes);
}

FlatId IntersectionLattice::meet(FlatId x, FlatId y) const {
    auto id = find(flats_[x].hyperplanes & flats_[y].hyperplanes);
    if (!id) throw std::logic_error("intersection of localizations is not closed");
    return *id;
}

IntersectionLattice build_lattice(const Arrangement& a, LatticeOptions opts) {
    return IntersectionLattice::build(a, opts);
}

IntPolynomial characteristic_polynomial(const IntersectionLattice& l) {
    return localized_characteristic_polynomial(l, l.top());
}

IntPolynomial localized_characteristic_polynomial(const IntersectionLattice& l, FlatId x) {
    const int n = l.arrangement().ambient_dim();
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n) + 1, 0);
    for (FlatId y = 0; y <= x; ++y)
        if (l.leq(y, x)) coeffs[static_cast<std::size_t>(n - l.rank(y))] += l.mobius(y);
    return IntPolynomial(std::move(coeffs));
}

std::optional<std::string> check_lattice_axioms(const IntersectionLattice& l) {
    auto name = [](FlatId x) { return "flat " + std::to_string(x); };
    if (l.rank(l.bottom()) != 0 || !l.flat(l.bottom()).hyperplanes.empty()) return "bottom is not V";
    if (l.flat(l.top()).hyperplanes != l.arrangement().all()) return "top is not T";
    if (l.mobius(l.bottom()) != 1) return "mu(V) != 1";
    for (FlatId x = 0; x < l.size(); ++x) {
        // Graded: every cover raises rank by exactly one; T is above everything.
        for (FlatId y : l.upper_covers(x))
            if (l.rank(y) != l.rank(x) + 1) return name(x) + ": cover skips a rank";
        if (x != l.bottom() && l.lower_covers(x).empty()) return name(x) + ": no lower cover";
        if (!l.leq(x, l.top())) return name(x) + " not below T";

        // Atomic: x is the join of the atoms below it.
        FlatId j = l.bottom();
        for (FlatId a : l.atoms())
            if (l.leq(a, x)) j = l.join(j, a);
        if (j != x) return name(x) + " is not a join of atoms";

        std::int64_t sum = 0;
        for (FlatId y = 0; y <= x; ++y)
            if (l.leq(y, x)) sum += l.mobius(y);
        if (x != l.bottom() && sum != 0) return name(x) + ": Möbius recursion fails";
        const std::int64_t sign = l.rank(x) % 2 == 0 ? 1 : -1;
        if (sign * l.mobius(x) <= 0) return name(x) + ": Möbius sign does not alternate";
    }
    for (FlatId x = 0; x < l.size(); ++x)
        for (FlatId y = x + 1; y < l.size(); ++y)
            if (l.rank(x) + l.rank(y) < l.rank(l.join(x, y)) + l.rank(l.meet(x, y)))
                return name(x) + ", " + name(y) + ": semimodularity fails";
    return std::nullopt;
}

bool is_modular_element(const IntersectionLattice& l, FlatId x) {
    for (FlatId y = 0; y < l.size(); ++y)
        if (l.rank(x) + l.rank(y) != l.rank(l.join(x, y)) + l.rank(l.meet(x, y))) return false;
    return true;
}

std::optional<FlatId> brylawski_witness(const IntersectionLattice& l, FlatId x) {
    if (x == l.bottom() || x == l.top()) return std::nullopt;
    for (FlatId y : l.of_rank(l.rank() - l.rank(x) + 1))
        if (!l.flat(x).hyperplanes.intersects(l.flat(y).hyperplanes)) return y;
    return std::nullopt;
}

bool is_modular_brylawski(const IntersectionLattice& l, FlatId x) { return !brylawski_witness(l, x); }

std::vector<bool> modular_flags(const IntersectionLattice& l) {
    std::vector<bool> out(l.size());
    for (FlatId x = 0; x < l.size(); ++x) out[x] = is_modular_element(l, x);
    return out;
}

bool is_chain(const IntersectionLattice& l, const FlatChain& c) {
    if (c.flats.empty() || c.flats.front() != l.bottom()) return false;
    for (std::size_t i = 1; i < c.flats.size(); ++i) {
        if (c.flats[i] >= l.size()) return false;
        if (!l.less(c.flats[i - 1], c.flats[i]) || l.rank(c.flats[i - 1]) >= l.rank(c.flats[i])) return false;
    }
    return true;
}

bool is_maximal_chain(const IntersectionLattice& l, const FlatChain& c) {
    if (!is_chain(l, c) || c.flats.size() != static_cast<std::size_t>(l.rank()) + 1) return false;
    for (std::size_t i = 0; i < c.flats.size(); ++i)
        if (l.rank(c.flats[i]) != static_cast<int>(i)) return false;
    return true;
}

namespace {

bool walk_chains(const IntersectionLattice& l, FlatChain& prefix, const std::vector<bool>* allowed,
                 const std::function<bool(const FlatChain&)>& visit) {
    const FlatId x = prefix.flats.back();
    if (x == l.top()) return visit(prefix);
    for (FlatId y : l.upper_covers(x)) {
        if (allowed && !(*allowed)[y]) continue;
        prefix.flats.push_back(y);
        const bool go_on = walk_chains(l, prefix, allowed, visit);
        prefix.flats.pop_back();
        if (!go_on) return false;
    }
    return true;
}

}  // namespace

void for_each_maximal_chain(const IntersectionLattice& l, const std::function<bool(const FlatChain&)>& visit) {
    FlatChain prefix{{l.bottom()}};
    walk_chains(l, prefix, nullptr, visit);
}

std::vector<FlatChain> maximal_modular_chains(const IntersectionLattice& l, std::size_t limit) {
    const auto modular = modular_flags(l);
    std::vector<FlatChain> out;
    FlatChain prefix{{l.bottom()}};
    walk_chains(l, prefix, &modular, [&](const FlatChain& c) {
        out.push_back(c);
        return limit == 0 || out.size() < limit;
    });
    return out;
}

bool is_supersolvable(const IntersectionLattice& l) { return !maximal_modular_chains(l, 1).empty(); }

ProductCheck product_iso_check(const IntersectionLattice& l1, const IntersectionLattice& l2,
                               const IntersectionLattice& l12, bool check_modular, std::vector<std::size_t> embed1,
                               std::vector<std::size_t> embed2) {
    ProductCheck out;
    const std::size_t m1 = l1.arrangement().size(), m2 = l2.arrangement().size();
    const std::size_t m12 = l12.arrangement().size();
    if (embed1.empty() && embed2.empty()) {
        for (std::size_t i = 0; i < m1; ++i) embed1.push_back(i);
        for (std::size_t i = 0; i < m2; ++i) embed2.push_back(m1 + i);
    }
    if (embed1.size() != m1 || embed2.size() != m2 || m1 + m2 != m12) {
        out.failure = "hyperplane embeddings do not match the arrangement sizes";
        return out;
    }
    HyperplaneSet image(m12);
    for (auto i : embed1) image.insert(i);
    for (auto i : embed2) image.insert(i);
    if (image.count() != m12) {
        out.failure = "hyperplane embeddings overlap";
        return out;
    }
    if (l1.size() * l2.size() != l12.size()) {
        out.failure = "flat counts differ: " + std::to_string(l1.size()) + " x " + std::to_string(l2.size()) +
                      " != " + std::to_string(l12.size());
        return out;
    }

    auto sigma_set = [&](FlatId x1, FlatId x2) {
        HyperplaneSet s(m12);
        l1.flat(x1).hyperplanes.for_each([&](std::size_t i) { s.insert(embed1[i]); });
        l2.flat(x2).hyperplanes.for_each([&](std::size_t i) { s.insert(embed2[i]); });
        return s;
    };
    std::vector<FlatId> sigma(l1.size() * l2.size());
    std::vector<bool> hit(l12.size(), false);
    out.rank_preserving = true;
    for (FlatId x1 = 0; x1 < l1.size(); ++x1)
        for (FlatId x2 = 0; x2 < l2.size(); ++x2) {
            auto id = l12.find(sigma_set(x1, x2));
            if (!id) {
                out.failure = "σ(" + std::to_string(x1) + ", " + std::to_string(x2) + ") is not a flat of the product";
                return out;
            }
            if (hit[*id]) {
                out.failure = "σ is not injective";
                return out;
            }
            hit[*id] = true;
            sigma[x1 * l2.size() + x2] = *id;
            if (l12.rank(*id) != l1.rank(x1) + l2.rank(x2)) {
                out.rank_preserving = false;
                out.failure = "σ does not add ranks";
            }
        }

    // A bijection of finite posets is an isomorphism iff it maps covers onto covers.
    std::size_t product_covers = 0;
    for (FlatId x1 = 0; x1 < l1.size(); ++x1)
        for (FlatId x2 = 0; x2 < l2.size(); ++x2) {
            const FlatId from = sigma[x1 * l2.size() + x2];
            auto is_cover = [&](FlatId to) {
                const auto& up = l12.upper_covers(from);
                return std::binary_search(up.begin(), up.end(), to);
            };
            for (FlatId y1 : l1.upper_covers(x1)) {
                ++product_covers;
                if (!is_cover(sigma[y1 * l2.size() + x2])) {
                    out.failure = "σ does not preserve a cover relation";
                    return out;
                }
            }
            for (FlatId y2 : l2.upper_covers(x2)) {
                ++product_covers;
                if (!is_cover(sigma[x1 * l2.size() + y2])) {
                    out.failure = "σ does not preserve a cover relation";
                    return out;
                }
            }
        }
    std::size_t covers12 = 0;
    for (FlatId x = 0; x < l12.size(); ++x) covers12 += l12.upper_covers(x).size();
    if (covers12 != product_covers) {
        out.failure = "σ⁻¹ does not preserve cover relations";
        return out;
    }
    out.isomorphism = true;

    if (check_modular) {
        const auto mod1 = modular_flags(l1), mod2 = modular_flags(l2), mod12 = modular_flags(l12);
        for (FlatId x1 = 0; x1 < l1.size(); ++x1)
            for (FlatId x2 = 0; x2 < l2.size(); ++x2)
                if (mod1[x1] && mod2[x2] && !mod12[sigma[x1 * l2.size() + x2]]) {
                    out.modular_closure = false;
                    out.failure = "modular ⊕ modular is not modular";
                }
    }
    return out;
}

ProductCheck block_decomposition_check(const Graph& g, bool check_modular) {
    const auto bs = blocks(g);
    if (bs.size() <= 1) {
        ProductCheck trivial;
        trivial.isomorphism = trivial.rank_preserving = true;
        return trivial;
    }
    std::vector<Edge> acc = bs.front().edges();
    for (std::size_t k = 1; k < bs.size(); ++k) {
        const Graph left = g.edge_subgraph(acc);
        const Graph& right = bs[k];
        std::vector<Edge> all = acc;
        all.insert(all.end(), right.edges().begin(), right.edges().end());
        const Graph whole = g.edge_subgraph(all);

        std::vector<std::size_t> e1, e2;
        for (const auto& e : left.edges()) e1.push_back(*whole.edge_index(e.u, e.v));
        for (const auto& e : right.edges()) e2.push_back(*whole.edge_index(e.u, e.v));
        auto check = product_iso_check(build_lattice(Arrangement::graphical(left)),
                                       build_lattice(Arrangement::graphical(right)),
                                       build_lattice(Arrangement::graphical(whole)), check_modular, e1, e2);
        if (!check.ok()) {
            check.failure = "block " + std::to_string(k) + ": " + check.failure;
            return check;
        }
        acc = whole.edges();
    }
    ProductCheck done;
    done.isomorphism = done.rank_preserving = true;
    return done;
}

}  // namespace arrangelab
