#include <algorithm>
#include <numeric>
#include <string>

#include "arrangelab/errors.h"
#include "arrangelab/factorization.h"

namespace arrangelab {

void for_each_set_partition(std::size_t m, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> label(m, 0);
    bool go = true;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (!go) return;
        if (i == m) {
            go = visit(label);
            return;
        }
        for (int c = 0; c <= used && go; ++c) {
            label[i] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    rec(0, 0);
}

namespace {

// Graph edges are visited colexicographically so that each triangle closes as
// soon as possible; other arrangements in index order.
std::vector<std::size_t> search_order(const Arrangement& a) {
    std::vector<std::size_t> order(a.size());
    std::iota(order.begin(), order.end(), 0);
    if (a.kind() == ArrangementKind::graphical) {
        const auto& e = a.graph().edges();
        std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return std::pair(e[x].v, e[x].u) < std::pair(e[y].v, e[y].u);
        });
    }
    return order;
}

struct Search {
    const PartitionChecker& checker;
    const EnumerationOptions& opts;
    std::vector<std::size_t> order;
    // Members of every circuit / flat, as positions in `order`, grouped by the
    // position at which they become fully assigned.
    std::vector<std::vector<std::vector<std::size_t>>> circuits_at;
    std::vector<std::vector<FlatId>> flats_at;
    std::vector<int> label;  // by hyperplane index
    int rank = 0;
    std::vector<ArrangementPartition> out;
    bool stop = false;

    bool consistent(std::size_t pos, int parts) {
        std::vector<int> seen(static_cast<std::size_t>(parts), 0);
        for (const auto& c : circuits_at[pos]) {
            std::fill(seen.begin(), seen.end(), 0);
            bool rainbow = true;
            for (std::size_t h : c) {
                if (seen[label[h]]++) {
                    rainbow = false;
                    break;
                }
            }
            if (rainbow) return false;
        }
        const auto& l = checker.lattice();
        for (FlatId x : flats_at[pos]) {
            std::fill(seen.begin(), seen.end(), 0);
            for (std::size_t h : checker.localization(x)) ++seen[label[h]];
            int distinct = 0;
            bool single = false;
            for (int s : seen) {
                distinct += s > 0;
                single |= s == 1;
            }
            if (!single || distinct != l.rank(x)) return false;
        }
        return true;
    }

    void run(std::size_t pos, int parts) {
        if (stop) return;
        if (pos == order.size()) {
            if (parts != rank) return;
            auto p = ArrangementPartition::from_labels(label);
            if (!checker.is_nice(p).nice) return;
            out.push_back(std::move(p));
            if (opts.limit && out.size() >= opts.limit) stop = true;
            return;
        }
        // Parts still to be opened need at least one hyperplane each.
        const int remaining = static_cast<int>(order.size() - pos);
        const int limit = std::min(parts + 1, rank);
        for (int c = 0; c < limit && !stop; ++c) {
            const int next = std::max(parts, c + 1);
            if (rank - next > remaining - 1) continue;
            label[order[pos]] = c;
            if (consistent(pos, next)) run(pos + 1, next);
        }
        label[order[pos]] = -1;
    }
};

}  // namespace

std::vector<ArrangementPartition> enumerate_nice_partitions(const IntersectionLattice& l,
                                                            const EnumerationOptions& opts) {
    const Arrangement& a = l.arrangement();
    if (a.size() > opts.max_hyperplanes)
        throw BoundExceeded("nice-partition enumeration limited to " + std::to_string(opts.max_hyperplanes) +
                            " hyperplanes, arrangement has " + std::to_string(a.size()));
    if (a.empty()) return {ArrangementPartition(0, {})};

    PartitionChecker checker(l);
    Search s{checker, opts, search_order(a), {}, {}, std::vector<int>(a.size(), -1), l.rank(), {}, false};
    std::vector<std::size_t> position(a.size());
    for (std::size_t i = 0; i < s.order.size(); ++i) position[s.order[i]] = i;

    s.circuits_at.resize(a.size());
    for (const auto& c : checker.circuits()) {
        std::size_t last = 0;
        c.for_each([&](std::size_t h) { last = std::max(last, position[h]); });
        s.circuits_at[last].push_back(c.to_vector());
    }
    s.flats_at.resize(a.size());
    for (FlatId x = 1; x < l.size(); ++x) {
        std::size_t last = 0;
        for (std::size_t h : checker.localization(x)) last = std::max(last, position[h]);
        s.flats_at[last].push_back(x);
    }

    s.run(0, 0);
    std::sort(s.out.begin(), s.out.end());
    return std::move(s.out);
}

}  // namespace arrangelab
