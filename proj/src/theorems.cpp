#include "arrangelab/theorems.h"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "arrangelab/errors.h"
#include "arrangelab/graph_io.h"

namespace arrangelab {

std::string theorem_name(Theorem t) { return "T" + std::to_string(static_cast<int>(t) + 1); }

Theorem parse_theorem(const std::string& s) {
    if (s.size() == 2 && std::toupper(static_cast<unsigned char>(s[0])) == 'T' && s[1] >= '1' && s[1] <= '4')
        return static_cast<Theorem>(s[1] - '1');
    throw std::invalid_argument("unknown theorem check '" + s + "' (expected T1..T4)");
}

std::set<Theorem> all_theorems() { return {Theorem::T1, Theorem::T2, Theorem::T3, Theorem::T4}; }

std::set<Theorem> parse_theorem_list(const std::string& csv) {
    std::set<Theorem> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (!item.empty()) out.insert(parse_theorem(item));
    }
    return out.empty() ? all_theorems() : out;
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::passed: return "passed";
        case CheckStatus::failed: return "failed";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

bool SuiteReport::failed() const {
    return std::any_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.status == CheckStatus::failed; });
}

bool SuiteReport::skipped() const {
    return std::any_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.status == CheckStatus::skipped; });
}

Json SuiteReport::to_json() const {
    Json checks = Json::array();
    for (const auto& o : outcomes) {
        Json c = {{"check", theorem_name(o.id)}, {"status", status_name(o.status)}, {"cases", o.cases}};
        if (!o.detail.empty()) c["detail"] = o.detail;
        if (!o.witness.is_null()) c["witness"] = o.witness;
        checks.push_back(c);
    }
    Json j = graph_to_json(graph);
    j["graph6"] = write_graph6(graph);
    j["checks"] = checks;
    return j;
}

namespace {

struct Context {
    const Graph& g;
    const IntersectionLattice& l;
    const PartitionChecker& checker;
    std::vector<bool> modular;
    std::vector<bool> brylawski;
};

CheckOutcome check_t1(const Context& c, const std::vector<ArrangementPartition>& nice) {
    CheckOutcome o{.id = Theorem::T1};
    const auto cert = chordality(c.g);
    const bool chordal = std::holds_alternative<EliminationOrdering>(cert);
    o.cases = 1;
    if (chordal == !nice.empty()) {
        o.status = CheckStatus::passed;
        o.detail = std::string(chordal ? "chordal, " : "not chordal, ") + std::to_string(nice.size()) +
                   " nice partitions";
        return o;
    }
    o.status = CheckStatus::failed;
    o.witness = {{"certificate", certificate_to_json(cert)}, {"nice_partitions", nice.size()}};
    if (!nice.empty()) o.witness["partition"] = partition_to_json(c.l.arrangement(), nice.front());
    o.detail = chordal ? "chordal graph without a nice partition" : "non-chordal graph with a nice partition";
    return o;
}

CheckOutcome check_t2(const Context& c, const std::vector<ArrangementPartition>& nice) {
    CheckOutcome o{.id = Theorem::T2, .status = CheckStatus::passed};
    for (const auto& p : nice) {
        ++o.cases;
        std::string problem;
        FlatChain chain;
        try {
            chain = partition_to_modular_chain(c.checker, p);
            if (!is_maximal_chain(c.l, chain)) {
                problem = "chain is not maximal";
            } else if (chain_to_partition(c.l, chain) != p) {
                problem = "chain induces a different partition";
            } else {
                for (FlatId x : chain.flats) {
                    if (!c.modular[x] || !c.brylawski[x]) {
                        problem = "chain element " + std::to_string(x) + " is not modular";
                        break;
                    }
                }
            }
        } catch (const std::exception& e) {
            problem = e.what();
        }
        if (!problem.empty()) {
            o.status = CheckStatus::failed;
            o.detail = problem;
            o.witness = {{"partition", partition_to_json(c.l.arrangement(), p)}};
            if (!chain.flats.empty()) o.witness["chain"] = chain.flats;
            return o;
        }
    }
    return o;
}

CheckOutcome check_t3(const Context& c, std::size_t max_hyperplanes) {
    CheckOutcome o{.id = Theorem::T3};
    const Arrangement& a = c.l.arrangement();
    if (a.size() > max_hyperplanes) {
        o.detail = std::to_string(a.size()) + " hyperplanes exceed the bound of " + std::to_string(max_hyperplanes);
        return o;
    }
    o.status = CheckStatus::passed;
    for_each_set_partition(a.size(), [&](const std::vector<int>& labels) {
        ++o.cases;
        const auto p = ArrangementPartition::from_labels(labels);
        const bool nice = c.checker.is_nice(p).nice;
        const auto failure = c.checker.factorization_failure(p);
        if (nice != !failure) {
            o.status = CheckStatus::failed;
            o.detail = nice ? "nice partition fails the factorization identity" : "factorization holds for a non-nice partition";
            o.witness = {{"partition", partition_to_json(a, p)}};
            if (failure) o.witness["flat"] = flat_to_json(c.l, *failure);
            return false;
        }
        return true;
    });
    return o;
}

CheckOutcome check_t4(const Context& c) {
    CheckOutcome o{.id = Theorem::T4, .status = CheckStatus::passed};
    for_each_maximal_chain(c.l, [&](const FlatChain& chain) {
        ++o.cases;
        const auto p = chain_to_partition(c.l, chain);
        const bool nice = c.checker.is_nice(p).nice;
        const bool modular = std::all_of(chain.flats.begin(), chain.flats.end(), [&](FlatId x) { return c.modular[x]; });
        if (nice != modular) {
            o.status = CheckStatus::failed;
            o.detail = nice ? "non-modular chain induces a nice partition" : "modular chain induces a non-nice partition";
            o.witness = {{"chain", chain.flats}, {"partition", partition_to_json(c.l.arrangement(), p)}};
            return false;
        }
        return true;
    });
    return o;
}

}  // namespace

SuiteReport theorem_suite(const Graph& g, const SuiteOptions& opts) {
    SuiteReport report{g, {}};
    auto skip_all = [&](const std::string& why) {
        for (Theorem t : opts.checks) report.outcomes.push_back({.id = t, .status = CheckStatus::skipped, .detail = why});
        return report;
    };

    std::optional<IntersectionLattice> lattice;
    try {
        lattice = IntersectionLattice::build(Arrangement::graphical(g), opts.lattice);
    } catch (const BoundExceeded& e) {
        return skip_all(e.what());
    }
    const PartitionChecker checker(*lattice);
    Context c{g, *lattice, checker, modular_flags(*lattice), {}};
    for (FlatId x = 0; x < lattice->size(); ++x) c.brylawski.push_back(is_modular_brylawski(*lattice, x));

    std::optional<std::vector<ArrangementPartition>> nice;
    std::string enumeration_error;
    if (opts.checks.count(Theorem::T1) || opts.checks.count(Theorem::T2)) {
        try {
            nice = enumerate_nice_partitions(*lattice, opts.enumeration);
        } catch (const BoundExceeded& e) {
            enumeration_error = e.what();
        }
    }

    for (Theorem t : opts.checks) {
        switch (t) {
            case Theorem::T1:
            case Theorem::T2:
                if (!nice)
                    report.outcomes.push_back({.id = t, .status = CheckStatus::skipped, .detail = enumeration_error});
                else
                    report.outcomes.push_back(t == Theorem::T1 ? check_t1(c, *nice) : check_t2(c, *nice));
                break;
            case Theorem::T3: report.outcomes.push_back(check_t3(c, opts.t3_max_hyperplanes)); break;
            case Theorem::T4: report.outcomes.push_back(check_t4(c)); break;
        }
    }
    return report;
}

std::optional<std::string> nice_partition_structure(const PartitionChecker& checker, const ArrangementPartition& p) {
    const auto& l = checker.lattice();
    const Arrangement& a = l.arrangement();
    if (a.kind() != ArrangementKind::graphical) return "not a graphical arrangement";
    const Graph& g = a.graph();
    const auto label = p.labels();

    for (int i = 1; i <= g.order(); ++i) {
        for (int j : g.neighbors(i)) {
            for (int k : g.neighbors(j)) {
                if (k == i) continue;
                const std::size_t hij = *g.edge_index(i, j), hjk = *g.edge_index(j, k);
                if (label[hij] != label[hjk]) continue;
                const auto hik = g.edge_index(i, k);
                if (!hik) return "edges " + a.label(hij) + " and " + a.label(hjk) + " share a part without a triangle";
                if (label[*hik] == label[hij]) return "triangle " + a.label(*hik) + " lies in one part";
            }
            if (j < i) continue;
            for (int k : g.neighbors(j)) {
                if (k <= j || !g.adjacent(i, k)) continue;
                HyperplaneSet t = a.empty_set();
                t.insert(*g.edge_index(i, j));
                t.insert(*g.edge_index(j, k));
                t.insert(*g.edge_index(i, k));
                std::vector<std::size_t> shape;
                for (const auto& part : localize_partition(l, p, l.closure_id(t))) shape.push_back(part.size());
                std::sort(shape.begin(), shape.end());
                if (shape != std::vector<std::size_t>{1, 2})
                    return "triangle " + std::to_string(i) + std::to_string(j) + std::to_string(k) +
                           " does not localize to parts of sizes 1 and 2";
            }
        }
    }

    const auto singletons = std::count_if(p.parts().begin(), p.parts().end(), [](const auto& q) { return q.size() == 1; });
    if (singletons != 1) return std::to_string(singletons) + " singleton parts";

    std::vector<int> stars;
    try {
        for (const auto& b : orient_blocks(g, p)) stars.insert(stars.end(), b.stars.begin(), b.stars.end());
    } catch (const std::invalid_argument& e) {
        return std::string("parts are not stars: ") + e.what();
    }
    std::sort(stars.begin(), stars.end());
    if (std::adjacent_find(stars.begin(), stars.end()) != stars.end()) return "two parts share a star vertex";
    return std::nullopt;
}

}  // namespace arrangelab
