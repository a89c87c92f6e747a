#include "arrangelab/campaign.h"

#include <atomic>
#include <map>
#include <thread>

#include "arrangelab/corpus.h"
#include "arrangelab/errors.h"

namespace arrangelab {

Json CampaignReport::to_json() const {
    Json names = Json::array();
    for (Theorem t : checks) names.push_back(theorem_name(t));
    Json per_order = Json::array();
    for (const auto& o : orders)
        per_order.push_back(
            {{"n", o.n}, {"graphs", o.graphs}, {"passed", o.passed}, {"failed", o.failed}, {"skipped", o.skipped}});
    Json counted = Json::object();
    for (const auto& [t, k] : cases) counted[theorem_name(t)] = k;
    Json fails = Json::array();
    for (const auto& f : failures) fails.push_back(f.to_json());
    const int code = exit_code();
    return {{"checks", names},
            {"status", code == 0 ? "pass" : code == 1 ? "counterexample" : "bound"},
            {"graphs", graphs},
            {"failed", failed},
            {"skipped", skipped},
            {"cases", counted},
            {"orders", per_order},
            {"failures", fails}};
}

CampaignReport campaign(const CampaignOptions& opts) {
    std::vector<Graph> graphs;
    if (opts.corpus) {
        for (const Graph& g : *opts.corpus)
            if (!opts.connected_only || g.connected()) graphs.push_back(g);
    } else {
        if (opts.max_n > 7) throw BoundExceeded("built-in campaign limited to 7 vertices");
        for (int n = std::max(1, opts.min_n); n <= opts.max_n; ++n) {
            auto batch = opts.connected_only ? connected_graphs(n) : all_graphs(n);
            graphs.insert(graphs.end(), batch.begin(), batch.end());
        }
    }

    std::vector<SuiteReport> reports(graphs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < graphs.size(); i = next++) reports[i] = theorem_suite(graphs[i], opts.suite);
    };
    const unsigned threads = std::max(1u, opts.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CampaignReport out;
    out.checks.assign(opts.suite.checks.begin(), opts.suite.checks.end());
    std::map<int, OrderSummary> by_order;
    for (const auto& r : reports) {
        auto& o = by_order[r.graph.order()];
        o.n = r.graph.order();
        ++o.graphs;
        ++out.graphs;
        for (const auto& c : r.outcomes) out.cases[c.id] += c.cases;
        if (r.failed()) {
            ++o.failed;
            ++out.failed;
            out.failures.push_back(r);
        } else if (r.skipped()) {
            ++o.skipped;
            ++out.skipped;
        } else {
            ++o.passed;
        }
    }
    for (auto& [n, o] : by_order) out.orders.push_back(o);
    return out;
}

}  // namespace arrangelab
