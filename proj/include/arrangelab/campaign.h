#pragma once

#include <map>
#include <optional>
#include <vector>

#include "arrangelab/theorems.h"

namespace arrangelab {

struct CampaignOptions {
    int min_n = 1;
    int max_n = 4;
    bool connected_only = true;
    /// Graphs to check instead of the built-in generator (e.g. read from graph6).
    std::optional<std::vector<Graph>> corpus;
    unsigned threads = 1;
    SuiteOptions suite{};
};

struct OrderSummary {
    int n = 0;
    std::size_t graphs = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct CampaignReport {
    std::vector<OrderSummary> orders;
    std::size_t graphs = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    /// Full suite reports of the graphs with a failed check.
    std::vector<SuiteReport> failures;
    std::vector<Theorem> checks;
    /// Partitions or chains examined per check, summed over graphs.
    std::map<Theorem, std::size_t> cases;

    /// 0 all passed, 1 counterexample found, 2 a resource bound was hit.
    int exit_code() const { return failed ? 1 : skipped ? 2 : 0; }
    Json to_json() const;
};

/// Runs theorem_suite over every graph of the corpus. The built-in generator
/// is limited to 7 vertices (BoundExceeded otherwise).
CampaignReport campaign(const CampaignOptions& opts);

}  // namespace arrangelab
