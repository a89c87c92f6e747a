#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "arrangelab/factorization.h"
#include "arrangelab/serialize.h"

namespace arrangelab {

/// T1: chordal iff a nice partition exists.
/// T2: every nice partition comes back from its reconstructed modular chain.
/// T3: niceness iff the factorization identity holds, over all set partitions.
/// T4: a maximal chain is modular iff its induced partition is nice.
enum class Theorem { T1, T2, T3, T4 };

std::string theorem_name(Theorem t);
/// "T1".."T4", case-insensitive. Throws std::invalid_argument.
Theorem parse_theorem(const std::string& s);
/// Comma-separated list; empty means all four.
std::set<Theorem> parse_theorem_list(const std::string& csv);
std::set<Theorem> all_theorems();

struct SuiteOptions {
    std::set<Theorem> checks = all_theorems();
    /// T3 visits Bell(m) partitions; skipped above this many hyperplanes.
    std::size_t t3_max_hyperplanes = 10;
    EnumerationOptions enumeration{};
    LatticeOptions lattice{};
};

enum class CheckStatus { passed, failed, skipped };
std::string status_name(CheckStatus s);

struct CheckOutcome {
    Theorem id = Theorem::T1;
    CheckStatus status = CheckStatus::skipped;
    std::string detail{};
    /// Replayable payload for a failure (partition, chain or flat).
    Json witness{};
    std::size_t cases = 0;
};

struct SuiteReport {
    Graph graph;
    std::vector<CheckOutcome> outcomes;

    bool failed() const;
    bool skipped() const;
    Json to_json() const;
};

SuiteReport theorem_suite(const Graph& g, const SuiteOptions& opts = {});

/// Structural facts about a nice partition of a doubly connected chordal
/// graph: every triangle localizes to parts of sizes 1 and 2, two edges in
/// one part close a triangle, parts are stars with distinct centres, and
/// exactly one part is a singleton. Returns the first violation.
std::optional<std::string> nice_partition_structure(const PartitionChecker& checker, const ArrangementPartition& p);

}  // namespace arrangelab
