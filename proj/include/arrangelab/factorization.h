#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "arrangelab/arrangement.h"
#include "arrangelab/lattice.h"

namespace arrangelab {

/// Unordered set partition {π_1, ..., π_ℓ} of the hyperplanes 0..m-1.
///
/// Canonical form: each part ascending, parts ordered by their minimum.
class ArrangementPartition {
public:
    ArrangementPartition() = default;

    /// Validates (disjoint, non-empty parts covering 0..m-1) and canonicalises.
    /// Throws std::invalid_argument.
    ArrangementPartition(std::size_t m, std::vector<std::vector<std::size_t>> parts);

    /// From a part label per hyperplane (any integers).
    static ArrangementPartition from_labels(const std::vector<int>& labels);

    std::size_t universe() const { return m_; }
    std::size_t size() const { return parts_.size(); }
    const std::vector<std::vector<std::size_t>>& parts() const { return parts_; }
    const std::vector<std::size_t>& part(std::size_t i) const { return parts_[i]; }

    /// Part index of every hyperplane.
    std::vector<int> labels() const;

    friend bool operator==(const ArrangementPartition&, const ArrangementPartition&) = default;
    friend auto operator<=>(const ArrangementPartition& a, const ArrangementPartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::size_t m_ = 0;
    std::vector<std::vector<std::size_t>> parts_;
};

/// Hyperplane indices taken from pairwise distinct parts, ascending.
using Section = std::vector<std::size_t>;

/// ∏ (|π_i| + 1): the number of sections including the empty one.
std::size_t count_sections(const ArrangementPartition& p);

/// Visits every section (as a set) including the empty one.
void for_each_section(const ArrangementPartition& p, const std::function<void(const Section&)>& visit);

/// Minimal dependent sets of the arrangement's matroid. Simple cycles for
/// graphical arrangements, rank-based search otherwise.
std::vector<HyperplaneSet> circuits(const Arrangement& a);

struct IndependenceResult {
    bool independent = true;
    /// A circuit whose elements lie in distinct parts: a minimal dependent section.
    std::optional<Section> dependent_section;
};

struct NiceCertificate {
    bool nice = false;
    /// Dependent section, or a flat X ≠ V with no part meeting A_X exactly once.
    std::variant<std::monostate, Section, FlatId> failure;
};

/// Reusable checks of partitions against one lattice: caches circuits, the
/// localization lists and chi(A_X, t) for every flat.
class PartitionChecker {
public:
    explicit PartitionChecker(const IntersectionLattice& l);

    const IntersectionLattice& lattice() const { return *lattice_; }
    const std::vector<HyperplaneSet>& circuits() const { return circuits_; }
    const IntPolynomial& localized_chi(FlatId x) const { return chi_[x]; }
    const std::vector<std::size_t>& localization(FlatId x) const { return members_[x]; }

    IndependenceResult independence(const ArrangementPartition& p) const;
    NiceCertificate is_nice(const ArrangementPartition& p) const;

    /// First flat (in id order, V included) where
    /// chi(A_X, t) ≠ t^(n-ℓ) ∏ (t - |π_i ∩ A_X|).
    std::optional<FlatId> factorization_failure(const ArrangementPartition& p) const;
    bool verify_factorization(const ArrangementPartition& p) const { return !factorization_failure(p); }

private:
    void require_universe(const ArrangementPartition& p) const;

    const IntersectionLattice* lattice_;
    std::vector<HyperplaneSet> circuits_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<IntPolynomial> chi_;
};

IndependenceResult is_independent_partition(const Arrangement& a, const ArrangementPartition& p);
NiceCertificate is_nice(const IntersectionLattice& l, const ArrangementPartition& p);

/// True iff the certificate's failure really refutes niceness of p.
bool certificate_valid(const IntersectionLattice& l, const ArrangementPartition& p, const NiceCertificate& c);

/// π_X: the non-empty parts π_i ∩ A_X, as a partition of the hyperplanes of A
/// restricted to A_X (universe stays m; parts only cover A_X).
std::vector<std::vector<std::size_t>> localize_partition(const IntersectionLattice& l, const ArrangementPartition& p,
                                                         FlatId x);

bool verify_factorization(const IntersectionLattice& l, const ArrangementPartition& p);

/// Parts A_{X_i} \ A_{X_{i-1}}. Throws std::invalid_argument unless the chain is maximal.
ArrangementPartition chain_to_partition(const IntersectionLattice& l, const FlatChain& chain);

/// All maximal chains inducing p (brute force over every maximal chain).
std::vector<FlatChain> inducing_chains(const IntersectionLattice& l, const ArrangementPartition& p,
                                       std::size_t limit = 0);

struct EnumerationOptions {
    /// Backtracking is exhaustive; arrangements larger than this are refused.
    std::size_t max_hyperplanes = 21;
    /// Stop after this many partitions (0 = all).
    std::size_t limit = 0;
};

/// Every nice partition, canonically sorted. Throws BoundExceeded when the
/// arrangement has more than `opts.max_hyperplanes` hyperplanes.
std::vector<ArrangementPartition> enumerate_nice_partitions(const IntersectionLattice& l,
                                                            const EnumerationOptions& opts = {});

/// Restricted-growth enumeration of all set partitions of 0..m-1; the visitor
/// receives a part label per element. Return false to stop.
void for_each_set_partition(std::size_t m, const std::function<bool(const std::vector<int>&)>& visit);

class NotNicePartition : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Common endpoint of all edges of `part`. For a single edge, the larger
/// endpoint (the default orientation used for the singleton part). Throws
/// std::invalid_argument when the edges share no vertex.
int star_vertex(const Graph& g, const std::vector<std::size_t>& part);

/// The orientation built for one block of the graph.
struct BlockOrientation {
    std::vector<int> vertices;
    /// Indices into the partition's parts that live in this block.
    std::vector<std::size_t> parts;
    /// Star vertex of each of those parts, same order.
    std::vector<int> stars;
    /// Topological order of the block's orientation: a simplicial elimination ordering of the block.
    std::vector<int> elimination_order;
    /// Hyperplane added at each chain step, in chain order.
    std::vector<std::size_t> steps;
};

/// Orients every block of g from the star vertices of a nice partition and
/// picks one outgoing edge per vertex. Does not validate niceness.
std::vector<BlockOrientation> orient_blocks(const Graph& g, const ArrangementPartition& p);

/// Maximal modular chain inducing the nice partition p of A_g.
/// Throws NotNicePartition when p is not nice.
FlatChain partition_to_modular_chain(const Graph& g, const ArrangementPartition& p);

/// Same, reusing a lattice built from Arrangement::graphical(g).
FlatChain partition_to_modular_chain(const PartitionChecker& checker, const ArrangementPartition& p);

}  // namespace arrangelab
