#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "arrangelab/arrangement.h"
#include "arrangelab/polynomial.h"

namespace arrangelab {

using FlatId = std::size_t;

/// Default safety bound on the number of flats: 10^6, or the value of the
/// ARRANGELAB_FLAT_BOUND environment variable when set.
std::size_t default_flat_bound();

struct LatticeOptions {
    std::size_t flat_bound = default_flat_bound();
};

/// Intersection lattice L(A) ordered by reverse inclusion.
///
/// Flats are numbered canonically: by rank, then by sorted hyperplane index
/// list. Id 0 is V and the last id is T. X <= Y iff A_X ⊆ A_Y.
class IntersectionLattice {
public:
    /// Closure BFS from V, joining every flat with every atom.
    /// Throws BoundExceeded when more than `opts.flat_bound` flats appear.
    static IntersectionLattice build(const Arrangement& a, LatticeOptions opts = {});

    const Arrangement& arrangement() const { return arrangement_; }

    std::size_t size() const { return flats_.size(); }
    const std::vector<Flat>& flats() const { return flats_; }
    const Flat& flat(FlatId x) const { return flats_[x]; }

    FlatId bottom() const { return 0; }
    FlatId top() const { return flats_.size() - 1; }

    int rank() const { return flats_.back().rank; }
    int rank(FlatId x) const { return flats_[x].rank; }
    std::int64_t mobius(FlatId x) const { return mobius_[x]; }

    /// Empty for ranks above r.
    const std::vector<FlatId>& of_rank(int r) const;
    const std::vector<FlatId>& atoms() const { return of_rank(1); }
    const std::vector<FlatId>& upper_covers(FlatId x) const { return up_[x]; }
    const std::vector<FlatId>& lower_covers(FlatId x) const { return down_[x]; }

    bool leq(FlatId x, FlatId y) const { return flats_[x].hyperplanes.is_subset_of(flats_[y].hyperplanes); }
    bool less(FlatId x, FlatId y) const { return x != y && leq(x, y); }

    std::optional<FlatId> find(const HyperplaneSet& closed) const;
    /// Id of the flat generated by s.
    FlatId closure_id(const HyperplaneSet& s) const;

    /// Closure of A_x ∪ A_y.
    FlatId join(FlatId x, FlatId y) const;
    /// Greatest flat below both; its hyperplane set is A_x ∩ A_y.
    FlatId meet(FlatId x, FlatId y) const;

private:
    Arrangement arrangement_ = Arrangement::general(0, {});
    std::vector<Flat> flats_;
    std::vector<std::int64_t> mobius_;
    std::vector<std::vector<FlatId>> by_rank_;
    std::vector<std::vector<FlatId>> up_;
    std::vector<std::vector<FlatId>> down_;
    std::unordered_map<HyperplaneSet, FlatId, HyperplaneSetHash> index_;
};

IntersectionLattice build_lattice(const Arrangement& a, LatticeOptions opts = {});

/// Sum over X of mu(X) t^(n - r(X)).
IntPolynomial characteristic_polynomial(const IntersectionLattice& l);

/// chi(A_X, t): the same sum restricted to flats below x, still in dimension n.
IntPolynomial localized_characteristic_polynomial(const IntersectionLattice& l, FlatId x);

/// Checks graded, semimodular and atomic structure plus the Möbius recursion
/// and sign alternation. Returns a description of the first violation.
std::optional<std::string> check_lattice_axioms(const IntersectionLattice& l);

/// r(x) + r(y) = r(x ∨ y) + r(x ∧ y) for every flat y.
bool is_modular_element(const IntersectionLattice& l, FlatId x);

/// A_x ∩ A_y ≠ ∅ for every y of rank r - r(x) + 1. V and T are modular.
bool is_modular_brylawski(const IntersectionLattice& l, FlatId x);

/// Flat y with r(y) = r - r(x) + 1 and A_x ∩ A_y = ∅, if any.
std::optional<FlatId> brylawski_witness(const IntersectionLattice& l, FlatId x);

/// is_modular_element for every flat, indexed by id.
std::vector<bool> modular_flags(const IntersectionLattice& l);

/// Strictly increasing sequence of flats starting at V.
struct FlatChain {
    std::vector<FlatId> flats;
    friend bool operator==(const FlatChain&, const FlatChain&) = default;
};

bool is_chain(const IntersectionLattice& l, const FlatChain& c);
/// Ranks exactly 0, 1, ..., r.
bool is_maximal_chain(const IntersectionLattice& l, const FlatChain& c);

/// Visits every maximal chain V < ... < T. Return false from the visitor to stop.
void for_each_maximal_chain(const IntersectionLattice& l, const std::function<bool(const FlatChain&)>& visit);

/// Maximal chains made of modular elements, lexicographic by flat ids.
/// `limit` caps the number returned (0 = all). Non-modular flats are pruned.
std::vector<FlatChain> maximal_modular_chains(const IntersectionLattice& l, std::size_t limit = 0);

bool is_supersolvable(const IntersectionLattice& l);

/// Result of checking σ(X1, X2) = X1 ⊕ X2 against a lattice of the product.
struct ProductCheck {
    bool isomorphism = false;
    bool rank_preserving = false;
    /// σ(modular, modular) is modular in the product (only when requested).
    bool modular_closure = true;
    std::string failure;

    bool ok() const { return isomorphism && rank_preserving && modular_closure; }
};

/// Verifies σ: L1 × L2 → L12 is a rank-preserving lattice isomorphism.
///
/// `embed1` / `embed2` send hyperplane indices of the factors to indices of
/// the product arrangement; by default the identity and the shift by |A1|
/// used by product_arrangement. With `check_modular`, also confirms that
/// modular ⊕ modular is modular.
ProductCheck product_iso_check(const IntersectionLattice& l1, const IntersectionLattice& l2,
                               const IntersectionLattice& l12, bool check_modular = false,
                               std::vector<std::size_t> embed1 = {}, std::vector<std::size_t> embed2 = {});

/// For a graph with several blocks, checks L(A_G) ≅ L(A_G1) × ... × L(A_Gk) by
/// folding product_iso_check block by block on the graphs' own edge indices.
ProductCheck block_decomposition_check(const Graph& g, bool check_modular = false);

}  // namespace arrangelab
