#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arrangelab/exact.h"
#include "arrangelab/graph.h"
#include "arrangelab/hyperplane_set.h"

namespace arrangelab {

/// x_u - x_v = 0 with u < v.
struct GraphEdgeHyperplane {
    Edge edge;
    friend bool operator==(const GraphEdgeHyperplane&, const GraphEdgeHyperplane&) = default;
};

/// normal . x = 0, normal in canonical integer form.
struct LinearHyperplane {
    IntVector normal;
    friend bool operator==(const LinearHyperplane&, const LinearHyperplane&) = default;
};

using Hyperplane = std::variant<GraphEdgeHyperplane, LinearHyperplane>;

enum class ArrangementKind { graphical, general };

/// A vertex partition of 1..n, blocks ascending and sorted by minimum element.
using VertexPartition = std::vector<std::vector<int>>;

/// Element of the intersection lattice.
///
/// `hyperplanes` is the closed localization set { H : X ⊆ H }; it identifies the
/// flat uniquely. `partition` is filled for graphical arrangements only.
struct Flat {
    HyperplaneSet hyperplanes;
    int rank = 0;
    VertexPartition partition;
};

/// Central arrangement over the rationals.
class Arrangement {
public:
    /// Graphical arrangement A_G: one hyperplane per edge, in `g.edges()` order.
    static Arrangement graphical(const Graph& g);

    /// General arrangement from integer or rational normals. Duplicate
    /// hyperplanes (after canonicalisation) are rejected.
    static Arrangement general(int ambient_dim, const std::vector<std::vector<Rational>>& normals);

    ArrangementKind kind() const { return kind_; }
    int ambient_dim() const { return dim_; }
    std::size_t size() const { return hyperplanes_.size(); }
    bool empty() const { return hyperplanes_.empty(); }

    const Hyperplane& hyperplane(std::size_t i) const { return hyperplanes_[i]; }

    /// Backing graph of a graphical arrangement.
    const Graph& graph() const;

    /// Normal vector; for graph edges this is e_u - e_v.
    const IntVector& normal(std::size_t i) const { return normals_[i]; }

    /// "u-v" for graph edges, "h<i>" otherwise.
    std::string label(std::size_t i) const;
    std::optional<std::size_t> index_of_label(std::string_view label) const;

    HyperplaneSet empty_set() const { return HyperplaneSet(size()); }
    HyperplaneSet all() const { return HyperplaneSet::full(size()); }

    /// Rank of the intersection of the hyperplanes in s.
    int rank(const HyperplaneSet& s) const;
    int rank() const { return rank(all()); }

    /// Smallest flat whose localization contains s.
    Flat closure(const HyperplaneSet& s) const;

    /// Same hyperplanes viewed as a general arrangement.
    Arrangement as_general() const;

private:
    Arrangement() = default;

    ArrangementKind kind_ = ArrangementKind::general;
    int dim_ = 0;
    std::vector<Hyperplane> hyperplanes_;
    std::vector<IntVector> normals_;
    std::optional<Graph> graph_;
};

/// Exact rank computed graph-theoretically or by integer elimination.
int rank_of_subset(const Arrangement& a, const HyperplaneSet& s);

Flat closure(const Arrangement& a, const HyperplaneSet& s);

/// { H in A : X ⊆ H }. Throws std::invalid_argument if x is not a flat of a.
HyperplaneSet localization(const Arrangement& a, const Flat& x);

/// A1 × A2 in dimension n1 + n2; hyperplanes of a1 first, then a2 shifted.
/// Always general kind.
Arrangement product_arrangement(const Arrangement& a1, const Arrangement& a2);

/// Reads one hyperplane per line, each as n rational coefficients.
Arrangement parse_general_arrangement(std::string_view text);

/// Vertex partition given by the connected components of ([n], edges in s).
VertexPartition components_partition(const Graph& g, const HyperplaneSet& s);

}  // namespace arrangelab
