#pragma once

#include <string>

#include <json.hpp>

#include "arrangelab/factorization.h"
#include "arrangelab/graph.h"
#include "arrangelab/lattice.h"
#include "arrangelab/polynomial.h"

namespace arrangelab {

using Json = nlohmann::ordered_json;

/// {"coefficients": [ascending], "text": "t^2 - t"}
Json polynomial_to_json(const IntPolynomial& p);

Json graph_to_json(const Graph& g);

/// {"kind": "graphical", "n", "edges"} or {"kind": "general", "dimension", "normals"}.
Json arrangement_to_json(const Arrangement& a);
/// Throws ParseError on malformed documents.
Arrangement arrangement_from_json(const Json& j);

/// Array of parts, each an array of hyperplane labels.
Json partition_to_json(const Arrangement& a, const ArrangementPartition& p);
/// Accepts labels ("1-2", "h0") or integer indices. Throws ParseError.
ArrangementPartition partition_from_json(const Arrangement& a, const Json& j);

Json flat_to_json(const IntersectionLattice& l, FlatId x);
/// Array of flats from V to T.
Json chain_to_json(const IntersectionLattice& l, const FlatChain& c);

Json certificate_to_json(const ChordalityCertificate& c);

/// Arrangement, flats with rank, μ and localization, Hasse edges, χ.
Json lattice_to_json(const IntersectionLattice& l);

/// Rebuilds the lattice from the document's arrangement and checks the listed
/// flats against it. Throws ParseError on mismatch.
IntersectionLattice lattice_from_json(const Json& j, LatticeOptions opts = {});

/// Hasse diagram in Graphviz DOT, one node per flat, bottom to top.
std::string lattice_to_dot(const IntersectionLattice& l);

}  // namespace arrangelab
