#pragma once

#include <vector>

#include "arrangelab/arrangement.h"
#include "arrangelab/graph.h"
#include "arrangelab/lattice.h"
#include "arrangelab/polynomial.h"

// Slow reference implementations that share no code path with the lattice
// module beyond the arrangement's normal vectors.
namespace arrangelab::oracle {

/// Chromatic polynomial by memoised deletion-contraction (addition-contraction
/// on dense graphs). Throws BoundExceeded above 30 edges.
IntPolynomial chromatic_polynomial_dc(const Graph& g);

/// Rank of the normals of s by Gaussian elimination over the rationals.
int naive_rank(const Arrangement& a, const HyperplaneSet& s);

/// Basis of the subspace ⋂_{h in s} H_h, as rational vectors.
std::vector<std::vector<Rational>> intersection_basis(const Arrangement& a, const HyperplaneSet& s);

/// X + Y is a flat for every flat Y, checked on explicit subspaces.
bool naive_modular(const IntersectionLattice& l, FlatId x);

/// Closures of every subset of hyperplanes, computed with naive_rank. Sorted.
/// Throws BoundExceeded above 16 hyperplanes.
std::vector<HyperplaneSet> enumerate_flats_bruteforce(const Arrangement& a);

}  // namespace arrangelab::oracle
