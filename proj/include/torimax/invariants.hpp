#pragma once

#include "torimax/polytope.hpp"

#include <map>
#include <optional>

namespace torimax {

/// Lattice length of an edge: gcd of the endpoint coordinate differences,
/// which equals |E ∩ Z^n| - 1. Throws lattice_invariants.BadDimension.
Int lattice_length(const Face& e);

/// Normalized lattice volume relative to the saturated lattice of the affine
/// span (the unimodular simplex has volume 1). Simplices reduce to the gcd of
/// maximal minors of the edge-vector matrix; general polytopes are fan-
/// triangulated from the lexicographically smallest vertex.
/// Throws lattice_invariants.DegenerateFace for dimension 0.
Int normalized_volume(const LatticePolytope& p);
Int normalized_volume(const Face& f);

/// True iff the face/polytope is a simplex of normalized volume 1.
/// Total predicate: non-simplices (and points) are not unimodular.
bool is_unimodular(const LatticePolytope& p);
bool is_unimodular(const Face& f);

struct SmoothnessResult {
  bool smooth = false;
  std::optional<Face> witness_edge; // lexicographically first failing edge
};

/// Smooth-in-dimension-1 test: at every edge, some n-1 of the adjacent
/// facets' primitive outward normals extend to a basis of Z^n (gcd of maximal
/// minors equals 1). Throws lattice_invariants.BadDimension unless P is
/// full-dimensional with n >= 2.
SmoothnessResult is_smooth_dim1(const LatticePolytope& p);

/// The per-edge test underlying is_smooth_dim1, for a single edge of P.
bool smooth_at_edge(const LatticePolytope& p, const Face& edge);

/// All lattice/topological invariants of a full-dimensional polytope.
/// Face keys are sorted vertex-index sets, so reports are deterministic.
struct InvariantReport {
  Int volume;
  std::map<std::vector<std::size_t>, Int> facet_areas;
  std::map<std::vector<std::size_t>, Int> edge_lengths;
  std::map<std::vector<std::size_t>, Int> perimeters;
  bool smooth_dim1 = false;
  bool unimodular = false;
};

InvariantReport invariant_report(const LatticePolytope& p);

} // namespace torimax
