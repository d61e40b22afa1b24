#pragma once

#include "torimax/invariants.hpp"

#include <utility>
#include <vector>

namespace torimax {

/// Degree of the logarithmic Gauss map of a hypersurface with Newton polytope
/// P: the normalized volume of P. Throws topology.BadDimension unless P is
/// full-dimensional.
Int gauss_degree(const LatticePolytope& p);

/// Degree of the Gauss map restricted to the outer circle over a 2-face:
/// lattice perimeter minus 2.
Int outer_circle_degree(const Face& f);

/// Total Z/2 Betti number of a smooth hypersurface in the 3-dimensional toric
/// variety of P: Vol_3(P) - sum of facet areas + sum of edge lengths.
Int khovanskii_betti3(const LatticePolytope& p);

/// Feasible real-component counts for a 3-polytope: pairs (k spheres,
/// l projective planes) with 2k + l = Vol_3 and 3l + 2k bounded by the
/// complex Betti sum (Smith-Thom).
struct ComponentBudget {
  Int volume;
  Int betti_complex;
  std::vector<std::pair<Int, Int>> feasible_pairs; // (k, l), l descending
};

ComponentBudget real_component_budget(const LatticePolytope& p);

} // namespace torimax
