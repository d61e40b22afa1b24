#include "torimax/topology.hpp"

namespace torimax {

namespace {

[[noreturn]] void fail(const std::string& name, const std::string& msg) {
  throw DomainError(std::string("topology.") + name, msg);
}

} // namespace

Int gauss_degree(const LatticePolytope& p) {
  if (!p.full_dimensional()) fail("BadDimension", "gauss_degree requires a full-dimensional polytope");
  return normalized_volume(p);
}

Int outer_circle_degree(const Face& f) {
  if (f.dim != 2) fail("BadDimension", "outer_circle_degree requires a 2-face");
  LatticePolytope poly = face_polytope(f);
  Int perimeter = 0;
  for (const Face& e : poly.faces(1)) perimeter += lattice_length(e);
  return perimeter - 2;
}

Int khovanskii_betti3(const LatticePolytope& p) {
  if (p.ambient_dim() != 3 || !p.full_dimensional())
    fail("BadDimension", "khovanskii_betti3 requires a full-dimensional 3-polytope");
  Int result = normalized_volume(p);
  for (const Face& f : p.faces(2)) result -= normalized_volume(f);
  for (const Face& e : p.faces(1)) result += lattice_length(e);
  return result;
}

ComponentBudget real_component_budget(const LatticePolytope& p) {
  if (p.ambient_dim() != 3 || !p.full_dimensional())
    fail("BadDimension", "real_component_budget requires a full-dimensional 3-polytope");
  ComponentBudget budget;
  budget.volume = normalized_volume(p);
  budget.betti_complex = khovanskii_betti3(p);
  // 2k + l = volume; beta_*(S^2) = 2, beta_*(RP^2) = 3, so beta_*(RX) = 2k + 3l.
  for (Int k = 0; 2 * k <= budget.volume; ++k) {
    Int l = budget.volume - 2 * k;
    if (3 * l + 2 * k <= budget.betti_complex) budget.feasible_pairs.emplace_back(k, l);
  }
  return budget;
}

} // namespace torimax
