#include "torimax/invariants.hpp"

#include <algorithm>
#include <cassert>

namespace torimax {

namespace {

const char* kModule = "lattice_invariants";

[[noreturn]] void fail(const std::string& name, const std::string& msg) {
  throw DomainError(std::string(kModule) + "." + name, msg);
}

IntMat edge_vectors(const std::vector<LatticePoint>& verts) {
  IntMat d;
  d.reserve(verts.size() - 1);
  for (std::size_t i = 1; i < verts.size(); ++i)
    d.push_back(vec_sub(verts[i].coords(), verts[0].coords()));
  return d;
}

// Fan triangulation from the lexicographically smallest vertex; returns
// (dim+1)-tuples of vertex indices.
std::vector<std::vector<std::size_t>> triangulate(const LatticePolytope& p) {
  const int d = p.dim();
  if (p.is_simplex()) {
    std::vector<std::size_t> all(p.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return {all};
  }
  std::vector<std::vector<std::size_t>> tris;
  for (const Face& f : p.faces(d - 1)) {
    if (f.vertex_indices.front() == 0) continue; // facet contains the apex vertex 0
    LatticePolytope sub = face_polytope(f);
    for (const auto& sub_tri : triangulate(sub)) {
      std::vector<std::size_t> t{0};
      for (std::size_t j : sub_tri) {
        const LatticePoint& v = sub.vertices()[j];
        auto it = std::lower_bound(p.vertices().begin(), p.vertices().end(), v);
        t.push_back(static_cast<std::size_t>(it - p.vertices().begin()));
      }
      tris.push_back(std::move(t));
    }
  }
  return tris;
}

} // namespace

Int lattice_length(const Face& e) {
  if (e.dim != 1) fail("BadDimension", "lattice_length requires a 1-face");
  assert(e.vertices.size() == 2);
  return content(vec_sub(e.vertices[1].coords(), e.vertices[0].coords()));
}

Int normalized_volume(const LatticePolytope& p) {
  const int d = p.dim();
  if (d < 1) fail("DegenerateFace", "normalized_volume requires dim >= 1");
  if (p.is_simplex()) {
    // Volume in the saturated lattice equals the product of the invariant
    // factors of the edge-vector matrix.
    return maximal_minor_gcd(edge_vectors(p.vertices()));
  }
  const auto& chart = p.chart_coords();
  Int total = 0;
  for (const auto& tri : triangulate(p)) {
    IntMat m;
    m.reserve(d);
    for (int i = 1; i <= d; ++i) m.push_back(vec_sub(chart[tri[i]], chart[tri[0]]));
    total += abs(determinant(std::move(m)));
  }
  return total;
}

Int normalized_volume(const Face& f) {
  if (f.dim < 1) fail("DegenerateFace", "normalized_volume requires dim >= 1");
  if (f.is_simplex()) return maximal_minor_gcd(edge_vectors(f.vertices));
  return normalized_volume(face_polytope(f));
}

bool is_unimodular(const LatticePolytope& p) {
  return p.dim() >= 1 && p.is_simplex() && normalized_volume(p) == 1;
}

bool is_unimodular(const Face& f) {
  return f.dim >= 1 && f.is_simplex() && normalized_volume(f) == 1;
}

namespace {

bool edge_normals_extend(const std::vector<IntVec>& normals, int n) {
  // Some (n-1)-subset of the adjacent facet normals must extend to a basis
  // of Z^n, i.e. have maximal-minor gcd 1.
  const std::size_t need = static_cast<std::size_t>(n - 1);
  if (normals.size() < need) return false;
  std::vector<std::size_t> idx(need);
  for (std::size_t i = 0; i < need; ++i) idx[i] = i;
  for (;;) {
    IntMat rows;
    rows.reserve(need);
    for (std::size_t i : idx) rows.push_back(normals[i]);
    if (maximal_minor_gcd(rows) == 1) return true;
    // next combination
    bool advanced = false;
    for (std::size_t i = need; i-- > 0;) {
      if (idx[i] + (need - i) < normals.size()) {
        ++idx[i];
        for (std::size_t j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return false;
  }
}

std::vector<IntVec> adjacent_facet_normals(const std::vector<Face>& facets, const Face& edge) {
  std::vector<IntVec> normals;
  for (const Face& f : facets) {
    if (std::includes(f.vertex_indices.begin(), f.vertex_indices.end(),
                      edge.vertex_indices.begin(), edge.vertex_indices.end()))
      normals.push_back(f.outward_normal->coords());
  }
  return normals;
}

} // namespace

SmoothnessResult is_smooth_dim1(const LatticePolytope& p) {
  const int n = p.ambient_dim();
  if (n < 2 || !p.full_dimensional())
    fail("BadDimension", "is_smooth_dim1 requires a full-dimensional polytope, n >= 2");
  auto facets = p.faces(n - 1);
  for (const Face& e : p.faces(1)) {
    if (!edge_normals_extend(adjacent_facet_normals(facets, e), n))
      return {false, e};
  }
  return {true, std::nullopt};
}

bool smooth_at_edge(const LatticePolytope& p, const Face& edge) {
  const int n = p.ambient_dim();
  if (n < 2 || !p.full_dimensional())
    fail("BadDimension", "smooth_at_edge requires a full-dimensional polytope, n >= 2");
  if (edge.dim != 1) fail("BadDimension", "smooth_at_edge requires a 1-face");
  return edge_normals_extend(adjacent_facet_normals(p.faces(n - 1), edge), n);
}

InvariantReport invariant_report(const LatticePolytope& p) {
  const int n = p.ambient_dim();
  if (!p.full_dimensional()) fail("BadDimension", "invariant_report requires a full-dimensional polytope");

  InvariantReport rep;
  rep.volume = normalized_volume(p);
  rep.unimodular = is_unimodular(p);
  rep.smooth_dim1 = n >= 2 ? is_smooth_dim1(p).smooth : true;

  if (n >= 2) {
    auto edges = p.faces(1);
    for (const Face& e : edges) rep.edge_lengths[e.vertex_indices] = lattice_length(e);
    for (const Face& f : p.faces(n - 1)) {
      rep.facet_areas[f.vertex_indices] = normalized_volume(f);
      Int perim = 0;
      for (const Face& e : edges) {
        if (std::includes(f.vertex_indices.begin(), f.vertex_indices.end(),
                          e.vertex_indices.begin(), e.vertex_indices.end()))
          perim += rep.edge_lengths.at(e.vertex_indices);
      }
      rep.perimeters[f.vertex_indices] = perim;
    }
  } else {
    // n == 1: the polytope is its own edge.
    for (const Face& e : p.faces(1)) rep.edge_lengths[e.vertex_indices] = lattice_length(e);
  }
  return rep;
}

} // namespace torimax
