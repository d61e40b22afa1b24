#include "torimax/polytope.hpp"

#include <algorithm>
#include <set>

namespace torimax {

namespace {

const char* kModule = "lattice_core";

[[noreturn]] void fail(const std::string& name, const std::string& msg) {
  throw DomainError(std::string(kModule) + "." + name, msg);
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] + (k - i) < n) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

void make_primitive(IntVec& v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
}

struct ChartFacet {
  std::vector<std::size_t> onset;
  IntVec normal;
  Int support;
};

// Supporting-hyperplane enumeration over point subsets; exact and exponential,
// fine at desk scale. `pts` are chart coordinates of a full-dimensional
// configuration in Z^d, d >= 1.
std::vector<ChartFacet> enumerate_facets(const std::vector<IntVec>& pts, int d) {
  const std::size_t m = pts.size();
  std::vector<ChartFacet> out;
  std::set<std::vector<std::size_t>> seen;
  if (m < static_cast<std::size_t>(d)) return out;

  std::vector<std::size_t> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  do {
    IntMat rows;
    rows.reserve(d - 1);
    for (int i = 1; i < d; ++i) rows.push_back(vec_sub(pts[idx[i]], pts[idx[0]]));
    IntVec normal = cofactor_normal(rows, d);
    bool zero = std::all_of(normal.begin(), normal.end(), [](const Int& x) { return x == 0; });
    if (zero) continue; // subset does not span a hyperplane
    make_primitive(normal);
    Int c = dot(normal, pts[idx[0]]);

    bool above = false, below = false;
    for (const auto& p : pts) {
      int s = sign_of(dot(normal, p) - c);
      if (s > 0) above = true;
      if (s < 0) below = true;
      if (above && below) break;
    }
    if (above && below) continue; // not supporting
    if (above) {
      for (Int& x : normal) x = -x;
      c = -c;
    }
    std::vector<std::size_t> onset;
    for (std::size_t i = 0; i < m; ++i)
      if (dot(normal, pts[i]) == c) onset.push_back(i);
    if (seen.insert(onset).second) out.push_back({std::move(onset), std::move(normal), std::move(c)});
  } while (next_combination(idx, m));

  std::sort(out.begin(), out.end(),
            [](const ChartFacet& a, const ChartFacet& b) { return a.onset < b.onset; });
  return out;
}

} // namespace

std::vector<IntVec> saturated_affine_basis(const std::vector<LatticePoint>& points,
                                           int ambient_dim) {
  const LatticePoint* origin = &points[0];
  for (const auto& p : points)
    if (p < *origin) origin = &p;

  IntMat diffs;
  for (const auto& p : points) {
    IntVec d = vec_sub(p.coords(), origin->coords());
    if (std::any_of(d.begin(), d.end(), [](const Int& x) { return x != 0; }))
      diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return {};

  int d = matrix_rank(diffs);
  if (d == ambient_dim) {
    std::vector<IntVec> basis(ambient_dim, IntVec(ambient_dim, 0));
    for (int i = 0; i < ambient_dim; ++i) basis[i][i] = 1;
    return basis;
  }
  // Saturate: the span's lattice is the integer kernel of its orthogonal
  // complement, and integer kernels are saturated by construction.
  std::vector<IntVec> ortho = integer_kernel(diffs);
  return integer_kernel(IntMat(ortho.begin(), ortho.end()));
}

LatticePolytope LatticePolytope::convex_hull(const std::vector<LatticePoint>& points) {
  if (points.empty()) fail("EmptyInput", "convex_hull requires at least one point");
  const int n = points[0].dim();
  if (n < 1 || n > kMaxAmbientDim)
    fail("CapExceeded", "ambient dimension must be between 1 and 6");
  for (const auto& p : points) {
    if (p.dim() != n) fail("MixedDimension", "points have differing ambient dimensions");
    for (const Int& c : p.coords())
      if (abs(c) > kMaxCoordinate) fail("CapExceeded", "coordinate magnitude exceeds 10^6");
  }

  std::vector<LatticePoint> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() > kMaxVertices) fail("CapExceeded", "more than 32 distinct points");

  LatticePolytope poly;
  poly.ambient_dim_ = n;
  poly.basis_ = saturated_affine_basis(pts, n);
  poly.dim_ = static_cast<int>(poly.basis_.size());
  const int d = poly.dim_;

  // Chart coordinates relative to the lexicographic minimum.
  const IntVec& origin = pts[0].coords();
  std::vector<IntVec> chart(pts.size());
  if (d == n) {
    for (std::size_t i = 0; i < pts.size(); ++i) chart[i] = vec_sub(pts[i].coords(), origin);
  } else if (d > 0) {
    IntMat bcols(n, IntVec(d));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < d; ++j) bcols[i][j] = poly.basis_[j][i];
    for (std::size_t i = 0; i < pts.size(); ++i) {
      auto sol = solve_full_rank(bcols, vec_sub(pts[i].coords(), origin));
      if (!sol) fail("BadDimension", "internal: point outside affine span");
      IntVec c(d);
      for (int j = 0; j < d; ++j) {
        if (denominator((*sol)[j]) != 1)
          fail("BadDimension", "internal: non-integral chart coordinate");
        c[j] = numerator((*sol)[j]);
      }
      chart[i] = std::move(c);
    }
  } else {
    chart.assign(pts.size(), IntVec{});
  }

  if (d == 0) {
    poly.vertices_ = {pts[0]};
    poly.chart_ = {IntVec{}};
    return poly;
  }

  auto facets = enumerate_facets(chart, d);

  // A point is extremal iff the normals of its tight facets span the chart.
  std::vector<std::size_t> vertex_of_point(pts.size(), SIZE_MAX);
  std::vector<LatticePoint> verts;
  std::vector<IntVec> vchart;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    IntMat tight;
    for (const auto& f : facets)
      if (std::binary_search(f.onset.begin(), f.onset.end(), i)) tight.push_back(f.normal);
    if (!tight.empty() && matrix_rank(tight) == d) {
      vertex_of_point[i] = verts.size();
      verts.push_back(pts[i]);
      vchart.push_back(chart[i]);
    }
  }

  poly.vertices_ = std::move(verts);
  poly.chart_ = std::move(vchart);
  for (auto& f : facets) {
    FacetRec rec;
    for (std::size_t i : f.onset)
      if (vertex_of_point[i] != SIZE_MAX) rec.onset.push_back(vertex_of_point[i]);
    rec.chart_normal = std::move(f.normal);
    rec.chart_support = std::move(f.support);
    poly.facets_.push_back(std::move(rec));
  }
  return poly;
}

std::vector<Face> LatticePolytope::faces(int k) const {
  if (k < 0 || k > dim_)
    fail("BadDimension", "face dimension out of range");

  auto make_face = [&](std::vector<std::size_t> idx, int fdim,
                       std::optional<LatticePoint> normal) {
    Face f;
    f.vertex_indices = std::move(idx);
    for (std::size_t i : f.vertex_indices) f.vertices.push_back(vertices_[i]);
    f.dim = fdim;
    f.outward_normal = std::move(normal);
    return f;
  };

  std::vector<Face> out;
  if (k == dim_) {
    std::vector<std::size_t> all(vertices_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    out.push_back(make_face(std::move(all), dim_, std::nullopt));
    return out;
  }
  if (k == dim_ - 1) {
    for (const auto& fr : facets_) {
      std::optional<LatticePoint> normal;
      if (full_dimensional()) normal = LatticePoint(fr.chart_normal);
      out.push_back(make_face(fr.onset, k, std::move(normal)));
    }
    return out; // facets_ already sorted by onset
  }
  if (k == 0) {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      out.push_back(make_face({i}, 0, std::nullopt));
    return out;
  }

  if (is_simplex()) {
    // Every vertex subset of a simplex spans a face.
    std::vector<std::size_t> idx(k + 1);
    for (int i = 0; i <= k; ++i) idx[i] = i;
    do {
      out.push_back(make_face(idx, k, std::nullopt));
    } while (next_combination(idx, vertices_.size()));
    return out;
  }

  // k < dim-1: faces of facets, deduplicated.
  std::set<std::vector<std::size_t>> seen;
  for (const auto& fr : facets_) {
    std::vector<LatticePoint> fverts;
    for (std::size_t i : fr.onset) fverts.push_back(vertices_[i]);
    LatticePolytope sub = convex_hull(fverts);
    for (const Face& sf : sub.faces(k)) {
      std::vector<std::size_t> idx;
      for (std::size_t j : sf.vertex_indices) {
        // sub vertices are sorted the same way, so map by value
        const LatticePoint& v = sub.vertices()[j];
        auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
        idx.push_back(static_cast<std::size_t>(it - vertices_.begin()));
      }
      std::sort(idx.begin(), idx.end());
      if (seen.insert(idx).second) out.push_back(make_face(std::move(idx), k, std::nullopt));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Face& a, const Face& b) { return a.vertex_indices < b.vertex_indices; });
  return out;
}

LatticePolytope LatticePolytope::translated(const IntVec& t) const {
  std::vector<LatticePoint> pts;
  pts.reserve(vertices_.size());
  for (const auto& v : vertices_) {
    IntVec c = v.coords();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += t[i];
    pts.emplace_back(std::move(c));
  }
  return convex_hull(pts);
}

std::vector<IntVec> affine_lattice_basis(const Face& f) {
  if (f.dim < 1) fail("DegenerateFace", "affine_lattice_basis requires dim >= 1");
  return saturated_affine_basis(f.vertices, f.vertices[0].dim());
}

LatticePolytope face_polytope(const Face& f) { return LatticePolytope::convex_hull(f.vertices); }

} // namespace torimax
