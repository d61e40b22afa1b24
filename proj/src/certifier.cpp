#include "torimax/certifier.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>
#include <sstream>
#include <thread>

namespace torimax {

namespace {

[[noreturn]] void fail(const std::string& name, const std::string& msg) {
  throw DomainError(std::string("certifier.") + name, msg);
}

std::string face_label(const Face& f) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < f.vertices.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    const auto& c = f.vertices[i].coords();
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) os << ",";
      os << c[j];
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

int affine_rank_of(const std::vector<LatticePoint>& pts) {
  if (pts.size() <= 1) return 0;
  IntMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i)
    diffs.push_back(vec_sub(pts[i].coords(), pts[0].coords()));
  return matrix_rank(diffs);
}

// Shared tail of both certify paths: pairwise facet adjacency in codimension
// 2, simplex shape, then the unimodular-simplex volume check.
CertificateOutcome certify_tail(const LatticePolytope& p, const std::vector<Face>& facets,
                                CertificateOutcome out) {
  const int n = p.ambient_dim();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      std::vector<LatticePoint> common;
      for (std::size_t a = 0, b = 0; a < facets[i].vertex_indices.size() &&
                                     b < facets[j].vertex_indices.size();) {
        if (facets[i].vertex_indices[a] == facets[j].vertex_indices[b]) {
          common.push_back(facets[i].vertices[a]);
          ++a;
          ++b;
        } else if (facets[i].vertex_indices[a] < facets[j].vertex_indices[b]) {
          ++a;
        } else {
          ++b;
        }
      }
      bool adjacent = !common.empty() && affine_rank_of(common) == n - 2;
      if (!adjacent) {
        out.verdict = Verdict::Excluded;
        out.obstruction = Obstruction::PairwiseFacetAdjacency;
        out.witness_faces = {facets[i], facets[j]};
        out.notes.push_back("facets " + face_label(facets[i]) + " and " + face_label(facets[j]) +
                            " do not meet in a codimension-2 face");
        return out;
      }
    }
  }
  if (!p.is_simplex() || facets.size() > static_cast<std::size_t>(n) + 1) {
    out.verdict = Verdict::Excluded;
    out.obstruction = Obstruction::PairwiseFacetAdjacency;
    out.notes.push_back("facets are pairwise adjacent but the polytope is not a simplex");
    return out;
  }

  LemmaCheck lemma = lemma_unimodular_check(p);
  if (lemma.volume != 1) {
    out.verdict = Verdict::Excluded;
    out.obstruction = Obstruction::LemmaVolumeNotOne;
    out.inequality = InequalityWitness{lemma.volume, 1, "=="};
    return out;
  }
  out.verdict = Verdict::HyperplaneOnly;
  out.notes.push_back("unimodular simplex: only the hyperplane case remains");
  return out;
}

} // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::HyperplaneOnly: return "HyperplaneOnly";
    case Verdict::Excluded: return "Excluded";
    case Verdict::HypothesesViolated: return "HypothesesViolated";
  }
  return "?";
}

const char* to_string(Obstruction o) {
  switch (o) {
    case Obstruction::NotFullDim: return "NotFullDim";
    case Obstruction::NotSmoothDim1: return "NotSmoothDim1";
    case Obstruction::S2ParityPerimeter: return "S2ParityPerimeter";
    case Obstruction::RP2PerimeterExceeded: return "RP2PerimeterExceeded";
    case Obstruction::FacetAreaBudget: return "FacetAreaBudget";
    case Obstruction::FacetNotUnimodular: return "FacetNotUnimodular";
    case Obstruction::PairwiseFacetAdjacency: return "PairwiseFacetAdjacency";
    case Obstruction::LemmaVolumeNotOne: return "LemmaVolumeNotOne";
  }
  return "?";
}

CertificateOutcome certify_dimension3(const LatticePolytope& p) {
  if (p.ambient_dim() != 3) fail("BadDimension", "certify_dimension3 requires ambient dimension 3");
  CertificateOutcome out;

  if (!p.full_dimensional()) {
    out.verdict = Verdict::HypothesesViolated;
    out.obstruction = Obstruction::NotFullDim;
    out.notes.push_back("polytope is not full-dimensional");
    return out;
  }

  SmoothnessResult sm = is_smooth_dim1(p);
  if (!sm.smooth) {
    out.verdict = Verdict::HypothesesViolated;
    out.obstruction = Obstruction::NotSmoothDim1;
    out.witness_faces = {*sm.witness_edge};
    out.notes.push_back("not smooth in dimension 1 along edge " + face_label(*sm.witness_edge));
    return out;
  }

  auto edges = p.faces(1);
  auto facets = p.faces(2);
  std::map<std::vector<std::size_t>, Int> lengths;
  for (const Face& e : edges) lengths[e.vertex_indices] = lattice_length(e);

  bool all_even = std::all_of(edges.begin(), edges.end(), [&](const Face& e) {
    return lengths.at(e.vertex_indices) % 2 == 0;
  });
  if (all_even) {
    // Informational only: in the outer-sphere case all pairwise intersections
    // are even, so each facet perimeter would be >= 6, but the degree-2 bound
    // on the outer-circle degree caps perimeters at 4. The sphere case is
    // therefore vacuous and the chain continues with the projective-plane case.
    out.notes.push_back(std::string(to_string(Obstruction::S2ParityPerimeter)) +
                        ": all edge lengths even; sphere-type outer component is impossible "
                        "(facet perimeter >= 6 exceeds the degree bound 4)");
  }

  for (const Face& f : facets) {
    Int perimeter = 0;
    for (const Face& e : edges) {
      if (std::includes(f.vertex_indices.begin(), f.vertex_indices.end(),
                        e.vertex_indices.begin(), e.vertex_indices.end()))
        perimeter += lengths.at(e.vertex_indices);
    }
    if (perimeter != 3) {
      out.verdict = Verdict::Excluded;
      out.obstruction = Obstruction::RP2PerimeterExceeded;
      out.witness_faces = {f};
      out.inequality = InequalityWitness{perimeter, 3, "=="};
      out.notes.push_back("facet " + face_label(f) + " has lattice perimeter " + perimeter.str() +
                          "; the projective-plane case forces perimeter 3");
      return out;
    }
  }

  Int total_area = 0;
  for (const Face& f : facets) total_area += normalized_volume(f);
  if (total_area > 4) {
    out.verdict = Verdict::Excluded;
    out.obstruction = Obstruction::FacetAreaBudget;
    out.inequality = InequalityWitness{total_area, 4, "<="};
    out.notes.push_back("total facet area " + total_area.str() +
                        " exceeds the Smith-Thom/Euler-characteristic budget 4");
    return out;
  }

  for (const Face& f : facets) {
    if (!is_unimodular(f)) {
      out.verdict = Verdict::Excluded;
      out.obstruction = Obstruction::FacetNotUnimodular;
      out.witness_faces = {f};
      out.inequality = InequalityWitness{normalized_volume(f), 1, "=="};
      return out;
    }
  }

  return certify_tail(p, facets, std::move(out));
}

CertificateOutcome certify_recursive(const LatticePolytope& p) {
  const int n = p.ambient_dim();
  if (n < 3) fail("BadDimension", "certify_recursive requires ambient dimension >= 3");
  if (n == 3) return certify_dimension3(p);

  CertificateOutcome out;
  if (!p.full_dimensional()) {
    out.verdict = Verdict::HypothesesViolated;
    out.obstruction = Obstruction::NotFullDim;
    out.notes.push_back("polytope is not full-dimensional");
    return out;
  }

  SmoothnessResult sm = is_smooth_dim1(p);
  if (!sm.smooth) {
    out.verdict = Verdict::HypothesesViolated;
    out.obstruction = Obstruction::NotSmoothDim1;
    out.witness_faces = {*sm.witness_edge};
    out.notes.push_back("not smooth in dimension 1 along edge " + face_label(*sm.witness_edge));
    return out;
  }

  auto facets = p.faces(n - 1);
  for (const Face& f : facets) {
    // Re-express the facet in the coordinates of its own affine lattice; the
    // restriction of the Gauss map lives there.
    LatticePolytope facet_poly = face_polytope(f);
    std::vector<LatticePoint> chart_pts;
    for (const IntVec& c : facet_poly.chart_coords()) chart_pts.emplace_back(c);
    LatticePolytope reduced = LatticePolytope::convex_hull(chart_pts);
    CertificateOutcome inner = certify_recursive(reduced);
    if (inner.verdict != Verdict::HyperplaneOnly) {
      out.verdict = Verdict::Excluded;
      out.obstruction = Obstruction::FacetNotUnimodular;
      out.witness_faces = {f};
      std::string why = std::string(to_string(inner.verdict));
      if (inner.obstruction) why += std::string("/") + to_string(*inner.obstruction);
      out.notes.push_back("facet " + face_label(f) +
                          " fails the recursive hyperplane certificate: " + why);
      for (const std::string& note : inner.notes) out.notes.push_back("  facet: " + note);
      return out;
    }
  }

  return certify_tail(p, facets, std::move(out));
}

LemmaCheck lemma_unimodular_check(const LatticePolytope& s) {
  const int n = s.ambient_dim();
  if (n < 3) fail("BadDimension", "lemma_unimodular_check requires ambient dimension >= 3");
  if (!s.full_dimensional() || !s.is_simplex())
    fail("NotSimplex", "lemma_unimodular_check requires a full-dimensional simplex");

  LemmaCheck check;
  auto facets = s.faces(n - 1);
  check.facets_unimodular =
      std::all_of(facets.begin(), facets.end(), [](const Face& f) { return is_unimodular(f); });
  check.smooth_dim1 = is_smooth_dim1(s).smooth;
  check.passes_hypotheses = check.facets_unimodular && check.smooth_dim1;
  check.volume = normalized_volume(s);

  const Face* base = nullptr;
  for (const Face& f : facets) {
    if (is_unimodular(f)) {
      base = &f;
      break;
    }
  }
  if (!base) fail("NoUnimodularFacet", "no unimodular facet to anchor the transform");
  check.base_facet = base->vertex_indices;

  // Unimodular affine map sending the base facet to {0, e_1, ..., e_{n-1}}.
  const IntVec& w0 = base->vertices[0].coords();
  std::vector<IntVec> cols;
  for (std::size_t i = 1; i < base->vertices.size(); ++i)
    cols.push_back(vec_sub(base->vertices[i].coords(), w0));
  auto extra = complete_to_unimodular(cols);
  if (!extra) fail("NoUnimodularFacet", "facet edge vectors do not span a saturated lattice");
  IntMat m(n, IntVec(n));
  for (int j = 0; j < n - 1; ++j)
    for (int i = 0; i < n; ++i) m[i][j] = cols[j][i];
  for (int i = 0; i < n; ++i) m[i][n - 1] = (*extra)[i];
  IntMat minv = unimodular_inverse(m);

  std::vector<IntVec> images;
  for (const LatticePoint& v : s.vertices())
    images.push_back(mat_vec(minv, vec_sub(v.coords(), w0)));
  // Locate the apex: the unique vertex not on the base facet.
  std::size_t apex = 0;
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (!std::binary_search(base->vertex_indices.begin(), base->vertex_indices.end(), i)) {
      apex = i;
      break;
    }
  }
  if (images[apex][n - 1] < 0)
    for (auto& img : images) img[n - 1] = -img[n - 1]; // flip the last axis; base is fixed
  check.apex_image = images[apex];
  const Int v = check.apex_image[n - 1];
  if (v != check.volume)
    throw std::logic_error("lemma_unimodular_check: transformed apex height != volume");

  // Facet normals of the transformed simplex must be +-(a_i e_n - v e_i).
  std::vector<LatticePoint> img_pts;
  for (const auto& img : images) img_pts.emplace_back(img);
  LatticePolytope s2 = LatticePolytope::convex_hull(img_pts);
  check.normals_match = true;
  for (int i = 1; i <= n - 1; ++i) {
    IntVec expected(n, 0);
    expected[i - 1] = -v;
    expected[n - 1] = check.apex_image[i - 1];
    Int g = content(expected);
    if (g > 1)
      for (Int& x : expected) x /= g;
    // the facet omitting e_i contains 0, all e_j (j != i) and the apex image
    IntVec ei(n, 0);
    ei[i - 1] = 1;
    bool found = false;
    for (const Face& f : s2.faces(n - 1)) {
      bool omits = true;
      for (const auto& fv : f.vertices)
        if (fv.coords() == ei) omits = false;
      if (!omits) continue;
      found = true;
      IntVec got = f.outward_normal->coords();
      IntVec neg(got.size());
      for (std::size_t j = 0; j < got.size(); ++j) neg[j] = -got[j];
      if (got != expected && neg != expected) check.normals_match = false;
    }
    if (!found) check.normals_match = false;
  }

  // Minor gcd at the transformed edge [0, e_1]: equals v^{n-2}, so smoothness
  // along that edge forces v = 1.
  IntVec zero(n, 0), e1(n, 0);
  e1[0] = 1;
  auto s2facets = s2.faces(n - 1);
  IntMat adjacent;
  for (const Face& f : s2facets) {
    bool has0 = false, has1 = false;
    for (const auto& fv : f.vertices) {
      if (fv.coords() == zero) has0 = true;
      if (fv.coords() == e1) has1 = true;
    }
    if (has0 && has1) adjacent.push_back(f.outward_normal->coords());
  }
  check.edge_minor_gcd = maximal_minor_gcd(adjacent);
  Int expected_gcd = 1;
  for (int i = 0; i < n - 2; ++i) expected_gcd *= abs(v);
  check.edge_condition_consistent = (check.edge_minor_gcd == expected_gcd);
  return check;
}

FamilyReport counterexample_family(const Int& p, const Int& q) {
  if (q < 1) fail("BadParameters", "q must be >= 1");
  if (gcd_nonneg(p, q) != 1) fail("BadParameters", "p and q must be coprime");

  FamilyReport rep{LatticePolytope::convex_hull({LatticePoint{0, 0, 0}, LatticePoint{1, 0, 0},
                                                 LatticePoint{0, 1, 0},
                                                 LatticePoint(IntVec{1, p, q})}),
                   0, false, false, false, std::nullopt};
  rep.volume = normalized_volume(rep.polytope);
  if (rep.volume != q) throw std::logic_error("counterexample_family: volume != q");

  rep.facets_unimodular = true;
  for (const Face& f : rep.polytope.faces(2))
    if (!is_unimodular(f)) rep.facets_unimodular = false;
  if (!rep.facets_unimodular)
    throw std::logic_error("counterexample_family: facets must be unimodular");

  SmoothnessResult sm = is_smooth_dim1(rep.polytope);
  rep.smooth_dim1 = sm.smooth;
  rep.witness_edge = sm.witness_edge;
  if (rep.smooth_dim1 != (q == 1))
    throw std::logic_error("counterexample_family: smoothness must hold exactly for q = 1");

  const LatticePoint a{1, 0, 0}, b{0, 1, 0};
  for (const Face& e : rep.polytope.faces(1)) {
    if ((e.vertices[0] == a && e.vertices[1] == b) || (e.vertices[0] == b && e.vertices[1] == a))
      rep.edge_e1_e2_smooth = smooth_at_edge(rep.polytope, e);
  }
  if (rep.edge_e1_e2_smooth != (q == 1))
    throw std::logic_error("counterexample_family: the (1,0,0)-(0,1,0) edge must obstruct");
  return rep;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration (int64 fast path; coordinates are bounded by the
// preconditions, so every intermediate determinant fits comfortably).

namespace {

using Pt = std::array<long long, 4>;

long long det_small(const std::vector<Pt>& rows, int n) {
  if (n == 1) return rows[0][0];
  if (n == 2) return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
  if (n == 3)
    return rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1]) -
           rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0]) +
           rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0]);
  // n == 4: expand along the first row
  long long det = 0;
  for (int j = 0; j < 4; ++j) {
    if (rows[0][j] == 0) continue;
    std::vector<Pt> minor(3);
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c)
        if (c != j) minor[r - 1][cc++] = rows[r][c];
    }
    long long term = rows[0][j] * det_small(minor, 3);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Unreduced cofactor normal of (n-1) row vectors in Z^n; its content is the
// facet's normalized volume and the reduced vector is the primitive normal.
Pt cofactor_small(const std::vector<Pt>& rows, int n) {
  Pt nu{0, 0, 0, 0};
  for (int j = 0; j < n; ++j) {
    std::vector<Pt> minor(n - 1);
    for (int r = 0; r < n - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c)
        if (c != j) minor[r][cc++] = rows[r][c];
    }
    long long d = det_small(minor, n - 1);
    nu[j] = (j % 2 == 0) ? d : -d;
  }
  return nu;
}

struct RawEval {
  long long volume = 0;
  bool facets_unimodular = false;
  bool smooth = false;
};

RawEval evaluate_raw_simplex(const std::vector<Pt>& verts, int n, long long absdet) {
  RawEval ev;
  ev.volume = absdet;

  // Primitive facet normals; the facet omitting vertex k has area equal to
  // the content of the unreduced cofactor vector.
  std::vector<Pt> normals(n + 1);
  ev.facets_unimodular = true;
  for (int k = 0; k <= n; ++k) {
    std::vector<Pt> rows;
    int first = (k == 0) ? 1 : 0;
    for (int i = 0; i <= n; ++i) {
      if (i == k || i == first) continue;
      Pt diff;
      for (int c = 0; c < n; ++c) diff[c] = verts[i][c] - verts[first][c];
      rows.push_back(diff);
    }
    Pt nu = cofactor_small(rows, n);
    long long area = 0;
    for (int c = 0; c < n; ++c) area = gcd_ll(area, nu[c]);
    if (area != 1) ev.facets_unimodular = false;
    for (int c = 0; c < n; ++c) nu[c] /= area; // primitive
    normals[k] = nu;
  }
  if (!ev.facets_unimodular) return ev;

  // Smoothness: at the edge (i,j) the adjacent facets are those omitting any
  // other vertex; their primitive normals must have maximal-minor gcd 1.
  ev.smooth = true;
  for (int i = 0; i <= n && ev.smooth; ++i) {
    for (int j = i + 1; j <= n && ev.smooth; ++j) {
      std::vector<Pt> rows;
      for (int k = 0; k <= n; ++k)
        if (k != i && k != j) rows.push_back(normals[k]);
      // gcd over all (n-1)x(n-1) minors of the (n-1) x n matrix
      long long g = 0;
      for (int drop = 0; drop < n; ++drop) {
        std::vector<Pt> sq(n - 1);
        for (int r = 0; r < n - 1; ++r) {
          int cc = 0;
          for (int c = 0; c < n; ++c)
            if (c != drop) sq[r][cc++] = rows[r][c];
        }
        g = gcd_ll(g, det_small(sq, n - 1));
      }
      if (g != 1) ev.smooth = false;
    }
  }
  return ev;
}

std::vector<LatticePoint> canonical_points(const std::vector<Pt>& verts, int n) {
  std::size_t min_idx = 0;
  for (std::size_t i = 1; i < verts.size(); ++i) {
    for (int c = 0; c < n; ++c) {
      if (verts[i][c] != verts[min_idx][c]) {
        if (verts[i][c] < verts[min_idx][c]) min_idx = i;
        break;
      }
    }
  }
  std::vector<LatticePoint> pts;
  for (const auto& v : verts) {
    IntVec coord(n);
    for (int c = 0; c < n; ++c) coord[c] = v[c] - verts[min_idx][c];
    pts.emplace_back(std::move(coord));
  }
  return pts;
}

// Enumerate (n+1)-subsets of the grid [0,bound]^n whose coordinate-wise
// minimum is 0 on every axis (the unique in-box representative of each
// translation class) and which are affinely independent. first_lo/first_hi
// bound the smallest grid index, for parallel chunking.
template <typename Fn>
void enumerate_raw(int n, int bound, int first_lo, int first_hi, Fn&& fn) {
  const int side = bound + 1;
  int npoints = 1;
  for (int i = 0; i < n; ++i) npoints *= side;

  std::vector<Pt> grid(npoints);
  for (int id = 0; id < npoints; ++id) {
    int rem = id;
    for (int c = n - 1; c >= 0; --c) {
      grid[id][c] = rem % side;
      rem /= side;
    }
  }

  const int k = n + 1;
  std::vector<int> idx(k);
  std::vector<Pt> verts(k);
  for (int i0 = first_lo; i0 < first_hi; ++i0) {
    idx[0] = i0;
    for (int i = 1; i < k; ++i) idx[i] = i0 + i;
    if (idx[k - 1] >= npoints) break;
    for (;;) {
      bool walls = true;
      for (int c = 0; c < n && walls; ++c) {
        long long mn = grid[idx[0]][c];
        for (int i = 1; i < k; ++i) mn = std::min(mn, grid[idx[i]][c]);
        if (mn != 0) walls = false;
      }
      if (walls) {
        for (int i = 0; i < k; ++i) verts[i] = grid[idx[i]];
        std::vector<Pt> diffs(n);
        for (int i = 1; i < k; ++i)
          for (int c = 0; c < n; ++c) diffs[i - 1][c] = verts[i][c] - verts[0][c];
        long long det = det_small(diffs, n);
        if (det != 0) fn(verts, det < 0 ? -det : det);
      }
      // next combination with fixed idx[0]
      int pos = -1;
      for (int i = k - 1; i >= 1; --i) {
        if (idx[i] + (k - 1 - i) < npoints - 1) {
          pos = i;
          break;
        }
      }
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
}

} // namespace

void for_each_canonical_simplex(int n, int bound,
                                const std::function<void(const std::vector<LatticePoint>&)>& fn) {
  if (n != 3 && n != 4) fail("BadDimension", "enumeration supports n = 3 or 4");
  if (bound < 1) fail("BoundsExceeded", "bound must be >= 1");
  const int side = bound + 1;
  int npoints = 1;
  for (int i = 0; i < n; ++i) npoints *= side;
  enumerate_raw(n, bound, 0, npoints, [&](const std::vector<Pt>& verts, long long) {
    fn(canonical_points(verts, n));
  });
}

OracleSummary brute_force_lemma_oracle(int bound, int n, unsigned threads) {
  if (n != 3 && n != 4) fail("BadDimension", "oracle supports n = 3 or 4");
  if (bound < 1 || (n == 3 && bound > 4) || (n == 4 && bound > 2))
    fail("BoundsExceeded", "bound must be in [1,4] for n=3 and [1,2] for n=4");

  const int side = bound + 1;
  int npoints = 1;
  for (int i = 0; i < n; ++i) npoints *= side;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, 16);

  struct Local {
    long long classes = 0, uni_smooth = 0, violations = 0, uni_not_smooth = 0, rest = 0;
    std::map<long long, long long> hist;
    std::vector<std::vector<LatticePoint>> violation_examples;
    std::vector<std::vector<LatticePoint>> not_smooth_examples;
  };
  std::vector<Local> locals(threads);
  std::vector<std::thread> pool;
  const int chunk = (npoints + static_cast<int>(threads) - 1) / static_cast<int>(threads);
  constexpr std::size_t kExampleCap = 8;

  for (unsigned t = 0; t < threads; ++t) {
    int lo = static_cast<int>(t) * chunk;
    int hi = std::min(npoints, lo + chunk);
    pool.emplace_back([&, t, lo, hi] {
      Local& ls = locals[t];
      enumerate_raw(n, bound, lo, hi, [&](const std::vector<Pt>& verts, long long absdet) {
        ++ls.classes;
        RawEval ev = evaluate_raw_simplex(verts, n, absdet);
        if (!ev.facets_unimodular) {
          ++ls.rest;
          return;
        }
        if (ev.smooth) {
          ++ls.uni_smooth;
          if (ev.volume != 1) {
            ++ls.violations;
            if (ls.violation_examples.size() < kExampleCap)
              ls.violation_examples.push_back(canonical_points(verts, n));
          }
        } else {
          ++ls.uni_not_smooth;
          ++ls.hist[ev.volume];
          if (ls.not_smooth_examples.size() < kExampleCap)
            ls.not_smooth_examples.push_back(canonical_points(verts, n));
        }
      });
    });
  }
  for (auto& th : pool) th.join();

  OracleSummary sum;
  sum.n = n;
  sum.bound = bound;
  for (const Local& ls : locals) {
    sum.classes += ls.classes;
    sum.uni_smooth += ls.uni_smooth;
    sum.violations += ls.violations;
    sum.uni_not_smooth += ls.uni_not_smooth;
    sum.rest += ls.rest;
    for (const auto& [vol, cnt] : ls.hist) sum.not_smooth_volumes[Int(vol)] += cnt;
    for (const auto& ex : ls.violation_examples)
      if (sum.violation_examples.size() < kExampleCap)
        sum.violation_examples.push_back(LatticePolytope::convex_hull(ex));
    for (const auto& ex : ls.not_smooth_examples)
      if (sum.not_smooth_examples.size() < kExampleCap)
        sum.not_smooth_examples.push_back(LatticePolytope::convex_hull(ex));
  }
  return sum;
}

} // namespace torimax
