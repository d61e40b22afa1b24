#pragma once

#include "torimax/errors.hpp"
#include "torimax/intlinalg.hpp"
#include "torimax/numeric.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace torimax {

// Desk-scale contract, enforced with explicit errors.
inline constexpr int kMaxAmbientDim = 6;
inline constexpr std::size_t kMaxVertices = 32;
inline constexpr long long kMaxCoordinate = 1'000'000;

/// A point of Z^n with exact integer coordinates.
class LatticePoint {
public:
  LatticePoint() = default;
  explicit LatticePoint(IntVec coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long long> coords) {
    coords_.reserve(coords.size());
    for (long long c : coords) coords_.emplace_back(c);
  }

  int dim() const { return static_cast<int>(coords_.size()); }
  const IntVec& coords() const { return coords_; }
  const Int& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) = default;
  friend std::weak_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
    return a.coords_ <=> b.coords_;
  }

private:
  IntVec coords_;
};

/// A face of a polytope: vertex subset plus affine-span data. Facets of a
/// full-dimensional parent carry a primitive outward normal in ambient
/// coordinates (for lower-dimensional parents the normal is omitted).
struct Face {
  std::vector<std::size_t> vertex_indices; // sorted indices into the parent's vertex order
  std::vector<LatticePoint> vertices;      // parallel to vertex_indices
  int dim = 0;
  std::optional<LatticePoint> outward_normal;

  bool is_simplex() const { return vertices.size() == static_cast<std::size_t>(dim) + 1; }
};

/// Vertex-presented integral polytope. Only extremal points are stored, in
/// lexicographic order, so equal polytopes compare equal. Translates are
/// distinct polytopes; callers normalize when they need a canonical translate.
class LatticePolytope {
public:
  /// Convex hull of a nonempty list of points sharing an ambient dimension.
  /// Interior and duplicate points are dropped. Full-dimensionality is not
  /// required. Throws lattice_core.MixedDimension / lattice_core.CapExceeded /
  /// lattice_core.EmptyInput.
  static LatticePolytope convex_hull(const std::vector<LatticePoint>& points);

  int ambient_dim() const { return ambient_dim_; }
  /// Affine dimension of the vertex set.
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_dim_; }
  bool is_simplex() const { return vertices_.size() == static_cast<std::size_t>(dim_) + 1; }

  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  /// All k-dimensional faces, deterministically ordered by vertex-index set.
  /// k == dim() yields the polytope itself as the single improper face.
  /// Throws lattice_core.BadDimension if k is out of range.
  std::vector<Face> faces(int k) const;

  /// Basis of the saturated sublattice of Z^n parallel to the affine span
  /// (dim() vectors). Empty for a single point.
  const std::vector<IntVec>& lattice_basis() const { return basis_; }

  /// Vertex coordinates in the lattice_basis() chart, relative to the
  /// lexicographically smallest vertex.
  const std::vector<IntVec>& chart_coords() const { return chart_; }

  LatticePolytope translated(const IntVec& t) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

private:
  LatticePolytope() = default;

  struct FacetRec {
    std::vector<std::size_t> onset; // sorted vertex indices
    IntVec chart_normal;            // primitive, outward, in chart coordinates
    Int chart_support;
  };

  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<LatticePoint> vertices_;
  std::vector<IntVec> basis_;
  std::vector<IntVec> chart_;
  std::vector<FacetRec> facets_;
};

/// Affine dimension of the vertex set of P.
inline int polytope_dim(const LatticePolytope& p) { return p.dim(); }

/// Basis of the full sublattice of Z^n parallel to the affine span of F
/// (integer column reduction; saturated, so e.g. the edge (0,0,0)-(2,2,0)
/// yields {(1,1,0)}). Throws lattice_core.DegenerateFace for 0-faces.
std::vector<IntVec> affine_lattice_basis(const Face& f);

/// Rebuild a face as a standalone polytope (its vertices are extremal).
LatticePolytope face_polytope(const Face& f);

/// Saturated basis of the lattice parallel to the affine span of arbitrary
/// points (origin taken at the lexicographic minimum). Shared helper.
std::vector<IntVec> saturated_affine_basis(const std::vector<LatticePoint>& points,
                                           int ambient_dim);

} // namespace torimax
