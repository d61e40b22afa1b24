#pragma once

#include "torimax/invariants.hpp"
#include "torimax/topology.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace torimax {

enum class Verdict { HyperplaneOnly, Excluded, HypothesesViolated };

enum class Obstruction {
  NotFullDim,
  NotSmoothDim1,
  S2ParityPerimeter,
  RP2PerimeterExceeded,
  FacetAreaBudget,
  FacetNotUnimodular,
  PairwiseFacetAdjacency,
  LemmaVolumeNotOne,
};

const char* to_string(Verdict v);
const char* to_string(Obstruction o);

/// The violated (or required) relation, with both sides evaluated.
struct InequalityWitness {
  Int lhs;
  Int rhs;
  std::string relation; // the relation that was required, e.g. "==" or "<="
};

/// Verdict of the obstruction engine. HyperplaneOnly means the polytope is a
/// unimodular simplex after the full chain passes; Excluded carries the first
/// violated rule with a recheckable witness; HypothesesViolated marks inputs
/// outside the hypothesis class (not full-dimensional / not smooth in
/// dimension 1), about which no exclusion is claimed.
struct CertificateOutcome {
  Verdict verdict = Verdict::HypothesesViolated;
  std::optional<Obstruction> obstruction;
  std::vector<Face> witness_faces;
  std::optional<InequalityWitness> inequality;
  std::vector<std::string> notes;
};

/// Decision chain for full-dimensional 3-polytopes, in fixed order:
/// smoothness hypothesis, sphere-parity pruning (informational), facet
/// perimeter = 3, facet-area budget <= 4, facet unimodularity, pairwise facet
/// adjacency + simplex shape, and the unimodular-simplex volume check.
/// First failure wins. Throws certifier.BadDimension unless ambient dim is 3.
CertificateOutcome certify_dimension3(const LatticePolytope& p);

/// n >= 3; delegates to certify_dimension3 for n = 3, otherwise recurses:
/// every facet, re-expressed in its own lattice coordinates, must itself
/// certify HyperplaneOnly, facets must meet pairwise in codimension-2 faces,
/// and the simplex volume check decides the rest.
CertificateOutcome certify_recursive(const LatticePolytope& p);

/// Record of the unimodular-simplex volume argument for an n-simplex
/// (n >= 3): hypotheses (unimodular facets, smoothness in dimension 1) plus a
/// constructive trace that maps a unimodular facet to {0, e_1, ..., e_{n-1}},
/// reads off the apex (a_1, ..., a_{n-1}, v), checks v against the volume,
/// checks the facet normals +-(a_i e_n - v e_i), and evaluates the minor gcd
/// at the edge [0, e_1] (which equals v^{n-2}, forcing v = 1 when smooth).
struct LemmaCheck {
  Int volume;
  bool passes_hypotheses = false;
  bool facets_unimodular = false;
  bool smooth_dim1 = false;
  std::vector<std::size_t> base_facet; // vertex indices of the chosen unimodular facet
  IntVec apex_image;                   // (a_1, ..., a_{n-1}, v)
  bool normals_match = false;
  Int edge_minor_gcd;
  bool edge_condition_consistent = false;
};

/// Throws certifier.NotSimplex / certifier.NoUnimodularFacet / certifier.BadDimension.
LemmaCheck lemma_unimodular_check(const LatticePolytope& s);

/// Exhaustive enumeration of lattice n-simplices with vertices in
/// [0,bound]^n, one representative per integer-translation class. Counts the
/// (unimodular facets x smooth) categories; any simplex with unimodular
/// facets, smooth in dimension 1 and volume > 1 is a violation (there are
/// none). Simplices with unimodular facets that are not smooth realize the
/// volume histogram. Throws certifier.BoundsExceeded / certifier.BadDimension.
struct OracleSummary {
  int n = 0;
  int bound = 0;
  long long classes = 0;          // affinely independent translation classes
  long long uni_smooth = 0;       // unimodular facets and smooth in dim 1
  long long violations = 0;       // uni_smooth with volume != 1
  long long uni_not_smooth = 0;   // unimodular facets, not smooth in dim 1
  long long rest = 0;             // some facet not unimodular
  std::map<Int, long long> not_smooth_volumes;
  std::vector<LatticePolytope> violation_examples;  // capped
  std::vector<LatticePolytope> not_smooth_examples; // capped
};

OracleSummary brute_force_lemma_oracle(int bound, int n, unsigned threads = 0);

/// The tetrahedron (0,0,0), (1,0,0), (0,1,0), (1,p,q) for coprime (p,q),
/// q >= 1: all four facets unimodular, volume q, smooth in dimension 1 iff
/// q = 1, with the edge joining (1,0,0) and (0,1,0) as the smoothness
/// obstruction. The report re-verifies each of these properties.
/// Throws certifier.BadParameters unless gcd(p,q) = 1 and q >= 1.
struct FamilyReport {
  LatticePolytope polytope;
  Int volume;
  bool facets_unimodular = false;
  bool smooth_dim1 = false;
  bool edge_e1_e2_smooth = false;        // the edge joining (1,0,0) and (0,1,0)
  std::optional<Face> witness_edge;      // first failing edge when not smooth
};

FamilyReport counterexample_family(const Int& p, const Int& q);

/// Deterministic streaming enumeration behind the oracle, exposed for
/// exhaustiveness tests: canonical representatives (lexicographically
/// smallest vertex at the origin) of all affinely independent n-simplices
/// with vertices in [0,bound]^n up to translation.
void for_each_canonical_simplex(int n, int bound,
                                const std::function<void(const std::vector<LatticePoint>&)>& fn);

} // namespace torimax
