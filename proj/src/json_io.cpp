#include "torimax/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace torimax {

namespace {

std::string face_key(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) os << ",";
    os << idx[i];
  }
  os << "]";
  return os.str();
}

OrderedJson vertices_json(const std::vector<LatticePoint>& verts) {
  OrderedJson arr = OrderedJson::array();
  for (const auto& v : verts) {
    OrderedJson row = OrderedJson::array();
    for (const Int& c : v.coords()) row.push_back(json_int(c));
    arr.push_back(std::move(row));
  }
  return arr;
}

OrderedJson int_map_json(const std::map<std::vector<std::size_t>, Int>& m) {
  OrderedJson obj = OrderedJson::object();
  for (const auto& [k, v] : m) obj[face_key(k)] = json_int(v);
  return obj;
}

} // namespace

OrderedJson json_int(const Int& v) {
  static const Int lo = std::numeric_limits<long long>::min();
  static const Int hi = std::numeric_limits<long long>::max();
  if (v >= lo && v <= hi) return v.convert_to<long long>();
  return v.str();
}

LatticePolytope polytope_from_json(const OrderedJson& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("vertices"))
    throw ParseError("polytope document must be {\"dim\": n, \"vertices\": [[...],...]}");
  if (!doc["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
  const long long n = doc["dim"].get<long long>();
  if (!doc["vertices"].is_array() || doc["vertices"].empty())
    throw ParseError("\"vertices\" must be a nonempty array");
  std::vector<LatticePoint> pts;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array() || static_cast<long long>(row.size()) != n)
      throw ParseError("each vertex must be an array of dim integers");
    IntVec coords;
    for (const auto& c : row) {
      if (!c.is_number_integer()) throw ParseError("vertex coordinates must be integers");
      coords.emplace_back(c.get<long long>());
    }
    pts.emplace_back(std::move(coords));
  }
  return LatticePolytope::convex_hull(pts);
}

LatticePolytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open polytope file: " + path);
  OrderedJson doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return polytope_from_json(doc);
}

OrderedJson polytope_to_json(const LatticePolytope& p) {
  OrderedJson doc = OrderedJson::object();
  doc["dim"] = p.ambient_dim();
  doc["vertices"] = vertices_json(p.vertices());
  return doc;
}

OrderedJson to_json(const Face& f) {
  OrderedJson doc = OrderedJson::object();
  doc["vertex_indices"] = f.vertex_indices;
  doc["vertices"] = vertices_json(f.vertices);
  doc["dim"] = f.dim;
  if (f.outward_normal) {
    OrderedJson nu = OrderedJson::array();
    for (const Int& c : f.outward_normal->coords()) nu.push_back(json_int(c));
    doc["outward_normal"] = std::move(nu);
  }
  return doc;
}

OrderedJson to_json(const InvariantReport& rep) {
  OrderedJson doc = OrderedJson::object();
  doc["volume"] = json_int(rep.volume);
  doc["facet_areas"] = int_map_json(rep.facet_areas);
  doc["edge_lengths"] = int_map_json(rep.edge_lengths);
  doc["perimeters"] = int_map_json(rep.perimeters);
  doc["smooth_dim1"] = rep.smooth_dim1;
  doc["unimodular"] = rep.unimodular;
  return doc;
}

OrderedJson to_json(const ComponentBudget& budget) {
  OrderedJson doc = OrderedJson::object();
  doc["volume"] = json_int(budget.volume);
  doc["betti_complex"] = json_int(budget.betti_complex);
  OrderedJson pairs = OrderedJson::array();
  for (const auto& [k, l] : budget.feasible_pairs) {
    OrderedJson pair = OrderedJson::object();
    pair["spheres"] = json_int(k);
    pair["projective_planes"] = json_int(l);
    pairs.push_back(std::move(pair));
  }
  doc["feasible_pairs"] = std::move(pairs);
  return doc;
}

OrderedJson to_json(const CertificateOutcome& out) {
  OrderedJson doc = OrderedJson::object();
  doc["verdict"] = to_string(out.verdict);
  if (out.obstruction)
    doc["obstruction"] = to_string(*out.obstruction);
  else
    doc["obstruction"] = nullptr;
  OrderedJson witness = OrderedJson::object();
  OrderedJson faces = OrderedJson::array();
  for (const Face& f : out.witness_faces) faces.push_back(to_json(f));
  witness["faces"] = std::move(faces);
  doc["witness"] = std::move(witness);
  if (out.inequality) {
    OrderedJson iw = OrderedJson::object();
    iw["lhs"] = json_int(out.inequality->lhs);
    iw["rhs"] = json_int(out.inequality->rhs);
    iw["relation"] = out.inequality->relation;
    doc["inequality"] = std::move(iw);
  } else {
    doc["inequality"] = nullptr;
  }
  doc["notes"] = out.notes;
  return doc;
}

OrderedJson to_json(const OracleSummary& sum) {
  OrderedJson doc = OrderedJson::object();
  doc["n"] = sum.n;
  doc["bound"] = sum.bound;
  doc["classes"] = sum.classes;
  doc["unimodular_facets_smooth"] = sum.uni_smooth;
  doc["lemma_violations"] = sum.violations;
  doc["unimodular_facets_not_smooth"] = sum.uni_not_smooth;
  doc["other"] = sum.rest;
  OrderedJson hist = OrderedJson::object();
  for (const auto& [vol, cnt] : sum.not_smooth_volumes) hist[vol.str()] = cnt;
  doc["not_smooth_volume_histogram"] = std::move(hist);
  OrderedJson vex = OrderedJson::array();
  for (const auto& p : sum.violation_examples) vex.push_back(vertices_json(p.vertices()));
  doc["violation_examples"] = std::move(vex);
  OrderedJson nex = OrderedJson::array();
  for (const auto& p : sum.not_smooth_examples) nex.push_back(vertices_json(p.vertices()));
  doc["not_smooth_examples"] = std::move(nex);
  return doc;
}

OrderedJson to_json(const FamilyReport& rep) {
  OrderedJson doc = OrderedJson::object();
  doc["vertices"] = vertices_json(rep.polytope.vertices());
  doc["volume"] = json_int(rep.volume);
  doc["facets_unimodular"] = rep.facets_unimodular;
  doc["smooth_dim1"] = rep.smooth_dim1;
  doc["edge_e1_e2_smooth"] = rep.edge_e1_e2_smooth;
  if (rep.witness_edge)
    doc["witness_edge"] = to_json(*rep.witness_edge);
  else
    doc["witness_edge"] = nullptr;
  return doc;
}

OrderedJson to_json(const ScanSummary& sum) {
  OrderedJson doc = OrderedJson::object();
  doc["a"] = sum.a;
  doc["grid"] = sum.grid;
  doc["extent"] = sum.extent;
  doc["analytic_verdict"] = sum.analytic_verdict;
  OrderedJson counts = OrderedJson::object();
  counts["total"] = sum.total_samples;
  counts["totally_real"] = sum.totally_real;
  counts["nonreal"] = sum.nonreal;
  counts["boundary"] = sum.boundary;
  doc["counts"] = std::move(counts);
  OrderedJson wit = OrderedJson::array();
  for (const auto& w : sum.nonreal_witnesses) wit.push_back({w[0], w[1], w[2]});
  doc["nonreal_witnesses"] = std::move(wit);
  doc["consistent"] = sum.consistent;
  doc["max_residual"] = sum.max_residual;
  doc["residual_checked"] = sum.residual_checked;
  doc["generic_fibers_two_points"] = sum.generic_fibers_two_points;
  return doc;
}

OrderedJson to_json(const HarnackCheck& hc) {
  OrderedJson doc = OrderedJson::object();
  doc["maximal"] = hc.maximal;
  doc["reason"] = hc.reason;
  doc["stripped_power"] = hc.stripped_power;
  doc["degree"] = hc.degree;
  doc["real_roots"] = hc.real_roots;
  doc["squarefree"] = hc.squarefree;
  return doc;
}

namespace {

void render_rec(const OrderedJson& v, const std::string& prefix, std::ostream& os) {
  if (v.is_object()) {
    for (const auto& [k, val] : v.items()) {
      std::string path = prefix.empty() ? k : prefix + "." + k;
      render_rec(val, path, os);
    }
  } else if (v.is_array()) {
    bool scalars = std::all_of(v.begin(), v.end(),
                               [](const OrderedJson& x) { return !x.is_structured(); });
    if (scalars) {
      os << prefix << ": " << v.dump() << "\n";
    } else {
      std::size_t i = 0;
      for (const auto& el : v) render_rec(el, prefix + "[" + std::to_string(i++) + "]", os);
    }
  } else {
    os << prefix << ": " << v.dump() << "\n";
  }
}

} // namespace

std::string render_text(const OrderedJson& doc) {
  std::ostringstream os;
  render_rec(doc, "", os);
  return os.str();
}

} // namespace torimax
