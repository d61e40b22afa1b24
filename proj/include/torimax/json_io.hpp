#pragma once

#include "torimax/certifier.hpp"
#include "torimax/gauss_fiber.hpp"
#include "torimax/invariants.hpp"

#include <json.hpp>

#include <string>

namespace torimax {

using OrderedJson = nlohmann::ordered_json;

/// Ints serialize as JSON numbers when they fit in 64 bits, as decimal
/// strings otherwise.
OrderedJson json_int(const Int& v);

/// Polytope file format: {"dim": n, "vertices": [[int,...],...]}.
/// The parser applies convex_hull, so vertices need not be deduplicated.
/// Throws ParseError on malformed documents.
LatticePolytope polytope_from_json(const OrderedJson& doc);
LatticePolytope load_polytope(const std::string& path);
OrderedJson polytope_to_json(const LatticePolytope& p);

OrderedJson to_json(const Face& f);
OrderedJson to_json(const InvariantReport& rep);
OrderedJson to_json(const ComponentBudget& budget);
OrderedJson to_json(const CertificateOutcome& out);
OrderedJson to_json(const OracleSummary& sum);
OrderedJson to_json(const FamilyReport& rep);
OrderedJson to_json(const ScanSummary& sum);
OrderedJson to_json(const HarnackCheck& hc);

/// Deterministic plain-text rendering of a report document: same numeric
/// content as the JSON form, one "key: value" line per leaf.
std::string render_text(const OrderedJson& doc);

} // namespace torimax
