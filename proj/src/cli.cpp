#include "torimax/cli.hpp"

#include "torimax/certifier.hpp"
#include "torimax/errors.hpp"
#include "torimax/gauss_fiber.hpp"
#include "torimax/json_io.hpp"
#include "torimax/topology.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace torimax {

Rat parse_rational(const std::string& token) {
  std::string s = token;
  if (s.empty()) throw ParseError("empty coefficient");
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den == 0) throw ParseError("zero denominator in " + token);
      return Rat(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
      if (tail.empty()) tail = "0";
      bool negative = !head.empty() && head[0] == '-';
      if (head.empty() || head == "-" || head == "+") head += "0";
      Int den = 1;
      for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
      Int num = Int(head) * den;
      Int frac(tail);
      num += negative ? -frac : frac;
      return Rat(num, den);
    }
    return Rat(Int(s));
  } catch (const std::runtime_error& e) {
    throw ParseError("cannot parse rational '" + token + "'");
  }
}

namespace {

std::vector<Rat> parse_coeff_list(const std::string& csv) {
  std::vector<Rat> coeffs;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    // trim spaces
    auto b = tok.find_first_not_of(" \t");
    auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty coefficient in list");
    coeffs.push_back(parse_rational(tok.substr(b, e - b + 1)));
  }
  if (coeffs.empty()) throw ParseError("--coeffs requires at least one coefficient");
  return coeffs;
}

void emit(const OrderedJson& doc, const RunConfig& config, std::ostream& out) {
  if (config.format == RunConfig::Format::Json)
    out << doc.dump(2) << "\n";
  else
    out << render_text(doc);
}

} // namespace

int parse_cli(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
              std::ostream& err) {
  CLI::App app{"lattice-polytope invariants, toric-maximality obstructions and fiber scans"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* inv = app.add_subcommand("invariants", "lattice invariants of a polytope file");
  inv->add_option("file", config.input_path, "polytope JSON file")->required();

  auto* cert = app.add_subcommand("certify", "toric-maximality obstruction chain");
  cert->add_option("file", config.input_path, "polytope JSON file")->required();
  cert->add_flag("--dim-check", config.dim_check,
                 "for 3-polytopes, also run the dimension-3 path and verify agreement");

  auto* lemma = app.add_subcommand("lemma-search", "exhaustive unimodular-facet simplex search");
  lemma->add_option("--n", config.n, "ambient dimension (3 or 4)")->required();
  lemma->add_option("--bound", config.bound, "coordinate bound")->required();

  auto* family = app.add_subcommand("family", "the (1,p,q) tetrahedron family");
  family->add_option("--p", config.p, "parameter p")->required();
  family->add_option("--q", config.q, "parameter q")->required();

  auto* scan = app.add_subcommand("fiber-scan", "reality scan of Gauss-map fibers");
  scan->add_option("--a", config.a, "family parameter (nonzero)")->required();
  scan->add_option("--grid", config.grid, "grid points per axis")->capture_default_str();
  scan->add_option("--extent", config.extent, "chart extent");

  auto* uni = app.add_subcommand("univariate", "n = 1 maximality check");
  uni->add_option("--coeffs", config.coeffs, "comma-separated rational coefficients c0,c1,...")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  config.format = format == "json" ? RunConfig::Format::Json : RunConfig::Format::Text;
  if (inv->parsed()) config.command = RunConfig::Command::Invariants;
  if (cert->parsed()) config.command = RunConfig::Command::Certify;
  if (lemma->parsed()) config.command = RunConfig::Command::LemmaSearch;
  if (family->parsed()) config.command = RunConfig::Command::Family;
  if (scan->parsed()) config.command = RunConfig::Command::FiberScan;
  if (uni->parsed()) config.command = RunConfig::Command::Univariate;
  return -1; // parsed; caller should run()
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case RunConfig::Command::Invariants: {
        LatticePolytope p = load_polytope(config.input_path);
        OrderedJson doc = to_json(invariant_report(p));
        doc["gauss_degree"] = json_int(gauss_degree(p));
        if (p.ambient_dim() == 3) {
          doc["khovanskii_betti3"] = json_int(khovanskii_betti3(p));
          doc["component_budget"] = to_json(real_component_budget(p));
        }
        emit(doc, config, out);
        return 0;
      }
      case RunConfig::Command::Certify: {
        LatticePolytope p = load_polytope(config.input_path);
        CertificateOutcome outcome = certify_recursive(p);
        OrderedJson doc = to_json(outcome);
        if (config.dim_check && p.ambient_dim() == 3) {
          CertificateOutcome d3 = certify_dimension3(p);
          OrderedJson dc = OrderedJson::object();
          dc["dimension3_verdict"] = to_string(d3.verdict);
          dc["agrees"] =
              d3.verdict == outcome.verdict && d3.obstruction == outcome.obstruction;
          doc["dim_check"] = std::move(dc);
        }
        emit(doc, config, out);
        return 0;
      }
      case RunConfig::Command::LemmaSearch: {
        OracleSummary sum = brute_force_lemma_oracle(config.bound, config.n);
        emit(to_json(sum), config, out);
        return 0;
      }
      case RunConfig::Command::Family: {
        FamilyReport rep = counterexample_family(Int(config.p), Int(config.q));
        OrderedJson doc = OrderedJson::object();
        doc["p"] = config.p;
        doc["q"] = config.q;
        doc.update(to_json(rep));
        emit(doc, config, out);
        return 0;
      }
      case RunConfig::Command::FiberScan: {
        ScanSummary sum = total_reality_scan(FamilyParameter(config.a), config.grid,
                                             config.extent);
        emit(to_json(sum), config, out);
        return 0;
      }
      case RunConfig::Command::Univariate: {
        HarnackCheck hc = univariate_harnack_check(parse_coeff_list(config.coeffs));
        emit(to_json(hc), config, out);
        return 0;
      }
    }
    err << "unknown command\n";
    return 2;
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace torimax
