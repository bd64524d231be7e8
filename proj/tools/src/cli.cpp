#include "hassett_cli/cli.hpp"

#include "hassett/certificate.hpp"
#include "hassett/constructions.hpp"
#include "hassett/criteria.hpp"
#include "hassett/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hassett::cli {
namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Thrown for validation problems that map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string factor_string(const std::vector<PrimePower>& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& pp : f) {
    if (!s.empty()) s += " * ";
    s += std::to_string(pp.prime);
    if (pp.exponent > 1) s += "^" + std::to_string(pp.exponent);
  }
  return s;
}

void check_range(std::int64_t v, const std::string& what) {
  if (v < 1 || v > kMaxDiscriminant)
    throw UsageError(what + " = " + std::to_string(v) + " is outside [1, 10^12]");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int check_d(std::int64_t d, bool json, std::ostream& out) {
  check_range(d, "d");
  const DiscriminantReport r = discriminant_report(d);
  if (json) {
    out << to_json(r);
  } else {
    out << "d = " << r.d << "\n";
    out << "star: " << yes_no(r.star) << "\n";
    out << "doubleStar: " << yes_no(r.doubleStar);
    if (r.doubleStarWitness) out << " (m = " << *r.doubleStarWitness << ")";
    out << "\n";
    out << "k3Admissible: " << yes_no(r.k3Admissible) << "\n";
    out << "factorization: " << factor_string(r.factorization) << "\n";
  }
  return r.star ? kOk : kCheckFailed;
}

struct ParamsFile {
  CaseId caseId;
  std::vector<std::int64_t> params;
  std::optional<int> searchBound;
};

ParamsFile read_params(const std::string& path) {
  using Json = nlohmann::json;
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("case") || !j["case"].is_string())
    throw UsageError(path + ": expected an object with a string field 'case'");
  if (!j.contains("params") || !j["params"].is_array())
    throw UsageError(path + ": expected an integer array field 'params'");
  ParamsFile p;
  try {
    p.caseId = case_from_string(j["case"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
  if (p.caseId == CaseId::Generic) throw UsageError(path + ": 'Generic' takes its parameters from the d list");
  for (const auto& v : j["params"]) {
    if (!v.is_number_integer()) throw UsageError(path + ": 'params' entries must be integers");
    p.params.push_back(v.get<std::int64_t>());
  }
  if (j.contains("searchBound")) {
    if (!j["searchBound"].is_number_integer()) throw UsageError(path + ": 'searchBound' must be an integer");
    p.searchBound = j["searchBound"].get<int>();
  }
  return p;
}

int intersect(const std::vector<std::int64_t>& ds, const std::string& modeName, const std::string& paramsPath,
              std::optional<int> searchBound, std::ostream& out, std::ostream& err) {
  const BuildMode mode = modeName == "strict" ? BuildMode::Strict : BuildMode::Goal;
  for (auto d : ds) check_range(d, "d");
  if (searchBound && *searchBound < 1) throw UsageError("--search-bound must be at least 1");

  RealizationOutcome outcome;
  std::vector<std::int64_t> targets;
  if (!paramsPath.empty()) {
    ParamsFile pf = read_params(paramsPath);
    if (!searchBound) searchBound = pf.searchBound;
    if (searchBound && *searchBound < 1) throw UsageError("searchBound must be at least 1");
    try {
      outcome = build(pf.caseId, pf.params, mode, searchBound);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string(to_string(pf.caseId)) + ": " + e.what());
    }
    for (const auto& s : outcome.slots) targets.push_back(s.target_discriminant());
    if (!ds.empty() && ds != targets) {
      std::string expected;
      for (auto t : targets) expected += (expected.empty() ? "" : " ") + std::to_string(t);
      throw UsageError("d list does not match the case parameters, which give " + expected);
    }
    if (mode == BuildMode::Strict && outcome.realizedGram) {
      const IntMatrix printed = paper_gram(pf.caseId, pf.params);
      err << "printed Gram reproduced: " << yes_no(*outcome.realizedGram == printed) << "\n";
      if (outcome.gramDelta) err << "realized - printed: " << *outcome.gramDelta << "\n";
    }
  } else {
    if (ds.size() < 2 || ds.size() > 20)
      throw UsageError("intersect needs between 2 and 20 values of d, got " + std::to_string(ds.size()));
    try {
      outcome = build_generic(ds, mode, searchBound);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    targets = ds;
    if (mode == BuildMode::Strict && outcome.gramDelta)
      err << "realized - slot target: " << *outcome.gramDelta << "\n";
  }

  Certificate cert = make_certificate(outcome.basis.value_or(std::vector<AmbientVector>{}), targets);
  out << to_json(cert);
  err << "realization: " << to_string(outcome.status) << "\n";
  err << "verdict: " << (cert.report.verdict == Verdict::Pass ? "PASS" : "FAIL");
  for (const auto& r : cert.report.failureReasons) err << " " << r;
  err << "\n";
  return cert.report.verdict == Verdict::Pass ? kOk : kCheckFailed;
}

int corollary(bool json, std::ostream& out) {
  const CorollaryReport r = verify_corollary20();
  if (json) {
    out << to_json(r);
    return r.pass ? kOk : kCheckFailed;
  }
  out << std::setw(6) << "d" << "  star  (**)  m    k3   factorization\n";
  for (const auto& d : r.discriminants) {
    out << std::setw(6) << d.d << "  " << std::left << std::setw(4) << yes_no(d.star) << "  " << std::setw(4)
        << yes_no(d.doubleStar) << "  " << std::setw(3)
        << (d.doubleStarWitness ? std::to_string(*d.doubleStarWitness) : "-") << "  " << std::setw(3)
        << yes_no(d.k3Admissible) << "  " << factor_string(d.factorization) << std::right << "\n";
  }
  const auto& c = r.witness.criterion;
  out << "all star: " << yes_no(r.allStar) << ", all k3: " << yes_no(r.allK3)
      << ", distinct: " << yes_no(r.distinct) << "\n";
  out << "witness realization: " << to_string(r.outcome.status) << "\n";
  out << "witness: h2 in M " << yes_no(c.containsHSquared) << ", positive definite " << yes_no(c.positiveDefinite)
      << ", saturated " << yes_no(c.saturated) << ", minimum "
      << (c.minimumNorm ? c.minimumNorm->get_str() : std::string("-")) << "\n";
  out << "witness verdict: " << (r.witness.verdict == Verdict::Pass ? "PASS" : "FAIL");
  for (const auto& reason : r.witness.failureReasons) out << " " << reason;
  out << "\n";
  out << "corollary: " << (r.pass ? "PASS" : "FAIL") << "\n";
  return r.pass ? kOk : kCheckFailed;
}

int sweep(std::int64_t limit, const std::string& csvPath, std::ostream& out, std::ostream& err) {
  check_range(limit, "limit");
  const auto rows = conjecture_sweep(limit);
  std::ostringstream csv;
  csv << "d,k,s,admissible\n";
  std::size_t bad = 0;
  for (const auto& r : rows) {
    csv << r.d << "," << r.k << "," << r.s << "," << (r.admissible ? "true" : "false") << "\n";
    if (!r.admissible) {
      ++bad;
      err << "counterexample: d = " << r.d << " = " << factor_string(r.factorization) << "\n";
    }
  }
  if (csvPath.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(csvPath, std::ios::binary);
    if (!f) throw UsageError("cannot write " + csvPath);
    f << csv.str();
  }
  err << rows.size() << " shaped d <= " << limit << ", " << bad << " counterexamples\n";
  return bad == 0 ? kOk : kCheckFailed;
}

int verify_file(const std::string& path, bool json, std::ostream& out) {
  Certificate cert;
  try {
    cert = parse_certificate(read_file(path));
  } catch (const CertificateError& e) {
    throw UsageError(path + ": " + e.what());
  }
  const WitnessReport r = verify_witness(cert.basis, cert.targets);
  if (json) {
    out << to_json(r);
  } else {
    const auto& c = r.criterion;
    out << "h2 in M: " << yes_no(c.containsHSquared) << "\n";
    out << "positive definite: " << yes_no(c.positiveDefinite) << "\n";
    out << "saturated: " << yes_no(c.saturated) << "\n";
    out << "minimum: " << (c.minimumNorm ? c.minimumNorm->get_str() : std::string("-")) << "\n";
    for (std::size_t i = 0; i < r.labellings.size(); ++i) {
      const auto& l = r.labellings[i];
      out << "labelling " << i << ": target " << l.targetD << ", realized " << l.realizedD << ", saturated "
          << yes_no(l.saturatedInM) << "\n";
    }
    out << "verdict: " << (r.verdict == Verdict::Pass ? "PASS" : "FAIL");
    for (const auto& reason : r.failureReasons) out << " " << reason;
    out << "\n";
  }
  return r.verdict == Verdict::Pass ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice witnesses for intersections of Hassett divisors", "hassett"};
  app.require_subcommand(1);

  std::int64_t d = 0;
  bool json = false;
  auto* checkD = app.add_subcommand("check-d", "Classify a discriminant");
  checkD->add_option("d", d, "discriminant")->required();
  checkD->add_flag("--json", json, "JSON output");

  std::vector<std::int64_t> ds;
  std::string mode = "goal";
  std::string paramsPath;
  std::optional<int> searchBound;
  auto* inter = app.add_subcommand("intersect", "Build and certify a witness for the given discriminants");
  inter->add_option("d", ds, "discriminants");
  inter->add_option("--mode", mode, "strict or goal")->check(CLI::IsMember({"strict", "goal"}));
  inter->add_option("--params", paramsPath, "JSON file {\"case\", \"params\", \"searchBound\"}");
  inter->add_option("--search-bound", searchBound, "perturbation coordinate bound");
  inter->add_flag("--json", json, "JSON output (the certificate is always JSON)");

  auto* cor = app.add_subcommand("corollary20", "Reproduce the twenty-divisor corollary");
  cor->add_flag("--json", json, "JSON output");

  std::int64_t limit = 0;
  std::string csvPath;
  auto* sw = app.add_subcommand("sweep-conjecture", "Check K3 admissibility of every shaped d up to a limit");
  sw->add_option("--limit", limit, "largest d")->required();
  sw->add_option("--csv", csvPath, "write CSV here instead of standard output");

  std::string file;
  auto* vf = app.add_subcommand("verify-file", "Re-verify a certificate from its basis and targets");
  vf->add_option("path", file, "certificate JSON")->required();
  vf->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*checkD) return check_d(d, json, out);
    if (*inter) {
      if (ds.empty() && paramsPath.empty()) throw UsageError("intersect needs a d list or --params");
      return intersect(ds, mode, paramsPath, searchBound, out, err);
    }
    if (*cor) return corollary(json, out);
    if (*sw) return sweep(limit, csvPath, out, err);
    if (*vf) return verify_file(file, json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace hassett::cli
