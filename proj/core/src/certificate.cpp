#include "hassett/certificate.hpp"

#include <json.hpp>

#include <algorithm>

namespace hassett {
namespace {

using Json = nlohmann::ordered_json;

Json big(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(big(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json criterion_json(const CriterionReport& c) {
  Json j;
  j["containsHSquared"] = c.containsHSquared;
  j["positiveDefinite"] = c.positiveDefinite;
  j["saturated"] = c.saturated;
  j["minimumNorm"] = c.minimumNorm ? big(*c.minimumNorm) : Json(nullptr);
  j["pass"] = c.pass;
  return j;
}

Json report_json(const WitnessReport& r) {
  Json j;
  j["criterion"] = criterion_json(r.criterion);
  Json labs = Json::array();
  for (const auto& l : r.labellings) {
    Json lj;
    lj["targetD"] = l.targetD;
    lj["realizedD"] = big(l.realizedD);
    lj["saturatedInM"] = l.saturatedInM;
    labs.push_back(std::move(lj));
  }
  j["labellings"] = std::move(labs);
  j["gramMatchesPaper"] = r.gramMatchesPaper ? Json(*r.gramMatchesPaper) : Json(nullptr);
  j["realizedGram"] = r.realizedGram ? matrix_json(*r.realizedGram) : Json(nullptr);
  j["verdict"] = r.verdict == Verdict::Pass ? "PASS" : "FAIL";
  j["failureReasons"] = r.failureReasons;
  return j;
}

Json certificate_json(const Certificate& c) {
  Json j;
  j["ambient"] = c.ambient;
  Json rows = Json::array();
  for (const auto& v : c.basis) {
    Json row = Json::array();
    for (const auto& x : v.coords()) row.push_back(big(x));
    rows.push_back(std::move(row));
  }
  j["basis"] = std::move(rows);
  j["targets"] = c.targets;
  j["report"] = report_json(c.report);
  j["toolVersion"] = c.toolVersion;
  return j;
}

Json discriminant_json(const DiscriminantReport& r) {
  Json j;
  j["d"] = r.d;
  j["star"] = r.star;
  j["doubleStar"] = r.doubleStar;
  j["doubleStarWitness"] = r.doubleStarWitness ? Json(*r.doubleStarWitness) : Json(nullptr);
  j["k3Admissible"] = r.k3Admissible;
  Json f = Json::array();
  for (const auto& pp : r.factorization) f.push_back(Json{{"prime", pp.prime}, {"exponent", pp.exponent}});
  j["factorization"] = std::move(f);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Reading side: every accessor names the JSON path it failed on.

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw CertificateError("field '" + path + "': " + what);
}

const Json& member(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

std::string sub(const std::string& path, const char* key) { return path.empty() ? key : path + "." + key; }
std::string sub(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

bool read_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) bad(path, "expected true or false");
  return j.get<bool>();
}

BigInt read_big(const Json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    return BigInt(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) bad(path, "not an integer");
    return v;
  }
  bad(path, "expected an integer");
}

std::int64_t read_int(const Json& j, const std::string& path) {
  BigInt v = read_big(j, path);
  if (!v.fits_slong_p()) bad(path, "integer out of range");
  return v.get_si();
}

std::string read_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

const Json& read_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

IntMatrix read_matrix(const Json& j, const std::string& path) {
  read_array(j, path);
  if (j.empty()) bad(path, "empty matrix");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rp = sub(path, i);
    read_array(j[i], rp);
    IntVector row;
    for (std::size_t k = 0; k < j[i].size(); ++k) row.push_back(read_big(j[i][k], sub(rp, k)));
    if (row.empty() || (!rows.empty() && row.size() != rows.front().size())) bad(rp, "ragged or empty row");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

WitnessReport read_report(const Json& j, const std::string& path) {
  WitnessReport r;
  const std::string cp = sub(path, "criterion");
  const Json& c = member(j, "criterion", path);
  r.criterion.containsHSquared = read_bool(member(c, "containsHSquared", cp), sub(cp, "containsHSquared"));
  r.criterion.positiveDefinite = read_bool(member(c, "positiveDefinite", cp), sub(cp, "positiveDefinite"));
  r.criterion.saturated = read_bool(member(c, "saturated", cp), sub(cp, "saturated"));
  const Json& mn = member(c, "minimumNorm", cp);
  if (!mn.is_null()) r.criterion.minimumNorm = read_big(mn, sub(cp, "minimumNorm"));
  r.criterion.pass = read_bool(member(c, "pass", cp), sub(cp, "pass"));

  const std::string lp = sub(path, "labellings");
  const Json& labs = read_array(member(j, "labellings", path), lp);
  for (std::size_t i = 0; i < labs.size(); ++i) {
    const std::string ip = sub(lp, i);
    LabellingCheck l;
    l.targetD = read_int(member(labs[i], "targetD", ip), sub(ip, "targetD"));
    l.realizedD = read_big(member(labs[i], "realizedD", ip), sub(ip, "realizedD"));
    l.saturatedInM = read_bool(member(labs[i], "saturatedInM", ip), sub(ip, "saturatedInM"));
    r.labellings.push_back(std::move(l));
  }
  const Json& gm = member(j, "gramMatchesPaper", path);
  if (!gm.is_null()) r.gramMatchesPaper = read_bool(gm, sub(path, "gramMatchesPaper"));
  const Json& rg = member(j, "realizedGram", path);
  if (!rg.is_null()) r.realizedGram = read_matrix(rg, sub(path, "realizedGram"));
  const std::string verdict = read_string(member(j, "verdict", path), sub(path, "verdict"));
  if (verdict == "PASS")
    r.verdict = Verdict::Pass;
  else if (verdict == "FAIL")
    r.verdict = Verdict::Fail;
  else
    bad(sub(path, "verdict"), "expected PASS or FAIL");
  const std::string fp = sub(path, "failureReasons");
  const Json& fr = read_array(member(j, "failureReasons", path), fp);
  for (std::size_t i = 0; i < fr.size(); ++i) r.failureReasons.push_back(read_string(fr[i], sub(fp, i)));
  return r;
}

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw CertificateError("parse error at line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + e.what());
  }
}

}  // namespace

Certificate make_certificate(std::vector<AmbientVector> basis, std::vector<std::int64_t> targets) {
  Certificate c;
  c.report = verify_witness(basis, targets);
  c.basis = std::move(basis);
  c.targets = std::move(targets);
  return c;
}

std::string to_json(const Certificate& c) { return dump(certificate_json(c)); }
std::string to_json(const WitnessReport& r) { return dump(report_json(r)); }
std::string to_json(const DiscriminantReport& r) { return dump(discriminant_json(r)); }

std::string to_json(const CorollaryReport& r) {
  Json j;
  Json ds = Json::array();
  for (const auto& d : r.discriminants) ds.push_back(discriminant_json(d));
  j["discriminants"] = std::move(ds);
  j["allStar"] = r.allStar;
  j["allK3"] = r.allK3;
  j["distinct"] = r.distinct;
  j["realization"] = std::string(to_string(r.outcome.status));
  Certificate cert;
  if (r.outcome.basis) cert.basis = *r.outcome.basis;
  cert.targets = corollary_targets();
  cert.report = r.witness;
  j["certificate"] = certificate_json(cert);
  j["pass"] = r.pass;
  return dump(j);
}

Certificate parse_certificate(std::string_view text) {
  const Json j = parse_text(text);
  if (!j.is_object()) throw CertificateError("certificate must be a JSON object");
  Certificate c;
  c.ambient = read_string(member(j, "ambient", ""), "ambient");
  if (c.ambient != kAmbientId) bad("ambient", "expected \"" + std::string(kAmbientId) + "\"");
  const Json& rows = read_array(member(j, "basis", ""), "basis");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string rp = sub(std::string("basis"), i);
    read_array(rows[i], rp);
    if (rows[i].size() != kAmbientRank) bad(rp, "expected 23 coordinates, got " + std::to_string(rows[i].size()));
    IntVector v;
    for (std::size_t k = 0; k < rows[i].size(); ++k) v.push_back(read_big(rows[i][k], sub(rp, k)));
    c.basis.emplace_back(v);
  }
  const Json& ts = read_array(member(j, "targets", ""), "targets");
  for (std::size_t i = 0; i < ts.size(); ++i) c.targets.push_back(read_int(ts[i], sub(std::string("targets"), i)));
  c.report = read_report(member(j, "report", ""), "report");
  c.toolVersion = read_string(member(j, "toolVersion", ""), "toolVersion");
  return c;
}

WitnessReport parse_report(std::string_view text) { return read_report(parse_text(text), ""); }

}  // namespace hassett
