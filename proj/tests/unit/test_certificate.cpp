#include "hassett/certificate.hpp"

#include <doctest.h>

#include <json.hpp>

#include <string>

using namespace hassett;
using Json = nlohmann::ordered_json;

namespace {

AmbientVector e(int copy, int which) { return AmbientVector::hyperbolic(copy, which); }

Certificate case2() {
  return make_certificate({AmbientVector::h_squared(), e(1, 1) + 2 * e(1, 2), e(2, 1) + 2 * e(2, 2),
                           2 * AmbientVector::a1() + AmbientVector::i3(0, 0, 1)},
                          {12, 12, 26});
}

std::string message_of(std::string_view text) {
  try {
    parse_certificate(text);
  } catch (const CertificateError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("certificate layout") {
  const Certificate c = case2();
  const std::string text = to_json(c);
  CHECK(text.back() == '\n');
  Json j = Json::parse(text);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"ambient", "basis", "targets", "report", "toolVersion"});
  CHECK(j["ambient"] == "E8+E8+U+U+I3");
  CHECK(j["basis"].size() == 4);
  CHECK(j["basis"][0].size() == 23);
  CHECK(j["basis"][0][20] == 1);
  CHECK(j["targets"] == Json::array({12, 12, 26}));
  CHECK(j["report"]["verdict"] == "PASS");
  CHECK(j["report"]["gramMatchesPaper"].is_null());
  CHECK(j["toolVersion"] == "hassett 1.0.0");
}

TEST_CASE("certificate round trip is exact") {
  const Certificate c = case2();
  const std::string text = to_json(c);
  Certificate back = parse_certificate(text);
  CHECK(back == c);
  CHECK(to_json(back) == text);
  CHECK(make_certificate(back.basis, back.targets) == c);
}

TEST_CASE("failing and degenerate certificates round trip") {
  Certificate bad = make_certificate({AmbientVector::h_squared(), e(1, 1) + e(1, 2)}, {8});
  CHECK(bad.report.verdict == Verdict::Fail);
  CHECK(parse_certificate(to_json(bad)) == bad);

  Certificate empty = make_certificate({}, {12, 12});
  CHECK(empty.report.failureReasons == std::vector<std::string>{"BASIS_EMPTY"});
  CHECK(parse_certificate(to_json(empty)) == empty);

  Certificate indefinite = make_certificate({AmbientVector::h_squared(), e(1, 1)}, {8});
  CHECK_FALSE(indefinite.report.criterion.minimumNorm.has_value());
  CHECK(parse_certificate(to_json(indefinite)) == indefinite);
}

TEST_CASE("large entries survive") {
  AmbientVector big = AmbientVector::h_squared();
  big[16] = BigInt("123456789012345678901234567890");
  big[17] = 1;
  Certificate c = make_certificate({AmbientVector::h_squared(), big}, {26});
  CHECK(parse_certificate(to_json(c)) == c);
}

TEST_CASE("report round trip") {
  const Certificate c = case2();
  CHECK(parse_report(to_json(c.report)) == c.report);
  WitnessReport r = c.report;
  r.gramMatchesPaper = false;
  CHECK(parse_report(to_json(r)) == r);
}

TEST_CASE("discriminant report json") {
  Json j = Json::parse(to_json(discriminant_report(26)));
  CHECK(j["d"] == 26);
  CHECK(j["doubleStarWitness"] == 2);
  CHECK(j["factorization"][1]["prime"] == 13);
  CHECK(Json::parse(to_json(discriminant_report(38)))["doubleStarWitness"].is_null());
}

TEST_CASE("parse errors name the location") {
  const std::string text = to_json(case2());
  CHECK_THROWS_AS(parse_certificate(text.substr(0, text.size() / 2)), CertificateError);
  CHECK(message_of("{\n  \"ambient\": ,\n}").find("line 2") != std::string::npos);

  Json j = Json::parse(text);
  j["ambient"] = "E8+E8";
  CHECK(message_of(j.dump()).find("ambient") != std::string::npos);

  j = Json::parse(text);
  j["basis"][1].erase(j["basis"][1].begin());
  CHECK(message_of(j.dump()).find("basis[1]") != std::string::npos);

  j = Json::parse(text);
  j["basis"][2][3] = "x";
  CHECK(message_of(j.dump()).find("basis[2]") != std::string::npos);

  j = Json::parse(text);
  j.erase("targets");
  CHECK(message_of(j.dump()).find("targets") != std::string::npos);

  j = Json::parse(text);
  j["report"]["verdict"] = "MAYBE";
  CHECK(message_of(j.dump()).find("report.verdict") != std::string::npos);

  CHECK_THROWS_AS(parse_certificate("[]"), CertificateError);
  CHECK_THROWS_AS(parse_certificate(""), CertificateError);
}
