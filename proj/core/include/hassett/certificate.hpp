#pragma once

#include "hassett/verifier.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hassett {

inline constexpr std::string_view kAmbientId = "E8+E8+U+U+I3";
inline constexpr std::string_view kToolVersion = "hassett 1.0.0";

struct Certificate {
  std::string ambient{kAmbientId};
  std::vector<AmbientVector> basis;
  std::vector<std::int64_t> targets;
  WitnessReport report;
  std::string toolVersion{kToolVersion};

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Verifies (basis, targets) and wraps the result.
Certificate make_certificate(std::vector<AmbientVector> basis, std::vector<std::int64_t> targets);

class CertificateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two-space indented JSON, fields in schema order, trailing newline.
std::string to_json(const Certificate& c);
std::string to_json(const WitnessReport& r);
std::string to_json(const DiscriminantReport& r);
std::string to_json(const CorollaryReport& r);

/// Throws CertificateError naming the line/column or the offending field.
Certificate parse_certificate(std::string_view text);
WitnessReport parse_report(std::string_view text);

}  // namespace hassett
