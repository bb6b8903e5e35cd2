#pragma once

#include <optional>
#include <string>

#include "qhecke/series.hpp"

namespace qhecke {

enum class VerifyStatus { kMatch, kMismatch, kError };

std::string status_name(VerifyStatus s);
VerifyStatus status_from_name(const std::string& s);

// First position where two compared series disagree, with both coefficients
// rendered exactly.
struct Mismatch {
  Exp exponent = 0;
  std::string lhs;
  std::string rhs;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerifyReport {
  std::string identity;
  std::string ring;
  Exp order = 0;
  VerifyStatus status = VerifyStatus::kMatch;
  std::optional<Mismatch> first_mismatch;
  std::string error;
  long long elapsed_ms = 0;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

// One JSON object per report, no trailing newline. first_mismatch appears
// exactly when the status is mismatch, error exactly when it is error.
std::string report_to_json(const VerifyReport& r);
VerifyReport report_from_json(const std::string& text);
std::string report_to_text(const VerifyReport& r);

}  // namespace qhecke
