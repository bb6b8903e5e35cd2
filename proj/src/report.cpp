#include "qhecke/report.hpp"

#include <stdexcept>

#include "json.hpp"

namespace qhecke {

std::string status_name(VerifyStatus s) {
  switch (s) {
    case VerifyStatus::kMatch: return "match";
    case VerifyStatus::kMismatch: return "mismatch";
    case VerifyStatus::kError: return "error";
  }
  throw std::logic_error("bad status value");
}

VerifyStatus status_from_name(const std::string& s) {
  if (s == "match") return VerifyStatus::kMatch;
  if (s == "mismatch") return VerifyStatus::kMismatch;
  if (s == "error") return VerifyStatus::kError;
  throw std::invalid_argument("unknown status: " + s);
}

std::string report_to_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["identity"] = r.identity;
  j["ring"] = r.ring;
  j["order"] = r.order;
  j["status"] = status_name(r.status);
  if (r.status == VerifyStatus::kMismatch) {
    if (!r.first_mismatch) throw std::logic_error("mismatch report lacks first_mismatch");
    j["first_mismatch"] = {{"exponent", r.first_mismatch->exponent},
                           {"lhs", r.first_mismatch->lhs},
                           {"rhs", r.first_mismatch->rhs}};
  }
  if (r.status == VerifyStatus::kError) j["error"] = r.error;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

VerifyReport report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  VerifyReport r;
  r.identity = j.at("identity").get<std::string>();
  r.ring = j.at("ring").get<std::string>();
  r.order = j.at("order").get<Exp>();
  r.status = status_from_name(j.at("status").get<std::string>());
  if (j.contains("first_mismatch")) {
    const auto& m = j.at("first_mismatch");
    r.first_mismatch = Mismatch{m.at("exponent").get<Exp>(),
                                m.at("lhs").get<std::string>(),
                                m.at("rhs").get<std::string>()};
  }
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<long long>();
  if ((r.status == VerifyStatus::kMismatch) != r.first_mismatch.has_value())
    throw std::invalid_argument("first_mismatch must accompany exactly the mismatch status");
  return r;
}

std::string report_to_text(const VerifyReport& r) {
  std::string line = r.identity + ": " + status_name(r.status);
  if (r.status == VerifyStatus::kMismatch)
    line += " at exponent " + std::to_string(r.first_mismatch->exponent) + " (lhs " +
            r.first_mismatch->lhs + ", rhs " + r.first_mismatch->rhs + ")";
  if (r.status == VerifyStatus::kError) line += ": " + r.error;
  line += "  [ring " + r.ring + ", order " + std::to_string(r.order) + ", " +
          std::to_string(r.elapsed_ms) + " ms]";
  return line;
}

}  // namespace qhecke
