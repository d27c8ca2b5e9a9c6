#pragma once

/**
 * @file report.hpp
 * @brief Machine-readable verification reports.
 *
 * A claim pairs an expected value with the computed one. `basis` says where
 * the expectation comes from: "lemma" (a published statement), "definition"
 * (forced by a definition), "brute-force" (an independent exhaustive
 * computation) or "info" (reported only, no verdict).
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace jordan {

struct Claim {
  std::string name;
  std::string ref;    // the mathematical statement under test
  std::string basis;
  nlohmann::json expected;
  nlohmann::json computed;
  std::optional<bool> pass;  // nullopt for informational claims

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct VerificationReport {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::vector<Claim> claims;
  std::int64_t runtime_ms = 0;
  bool timed_out = false;

  Claim& add(Claim c);
  Claim& check(std::string name, std::string ref, std::string basis, nlohmann::json expected,
               nlohmann::json computed, bool pass);
  Claim& info(std::string name, std::string ref, nlohmann::json computed);
  void merge(const VerificationReport& other);

  bool all_pass() const noexcept;
  std::size_t failures() const noexcept;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

nlohmann::json to_json(const VerificationReport& r);
// Throws Error(parse_error).
VerificationReport report_from_json(const nlohmann::json& j);

// One line per claim.
std::string summarize(const VerificationReport& r);

}  // namespace jordan
