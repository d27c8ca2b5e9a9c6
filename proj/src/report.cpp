#include "jordan/report.hpp"

#include <algorithm>
#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

Claim& VerificationReport::add(Claim c) {
  claims.push_back(std::move(c));
  return claims.back();
}

Claim& VerificationReport::check(std::string name, std::string ref, std::string basis,
                                 nlohmann::json expected, nlohmann::json computed, bool pass) {
  return add(Claim{std::move(name), std::move(ref), std::move(basis), std::move(expected),
                   std::move(computed), pass});
}

Claim& VerificationReport::info(std::string name, std::string ref, nlohmann::json computed) {
  return add(Claim{std::move(name), std::move(ref), "info", nullptr, std::move(computed),
                   std::nullopt});
}

void VerificationReport::merge(const VerificationReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  timed_out = timed_out || other.timed_out;
}

bool VerificationReport::all_pass() const noexcept { return failures() == 0; }

std::size_t VerificationReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const Claim& c) {
    return c.pass.has_value() && !*c.pass;
  }));
}

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& c : r.claims) {
    claims.push_back({{"name", c.name},
                      {"ref", c.ref},
                      {"basis", c.basis},
                      {"expected", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass ? nlohmann::json(*c.pass) : nlohmann::json(nullptr)}});
  }
  return {{"command", r.command},
          {"inputs", r.inputs},
          {"claims", claims},
          {"runtime_ms", r.runtime_ms},
          {"timed_out", r.timed_out},
          {"all_pass", r.all_pass()}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  try {
    VerificationReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
    r.runtime_ms = j.at("runtime_ms").get<std::int64_t>();
    r.timed_out = j.value("timed_out", false);
    for (const auto& c : j.at("claims")) {
      Claim claim{c.at("name").get<std::string>(), c.at("ref").get<std::string>(),
                  c.at("basis").get<std::string>(), c.at("expected"), c.at("computed"),
                  std::nullopt};
      if (!c.at("pass").is_null()) claim.pass = c.at("pass").get<bool>();
      r.claims.push_back(std::move(claim));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("malformed report: ") + e.what());
  }
}

std::string summarize(const VerificationReport& r) {
  std::ostringstream out;
  out << r.command << ": " << r.claims.size() << " claims, " << r.failures() << " failed";
  if (r.timed_out) out << ", timed out";
  out << " (" << r.runtime_ms << " ms)\n";
  for (const auto& c : r.claims) {
    const char* tag = !c.pass ? "INFO" : (*c.pass ? "PASS" : "FAIL");
    out << "  " << tag << "  " << c.name << ": " << c.computed.dump();
    if (c.pass) out << " (expected " << c.expected.dump() << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace jordan
