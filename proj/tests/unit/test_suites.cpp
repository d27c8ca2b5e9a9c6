#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>
#include <string>

#include "doctest.h"

#include "jordan/errors.hpp"
#include "jordan/report.hpp"
#include "jordan/suites.hpp"

using namespace jordan;
using namespace jordan::suites;

namespace {

std::set<std::string> failing(const VerificationReport& r) {
  std::set<std::string> out;
  for (const auto& c : r.claims)
    if (c.pass == false) out.insert(c.name);
  return out;
}

VerificationReport strip_time(VerificationReport r) {
  r.runtime_ms = 0;
  return r;
}

}  // namespace

TEST_CASE("suites pass except the two-point fixed set of chi^2") {
  for (const auto& name : suite_names()) {
    const auto r = verify_suite(name);
    CHECK_FALSE(r.claims.empty());
    CHECK_FALSE(r.timed_out);
    for (const auto& c : r.claims) {
      CHECK_FALSE(c.name.empty());
      CHECK_FALSE(c.ref.empty());
      CHECK((c.basis == "lemma" || c.basis == "definition" || c.basis == "brute-force" ||
             c.basis == "info"));
      CHECK((c.basis == "info") == !c.pass.has_value());
    }
    if (name == "tor") {
      // For 3 | n the fixed set of chi^2 is {(u,u) : 3u = 0}, three points.
      CHECK(failing(r) == std::set<std::string>{"fixed_points.n6.k2", "fixed_points.n9.k2",
                                                "fixed_points.n12.k2"});
      CHECK_FALSE(r.all_pass());
      CHECK(r.failures() == 3);
    } else {
      CHECK_MESSAGE(failing(r).empty(), name);
      CHECK(r.all_pass());
    }
  }
}

TEST_CASE("the combined run prefixes claim names") {
  SuiteOptions opts;
  opts.max_n = 4;
  const auto all = verify_suite("all", opts);
  std::size_t total = 0;
  for (const auto& name : suite_names()) {
    const auto r = verify_suite(name, opts);
    total += r.claims.size();
    for (const auto& c : r.claims) {
      const auto it = std::find_if(all.claims.begin(), all.claims.end(),
                                   [&](const Claim& a) { return a.name == name + "." + c.name; });
      REQUIRE(it != all.claims.end());
      CHECK(it->pass == c.pass);
      CHECK(it->computed == c.computed);
    }
  }
  CHECK(all.claims.size() == total);
  CHECK(all.command == "verify");
  try {
    verify_suite("nope");
    FAIL("expected invalid_argument");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_argument);
  }
}

TEST_CASE("runs are deterministic for a fixed seed") {
  SuiteOptions opts;
  opts.seed = 42;
  CHECK(strip_time(verify_sl2(opts)) == strip_time(verify_sl2(opts)));
  CHECK(strip_time(verify_doubling(opts)) == strip_time(verify_doubling(opts)));
  CHECK(strip_time(verify_suite("all", opts)) == strip_time(verify_suite("all", opts)));
}

TEST_CASE("gamma and hat gamma reports") {
  for (int n = 2; n <= 6; ++n) {
    const auto r = gamma_report(n);
    CHECK(r.command == "gamma");
    CHECK(r.all_pass());
  }
  for (int n : {2, 4, 8}) {
    const auto r = hat_gamma_report(n);
    CHECK(r.command == "hat-gamma");
    CHECK(r.all_pass());
  }
  try {
    hat_gamma_report(3);
    FAIL("expected odd_modulus");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::odd_modulus);
  }
  SuiteOptions tiny;
  tiny.budget = std::chrono::duration<double>(1e-3);
  const auto t = hat_gamma_report(10, tiny);
  CHECK(t.timed_out);
  CHECK_FALSE(t.all_pass());
}

TEST_CASE("bound reports") {
  const auto find = [](const VerificationReport& r, const std::string& name) {
    const auto it = std::find_if(r.claims.begin(), r.claims.end(),
                                 [&](const Claim& c) { return c.name == name; });
    REQUIRE(it != r.claims.end());
    return *it;
  };
  const auto one = bound_report(Rational(1), Rational(1), std::nullopt);
  CHECK(one.all_pass());
  CHECK(find(one, "lambda").computed == 1);
  CHECK(find(one, "jordan_bound").computed == 144);

  const auto five = bound_report(Rational(5), Rational(1), 5LL);
  CHECK(find(five, "lambda").computed == 8);
  CHECK(find(five, "p_admissible").computed == false);

  const auto thirteen = bound_report(Rational(13), Rational(1), 5LL);
  CHECK(find(thirteen, "lambda").computed == 24);
  CHECK(find(thirteen, "p_admissible").computed == true);
  CHECK(thirteen.all_pass());

  try {
    bound_report(Rational(0), Rational(1), std::nullopt);
    FAIL("expected zero_area");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_area);
  }
}

TEST_CASE("report json round trip and summary") {
  const auto r = verify_doubling();
  const auto j = to_json(r);
  CHECK(j["all_pass"] == true);
  CHECK(report_from_json(j) == r);
  CHECK(report_from_json(nlohmann::json::parse(j.dump())) == r);
  const auto text = summarize(r);
  std::istringstream in(text);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line))
    if (line.find("p3.") != std::string::npos || line.find("p5.") != std::string::npos ||
        line.find("p7.") != std::string::npos)
      ++lines;
  CHECK(lines == r.claims.size());
  try {
    report_from_json(nlohmann::json{{"command", 3}});
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}
