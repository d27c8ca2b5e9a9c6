#pragma once

/**
 * @file suites.hpp
 * @brief Verification runs shared by the command-line tool and the tests.
 */

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/build.hpp"
#include "jordan/rational.hpp"
#include "jordan/report.hpp"

namespace jordan::suites {

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultCap;
  std::optional<std::chrono::duration<double>> budget = std::chrono::duration<double>(300);
  int max_n = 8;
};

VerificationReport gamma_report(int n, const SuiteOptions& opts = {});
VerificationReport hat_gamma_report(int n, const SuiteOptions& opts = {});
VerificationReport bound_report(const Rational& alpha, const Rational& beta,
                                std::optional<long long> p);

VerificationReport verify_q(const SuiteOptions& opts = {});
VerificationReport verify_esfera(const SuiteOptions& opts = {});
VerificationReport verify_tor(const SuiteOptions& opts = {});
VerificationReport verify_sl2(const SuiteOptions& opts = {});
VerificationReport verify_doubling(const SuiteOptions& opts = {});

// "q", "esfera", "tor", "sl2", "doubling".
const std::vector<std::string>& suite_names();
// Also accepts "all". Throws Error(invalid_argument) for unknown names.
VerificationReport verify_suite(std::string_view name, const SuiteOptions& opts = {});

}  // namespace jordan::suites
