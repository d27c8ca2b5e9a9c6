#include "jordan/jordan_bounds.hpp"

#include <algorithm>
#include <map>

#include <boost/rational.hpp>

#include "jordan/errors.hpp"
#include "jordan/heisenberg.hpp"
#include "jordan/subgroup.hpp"

namespace jordan::bounds {

namespace {

Rational ratio(const SymplecticShape& s) { return boost::abs(Rational(2) * s.alpha / s.beta); }

// Largest integer strictly below r.
long long floor_strict(const Rational& r) {
  const long long f = boost::rational_cast<long long>(r);  // truncates; r >= 0
  return r.denominator() == 1 ? f - 1 : f;
}

}  // namespace

SymplecticShape SymplecticShape::make(const Rational& alpha, const Rational& beta) {
  if (is_zero(alpha) || is_zero(beta))
    throw Error(Errc::zero_area, "alpha and beta must be nonzero");
  return {alpha, beta};
}

long long lambda_of(const SymplecticShape& s) {
  if (is_zero(s.alpha) || is_zero(s.beta))
    throw Error(Errc::zero_area, "alpha and beta must be nonzero");
  long long m = floor_strict(ratio(s));
  if (m % 2 != 0) --m;
  return m >= 2 ? m : 1;
}

long long jordan_bound(const SymplecticShape& s) { return std::max(144LL, 6 * lambda_of(s)); }

PAdmissibility nonabelian_p_admissible(const SymplecticShape& s, long long p) {
  if (p <= 3) throw Error(Errc::prime_too_small, "p must be a prime greater than 3");
  if (!is_prime(static_cast<std::size_t>(p)))
    throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
  PAdmissibility r;
  r.p = p;
  r.lambda = lambda_of(s);
  r.admissible = 2 * p <= r.lambda;
  if (r.admissible)
    r.witness = "Heisenberg group Gamma_" + std::to_string(p) + " of order " +
                std::to_string(p * p * p) + ", a Sylow subgroup of Gamma_" + std::to_string(2 * p);
  return r;
}

std::vector<long long> admissible_fixed_surface_degrees(const SymplecticShape& s) {
  if (is_zero(s.alpha) || is_zero(s.beta))
    throw Error(Errc::zero_area, "alpha and beta must be nonzero");
  long long m = floor_strict(ratio(s));
  if (m % 2 != 0) --m;
  std::vector<long long> out;
  for (long long d = -m; d <= m; d += 2) out.push_back(d);
  return out;
}

SharpnessReport sharpness_witness(const SymplecticShape& s, std::size_t cap,
                                  std::optional<std::chrono::duration<double>> budget) {
  SharpnessReport r;
  r.lambda = lambda_of(s);
  if (r.lambda < 8)
    throw Error(Errc::lambda_too_small, "lambda = " + std::to_string(r.lambda) + " < 8");
  const auto start = std::chrono::steady_clock::now();
  r.n = static_cast<int>(r.lambda);
  const auto hat = heis::hat_gamma_n(r.n, cap);
  r.group_order = hat.group.table.order();
  r.theta_kernel_order = hat.theta_kernel_order;
  r.gamma_index = hat.gamma_index;
  r.claimed_lower_bound = 6 * static_cast<std::size_t>(r.n);
  r.search = min_abelian_index(hat.group.table, SearchOptions{budget});
  r.pass = r.search.status == SearchStatus::exact && r.search.index >= r.claimed_lower_bound;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

IntervalPartition interval_partition(std::span<const SymplecticShape> shapes) {
  std::map<long long, std::vector<std::size_t>> by_lambda;
  for (std::size_t i = 0; i < shapes.size(); ++i) by_lambda[lambda_of(shapes[i])].push_back(i);
  IntervalPartition out;
  for (auto& [lambda, members] : by_lambda) out.groups.push_back({lambda, std::move(members)});
  for (std::size_t i = 0; i < out.groups.size(); ++i)
    for (std::size_t j = i + 1; j < out.groups.size(); ++j) {
      const long long li = out.groups[i].lambda;
      const long long lj = out.groups[j].lambda;
      if (lj >= 8 && 6 * lj > std::max(144LL, 6 * li)) out.separated.push_back({i, j});
    }
  return out;
}

}  // namespace jordan::bounds
