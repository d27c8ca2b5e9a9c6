#pragma once

/**
 * @file jordan_bounds.hpp
 * @brief Exact arithmetic on the symplectic shape (alpha, beta) of S^2 x T^2.
 *
 * lambda is the largest even integer strictly below |2 alpha / beta|, or 1
 * when there is none.
 */

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jordan/abelian_search.hpp"
#include "jordan/build.hpp"
#include "jordan/rational.hpp"

namespace jordan::bounds {

struct SymplecticShape {
  Rational alpha;  // area of the torus factor
  Rational beta;   // area of the sphere factor

  // Throws Error(zero_area).
  static SymplecticShape make(const Rational& alpha, const Rational& beta);
  friend bool operator==(const SymplecticShape&, const SymplecticShape&) = default;
};

long long lambda_of(const SymplecticShape& s);
long long jordan_bound(const SymplecticShape& s);

struct PAdmissibility {
  long long p = 0;
  long long lambda = 1;
  bool admissible = false;
  std::string witness;  // names the Heisenberg p-group when admissible
};

// Throws Error(prime_too_small) for p <= 3, Error(invalid_argument) for non-primes.
PAdmissibility nonabelian_p_admissible(const SymplecticShape& s, long long p);

// Even d with |d| < |2 alpha / beta|, ascending.
std::vector<long long> admissible_fixed_surface_degrees(const SymplecticShape& s);

struct SharpnessReport {
  long long lambda = 0;
  int n = 0;
  std::size_t group_order = 0;
  std::size_t theta_kernel_order = 0;
  std::size_t gamma_index = 0;
  std::size_t claimed_lower_bound = 0;  // 6n
  AbelianIndexResult search;
  bool pass = false;  // search exact and index >= 6n
  double seconds = 0;
};

// Throws Error(lambda_too_small) when lambda < 8.
SharpnessReport sharpness_witness(const SymplecticShape& s, std::size_t cap = kDefaultCap,
                                  std::optional<std::chrono::duration<double>> budget = {});

struct IntervalPartition {
  struct Group {
    long long lambda = 0;
    std::vector<std::size_t> members;  // indices into the input
  };
  // Group j's witness hat Gamma_{lambda_j} cannot sit inside group i's
  // symplectomorphism group: 6 lambda_j > max(144, 6 lambda_i), lambda_j >= 8.
  struct Separation {
    std::size_t low = 0;
    std::size_t high = 0;
  };
  std::vector<Group> groups;  // ascending lambda
  std::vector<Separation> separated;
};

IntervalPartition interval_partition(std::span<const SymplecticShape> shapes);

}  // namespace jordan::bounds
