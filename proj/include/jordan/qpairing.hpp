#pragma once

/**
 * @file qpairing.hpp
 * @brief The commutator pairing of a central extension with abelian quotient.
 *
 * For 1 -> G0 -> G -> G_B -> 1 with G0 central and G_B abelian,
 * Q(a, b) = [alpha, beta] for any lifts alpha of a and beta of b.
 */

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "jordan/group_table.hpp"
#include "jordan/subgroup.hpp"

namespace jordan::qpair {

struct CentralData {
  std::shared_ptr<const GroupTable> g;
  SubgroupMask gamma0;
  Quotient quotient;                       // table is G_B, projection is eta
  std::vector<std::vector<Elem>> lifts;    // lifts[b]: every preimage of b

  const GroupTable& gamma_b() const noexcept { return quotient.table; }
  const Homomorphism& eta() const noexcept { return quotient.projection; }
};

// Throws Error(not_central) or Error(quotient_not_abelian).
CentralData central_data_from(std::shared_ptr<const GroupTable> g, SubgroupMask gamma0);

// Returns an element of gamma0. Throws Error(invalid_table) if two lifts disagree.
Elem q_pair(const CentralData& data, Elem a, Elem b);

struct PropertyResult {
  std::string property;
  bool pass = true;
  std::vector<Elem> counterexample;  // elements of G_B
  std::size_t checked = 0;
};

nlohmann::json to_json(const PropertyResult& r);

// "biadditive", "order_divides_gcd", "coprime_vanishing", "p_order_bound",
// each checked over every tuple of G_B.
std::vector<PropertyResult> verify_q_properties(const CentralData& data);

// Every pair of lifts of every (a, b) gives the same commutator.
PropertyResult lift_independence(const CentralData& data);

// |[G, G]|.
std::size_t commutator_order_dc(const CentralData& data);

struct DcReport {
  std::size_t d_c = 0;
  std::size_t gamma_b_order = 0;
  bool bound_holds = false;       // d_c^2 <= |G_B|
  bool tight = false;             // d_c^2 == |G_B|
  bool single_q_generates = false;
  Elem gen_a = 0, gen_b = 0;      // Q(gen_a, gen_b) generates [G, G]
};

// Throws Error(hypothesis_violation) unless G_B is 2-generated and [G, G] is
// cyclic and central.
DcReport check_dc_bound(const CentralData& data);

struct Pullback {
  SubgroupMask gamma_cyc;          // in G_B
  SubgroupMask gamma_ab;           // eta^-1(gamma_cyc), in G
  std::size_t index = 0;           // [G_B : gamma_cyc] = [G : gamma_ab]
  std::vector<std::size_t> invariants;
  bool abelian = false;
};

// gamma_cyc is generated by the generator of the largest invariant factor.
// Throws Error(hypothesis_violation) if G_B needs more than two generators.
Pullback abelian_pullback(const CentralData& data);

}  // namespace jordan::qpair
