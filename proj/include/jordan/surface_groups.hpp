#pragma once

/**
 * @file surface_groups.hpp
 * @brief Finite rotation groups of the sphere and point groups of the torus.
 *
 * Rotation groups are realized as permutation groups (no irrational
 * coordinates): C_n and D_2n act on the vertices of an n-gon, the tetrahedral
 * group is A_4, the octahedral group S_4 and the icosahedral group A_5.
 *
 * "h exchanges the two fixed points of the axis of H'" is decided
 * algebraically: h lies outside H' and conjugates every x in H' to x^-1. For
 * H' of order at least 3 a rotation preserving the axis either commutes with
 * H' (fixes both poles) or inverts it (swaps them).
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jordan/build.hpp"
#include "jordan/group_table.hpp"
#include "jordan/heisenberg.hpp"
#include "jordan/permutation.hpp"
#include "jordan/subgroup.hpp"

namespace jordan::surface {

struct RotationGroupKind {
  enum class Family { cyclic, dihedral, tetra, octa, icosa };
  Family family = Family::cyclic;
  int n = 1;  // used by cyclic and dihedral only

  static RotationGroupKind cyclic(int n);
  static RotationGroupKind dihedral(int n);
  static RotationGroupKind tetra() { return {Family::tetra, 0}; }
  static RotationGroupKind octa() { return {Family::octa, 0}; }
  static RotationGroupKind icosa() { return {Family::icosa, 0}; }

  // "cyclic:n", "dihedral:n", "tetra", "octa", "icosa". Throws Error(parse_error).
  static RotationGroupKind parse(std::string_view text);
  std::string to_string() const;
  std::size_t expected_order() const noexcept;

  friend bool operator==(const RotationGroupKind&, const RotationGroupKind&) = default;
};

BuiltGroup<Permutation> rotation_group(const RotationGroupKind& kind,
                                       std::size_t cap = kDefaultCap);

struct EsferaWitness {
  SubgroupMask h_prime;                   // nontrivial cyclic
  std::size_t h_prime_order = 0;
  std::size_t sigma_count = 0;            // |{phi(H') : phi in Aut(H)}|
  std::optional<Elem> inverting_element;  // outside H', inverts H' elementwise
};

EsferaWitness esfera_witness(const GroupTable& g, const RotationGroupKind& kind);

// True iff `h` is cyclic. Throws Error(invalid_argument) unless p is an odd
// prime and |h| is a power of p.
bool p_group_on_sphere_is_cyclic(std::size_t p, const GroupTable& g);
bool p_group_on_sphere_is_cyclic(std::size_t p, const GroupTable& g, const SubgroupMask& h);

// Largest odd-prime-power subgroups are not enough to rule out Z_p x Z_p, so
// this closes every pair of p-elements instead. Returns the first non-cyclic
// odd p-subgroup found, if any.
std::optional<SubgroupMask> find_noncyclic_odd_p_subgroup(const GroupTable& g);

// Orders of the finite-order matrices in SL(2,Z) with all entries in
// [-entry_bound, entry_bound]. A matrix has finite order iff it is +-I or
// |trace| <= 1; orders are then found by iteration.
std::vector<int> torus_point_orders(int entry_bound);

struct TorIndexReport {
  SubgroupMask translations;  // H' = elements acting by translation
  std::size_t index = 0;      // [H : H'] <= 6
  bool abelian = false;
  bool two_generated = false;
  bool acts_freely = false;   // on the lattice points Z_n^2
  std::vector<std::size_t> invariants;
};

// `action[i]` is the affine map of element i. Throws Error(index_exceeds_six).
TorIndexReport tor_index_bound_check(const GroupTable& g,
                                     const std::vector<heis::TorusAffine>& action);

}  // namespace jordan::surface
