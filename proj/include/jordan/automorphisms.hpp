#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "jordan/group_table.hpp"
#include "jordan/subgroup.hpp"

namespace jordan {

inline constexpr std::size_t kDefaultAutCap = 120;

// A bijection of the element indices respecting the group law.
struct AutMap {
  std::vector<Elem> perm;

  Elem operator()(Elem a) const noexcept { return perm[a]; }
  friend bool operator==(const AutMap&, const AutMap&) = default;
};

bool is_automorphism(const GroupTable& g, const AutMap& phi);

// Smallest generating set: exact for sizes 1 and 2, greedy beyond.
std::vector<Elem> small_generating_set(const GroupTable& g);

/// All automorphisms of `g`.
///
/// Generators are sent to every tuple of images with matching element orders;
/// each candidate is extended along the Cayley graph and kept when it is a
/// well-defined bijective homomorphism. Throws Error(cap_exceeded) when the
/// order is above `cap`.
std::vector<AutMap> automorphisms(const GroupTable& g,
                                  std::optional<std::span<const Elem>> gen_hint = std::nullopt,
                                  std::size_t cap = kDefaultAutCap);

// { phi(H') : phi in Aut(g) } as distinct masks.
std::set<SubgroupMask> sigma_orbit(const GroupTable& g, const SubgroupMask& h_prime,
                                   std::size_t cap = kDefaultAutCap);

}  // namespace jordan
