#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jordan/bitset.hpp"
#include "jordan/group_table.hpp"

namespace jordan {

// A subset of a group's elements closed under the group law. Masks produced by
// the functions below are subgroups by construction; `checked` validates an
// arbitrary bit set.
class SubgroupMask {
 public:
  SubgroupMask() = default;

  static SubgroupMask checked(const GroupTable& g, Bitset bits);
  static SubgroupMask trusted(Bitset bits) { return SubgroupMask(std::move(bits)); }
  static SubgroupMask whole(const GroupTable& g) {
    return SubgroupMask(Bitset::full(g.order()));
  }
  static SubgroupMask identity_only(const GroupTable& g);

  const Bitset& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.count(); }
  bool contains(Elem e) const noexcept { return bits_.test(e); }
  std::vector<Elem> elements() const;

  friend bool operator==(const SubgroupMask&, const SubgroupMask&) = default;
  friend auto operator<=>(const SubgroupMask& a, const SubgroupMask& b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  explicit SubgroupMask(Bitset bits) : bits_(std::move(bits)) {}
  Bitset bits_;
};

// Exhaustive check: identity, closure under mul and inv.
bool is_subgroup(const GroupTable& g, const Bitset& bits);
bool is_abelian_subset(const GroupTable& g, const Bitset& bits);

SubgroupMask closure(const GroupTable& g, std::span<const Elem> seed);
// Smallest subgroup containing `base` and `extra`.
SubgroupMask join(const GroupTable& g, const SubgroupMask& base, std::span<const Elem> extra);

// Greedy generating set: scans elements of `h` in index order and keeps those
// not already in the closure of the ones kept so far.
std::vector<Elem> generating_set(const GroupTable& g, const SubgroupMask& h);
std::vector<Elem> generating_set(const GroupTable& g);

SubgroupMask center(const GroupTable& g);
SubgroupMask centralizer(const GroupTable& g, std::span<const Elem> s);
SubgroupMask centralizer(const GroupTable& g, const SubgroupMask& s);
SubgroupMask normalizer(const GroupTable& g, const SubgroupMask& s);
// Smallest normal subgroup containing `seed`.
SubgroupMask normal_closure(const GroupTable& g, std::span<const Elem> seed);
SubgroupMask commutator_subgroup(const GroupTable& g);

bool is_normal(const GroupTable& g, const SubgroupMask& s);

struct Quotient {
  GroupTable table;
  Homomorphism projection;  // surjective, kernel = the normal subgroup
  std::vector<Elem> representatives;  // smallest element of each coset
};

// Cosets are numbered by their smallest element, so the kernel is coset 0.
// Throws Error(not_normal).
Quotient quotient_by_normal(const GroupTable& g, const SubgroupMask& s);

SubgroupMask kernel(const GroupTable& src, const Homomorphism& f);
Bitset image(const GroupTable& src, const GroupTable& tgt, const Homomorphism& f);

std::size_t element_order(const GroupTable& g, Elem x);
std::size_t exponent(const GroupTable& g);

// Throws Error(prime_does_not_divide) or Error(invalid_argument) for non-primes.
SubgroupMask sylow(const GroupTable& g, std::size_t p);

// Conjugacy class id of every element; classes are numbered in order of their
// smallest member.
std::vector<std::size_t> conjugacy_class_ids(const GroupTable& g);

// Invariant factors of an abelian subgroup, largest first, found by repeatedly
// splitting off a cyclic factor of maximal order (ties: smallest index).
// `generators[i]` generates the i-th factor modulo the previous ones.
struct AbelianInvariants {
  std::vector<std::size_t> factors;
  std::vector<Elem> generators;
};
AbelianInvariants abelian_invariants(const GroupTable& g, const SubgroupMask& h);

bool is_cyclic(const GroupTable& g, const SubgroupMask& h);
bool is_prime(std::size_t p) noexcept;

}  // namespace jordan
