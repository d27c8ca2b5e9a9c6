#pragma once

/**
 * @file group_table.hpp
 * @brief Finite groups as dense Cayley tables.
 *
 * Elements are indices 0..order-1 and element 0 is always the identity.
 * Tables are immutable once constructed and validated, so they can be shared
 * read-only between threads.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace jordan {

using Elem = std::uint16_t;

inline constexpr std::size_t kMaxOrder = 65535;
inline constexpr std::size_t kDefaultCap = 20000;
// Associativity is checked on every triple up to this order, sampled above.
inline constexpr std::size_t kExhaustiveAssocLimit = 512;
inline constexpr std::size_t kAssocSamples = 100000;

class GroupTable {
 public:
  // Validates the table (entries in range, identity at 0, Latin rows,
  // inverses, associativity). Throws Error(invalid_table) on failure.
  static GroupTable from_rows(std::size_t order, std::vector<Elem> mul,
                              std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return 0; }

  Elem mul(Elem a, Elem b) const noexcept { return mul_[std::size_t{a} * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  std::span<const Elem> row(Elem a) const noexcept {
    return {mul_.data() + std::size_t{a} * order_, order_};
  }

  Elem pow(Elem a, long long k) const noexcept;
  // a b a^-1 b^-1
  Elem commutator(Elem a, Elem b) const noexcept {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  // g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inv(g)); }
  bool commute(Elem a, Elem b) const noexcept { return mul(a, b) == mul(b, a); }

  bool is_abelian() const noexcept;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Elem a) const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  GroupTable() = default;

  std::size_t order_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> labels_;
};

// The trivial group and the cyclic group Z_n with element k <-> k.
GroupTable trivial_group();
GroupTable cyclic_group(std::size_t n);
// Z_m x Z_n with element (a,b) at index a*n + b.
GroupTable direct_product_cyclic(std::size_t m, std::size_t n);

// A map between two tables, stored as target indices indexed by source index.
struct Homomorphism {
  std::vector<Elem> map;

  Elem operator()(Elem a) const noexcept { return map[a]; }
};

// Checks map(ab) = map(a)map(b). With `samples` set, checks that many
// seeded random pairs instead of all of them.
bool is_homomorphism(const GroupTable& src, const GroupTable& tgt, std::span<const Elem> map,
                     std::optional<std::size_t> samples = std::nullopt,
                     std::uint64_t seed = 0);

// JSON interchange: {"order": n, "mul": [[...]], "labels": [...]}.
nlohmann::json to_json(const GroupTable& g);
GroupTable group_from_json(const nlohmann::json& j);

}  // namespace jordan
