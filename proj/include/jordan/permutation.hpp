#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace jordan {

// Permutation of {0, ..., degree-1}. Product is composition: (p*q)(i) = p(q(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<std::uint16_t> images);

  // Builds from disjoint cycles over 1-based points, e.g. {{1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<int>> cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint16_t operator()(std::size_t i) const noexcept { return images_[i]; }
  const std::vector<std::uint16_t>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  // 1-based cycle notation, "()" for the identity.
  std::string to_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

}  // namespace jordan

template <>
struct std::hash<jordan::Permutation> {
  std::size_t operator()(const jordan::Permutation& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : p.images()) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }
};
