#pragma once

// Closure of a generating set inside a concrete element domain, producing a
// dense Cayley table plus the element <-> index correspondence.

#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jordan/errors.hpp"
#include "jordan/group_table.hpp"

namespace jordan {

template <class T>
concept GroupDomain = std::equality_comparable<T> && std::copy_constructible<T> &&
                      requires(const T& a, const T& b) {
                        { a * b } -> std::convertible_to<T>;
                        { std::hash<T>{}(a) } -> std::convertible_to<std::size_t>;
                      };

template <GroupDomain T>
struct BuiltGroup {
  GroupTable table;
  std::vector<T> elements;  // elements[i] is table element i; elements[0] is the identity
  std::unordered_map<T, Elem> index;

  Elem index_of(const T& t) const {
    const auto it = index.find(t);
    if (it == index.end()) throw Error(Errc::invalid_argument, "element not in group");
    return it->second;
  }
  bool contains(const T& t) const { return index.contains(t); }
};

/// Closes `gens` under the domain product, starting from `identity`.
///
/// Elements are numbered in breadth-first order over right multiplication by
/// the generators, so the identity is 0. The
/// full table is filled from the Schreier tree: if b = parent(b) * g then
/// a*b = (a*parent(b)) * g, one lookup per entry.
template <GroupDomain T>
BuiltGroup<T> build_from_generators(const T& identity, std::span<const T> gens,
                                    std::size_t cap = kDefaultCap,
                                    const std::function<std::string(const T&)>& labeler = {}) {
  if (gens.empty()) throw Error(Errc::invalid_argument, "empty generating set");
  if (cap > kMaxOrder) cap = kMaxOrder;
  BuiltGroup<T> out{GroupTable::from_rows(1, {0}), {}, {}};
  auto& elems = out.elements;
  auto& index = out.index;
  elems.push_back(identity);
  index.emplace(identity, 0);

  const std::size_t k = gens.size();
  std::vector<std::vector<Elem>> right(k);  // right[j][i] = index(elems[i] * gens[j])
  std::vector<Elem> parent{0};
  std::vector<std::size_t> via{0};

  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      T next = elems[i] * gens[j];
      auto it = index.find(next);
      if (it == index.end()) {
        if (elems.size() >= cap)
          throw Error(Errc::cap_exceeded,
                      "closure grew past cap " + std::to_string(cap));
        const auto id = static_cast<Elem>(elems.size());
        it = index.emplace(next, id).first;
        elems.push_back(std::move(next));
        parent.push_back(static_cast<Elem>(i));
        via.push_back(j);
      }
      right[j].push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    Elem* row = mul.data() + a * n;
    row[0] = static_cast<Elem>(a);
    for (std::size_t b = 1; b < n; ++b) row[b] = right[via[b]][row[parent[b]]];
  }

  std::vector<std::string> labels;
  if (labeler) {
    labels.reserve(n);
    for (const auto& e : elems) labels.push_back(labeler(e));
  }
  out.table = GroupTable::from_rows(n, std::move(mul), std::move(labels));
  return out;
}

template <GroupDomain T>
BuiltGroup<T> build_from_generators(const T& identity, std::initializer_list<T> gens,
                                    std::size_t cap = kDefaultCap,
                                    const std::function<std::string(const T&)>& labeler = {}) {
  return build_from_generators<T>(identity, std::span<const T>(gens.begin(), gens.size()), cap,
                                  labeler);
}

}  // namespace jordan
