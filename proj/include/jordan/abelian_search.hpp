#pragma once

/**
 * @file abelian_search.hpp
 * @brief Exact minimal index of an abelian subgroup.
 *
 * A largest abelian subgroup is a maximum clique of the commuting graph that
 * happens to be closed, so the search grows abelian subgroups A inside their
 * centralizers C(A) and bounds each branch by |C(A) minus excluded elements|.
 * Top-level branches run over conjugacy-class representatives only; every
 * explored element is excluded from later sibling branches.
 */

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "jordan/bitset.hpp"
#include "jordan/group_table.hpp"
#include "jordan/subgroup.hpp"

namespace jordan {

// Row x is the centralizer of x as a bit set.
class CommutingGraph {
 public:
  explicit CommutingGraph(const GroupTable& g);

  const Bitset& row(Elem x) const noexcept { return rows_[x]; }
  std::size_t order() const noexcept { return rows_.size(); }

 private:
  std::vector<Bitset> rows_;
};

struct SearchOptions {
  // Wall-clock budget; nullopt means unbounded.
  std::optional<std::chrono::duration<double>> budget;
};

enum class SearchStatus { exact, timeout };

struct AbelianIndexResult {
  SearchStatus status = SearchStatus::exact;
  // With status == timeout this is only the index of the best witness found
  // so far, an upper bound on the true minimum.
  std::size_t index = 0;
  SubgroupMask witness;
  std::size_t nodes = 0;
};

AbelianIndexResult min_abelian_index(const GroupTable& g, const SearchOptions& opts = {});

// Subgroup as a standalone table; embedding[i] is the parent index of new
// element i, and the identity stays at 0.
GroupTable induced_table(const GroupTable& g, const SubgroupMask& h,
                         std::vector<Elem>* embedding = nullptr);

}  // namespace jordan
