#include <chrono>
#include <functional>
#include <set>
#include <vector>

#include "doctest.h"

#include "jordan/abelian_search.hpp"
#include "jordan/build.hpp"
#include "jordan/heisenberg.hpp"
#include "jordan/permutation.hpp"
#include "jordan/subgroup.hpp"

using namespace jordan;

namespace {

GroupTable perm_group(std::size_t n, std::initializer_list<Permutation> gens) {
  return build_from_generators<Permutation>(Permutation(n), gens).table;
}

Permutation cyc(std::size_t n, std::initializer_list<std::initializer_list<int>> c) {
  return Permutation::from_cycles(n, c);
}

// Every abelian subgroup, grown one element at a time from the trivial group.
std::size_t oracle_largest_abelian(const GroupTable& g) {
  const std::size_t n = g.order();
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> stack{std::vector<bool>(n, false)};
  stack.back()[0] = true;
  seen.insert(stack.back());
  std::size_t best = 1;
  while (!stack.empty()) {
    const auto a = stack.back();
    stack.pop_back();
    std::vector<Elem> members;
    for (std::size_t x = 0; x < n; ++x)
      if (a[x]) members.push_back(static_cast<Elem>(x));
    best = std::max(best, members.size());
    for (std::size_t x = 0; x < n; ++x) {
      if (a[x]) continue;
      bool commutes = true;
      for (Elem m : members) commutes = commutes && g.commute(m, static_cast<Elem>(x));
      if (!commutes) continue;
      // <A, x> = { m x^k }.
      std::vector<bool> b(n, false);
      Elem p = 0;
      do {
        for (Elem m : members) b[g.mul(m, p)] = true;
        p = g.mul(p, static_cast<Elem>(x));
      } while (p != 0);
      if (seen.insert(b).second) stack.push_back(std::move(b));
    }
  }
  return best;
}

void check_against_oracle(const GroupTable& g) {
  const auto r = min_abelian_index(g);
  CHECK(r.status == SearchStatus::exact);
  CHECK(g.order() / oracle_largest_abelian(g) == r.index);
  CHECK(r.witness.size() * r.index == g.order());
  CHECK(is_subgroup(g, r.witness.bits()));
  CHECK(is_abelian_subset(g, r.witness.bits()));
}

}  // namespace

TEST_CASE("minimal abelian index agrees with exhaustive enumeration") {
  const auto s3 = perm_group(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})});
  const auto s4 = perm_group(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
  const auto a4 = perm_group(4, {cyc(4, {{1, 2, 3}}), cyc(4, {{1, 2}, {3, 4}})});
  const auto a5 = perm_group(5, {cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})});
  const auto d8 = perm_group(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})});
  const auto s3s3 = perm_group(
      6, {cyc(6, {{1, 2}}), cyc(6, {{1, 2, 3}}), cyc(6, {{4, 5}}), cyc(6, {{4, 5, 6}})});
  for (const auto* g : {&s3, &s4, &a4, &a5, &d8, &s3s3}) check_against_oracle(*g);
  check_against_oracle(heis::gamma_n(2).table);
  check_against_oracle(heis::gamma_n(3).table);
  check_against_oracle(heis::gamma_n(4).table);
  check_against_oracle(heis::hat_gamma_n(2).group.table);
  check_against_oracle(cyclic_group(12));
  check_against_oracle(trivial_group());
}

TEST_CASE("known indices") {
  const auto a5 = perm_group(5, {cyc(5, {{1, 2, 3, 4, 5}}), cyc(5, {{1, 2, 3}})});
  const auto s4 = perm_group(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
  CHECK(min_abelian_index(a5).index == 12);
  CHECK(min_abelian_index(s4).index == 6);
  for (int n = 2; n <= 6; ++n) CHECK(min_abelian_index(heis::gamma_n(n).table).index == n);
}

TEST_CASE("a tiny budget reports a timeout with an upper bound") {
  const auto g = heis::hat_gamma_n(10).group.table;
  SearchOptions opts;
  opts.budget = std::chrono::duration<double>(1e-3);
  const auto r = min_abelian_index(g, opts);
  CHECK(r.status == SearchStatus::timeout);
  CHECK(r.index >= 1);
  CHECK(r.witness.size() * r.index == g.order());
  CHECK(is_abelian_subset(g, r.witness.bits()));
}

TEST_CASE("commuting graph rows are centralizers") {
  const auto g = heis::gamma_n(3).table;
  const CommutingGraph cg(g);
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Elem s[] = {static_cast<Elem>(x)};
    CHECK(cg.row(static_cast<Elem>(x)) == centralizer(g, s).bits());
  }
}

TEST_CASE("induced tables") {
  const auto g = heis::gamma_n(4).table;
  const auto z = center(g);
  std::vector<Elem> emb;
  const auto t = induced_table(g, z, &emb);
  CHECK(t.order() == z.size());
  CHECK(t.is_abelian());
  CHECK(emb[0] == 0);
  for (std::size_t a = 0; a < t.order(); ++a)
    for (std::size_t b = 0; b < t.order(); ++b)
      CHECK(emb[t.mul(static_cast<Elem>(a), static_cast<Elem>(b))] == g.mul(emb[a], emb[b]));
}
