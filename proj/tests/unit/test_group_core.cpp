#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

#include "doctest.h"

#include "jordan/abelian_search.hpp"
#include "jordan/automorphisms.hpp"
#include "jordan/build.hpp"
#include "jordan/errors.hpp"
#include "jordan/group_table.hpp"
#include "jordan/permutation.hpp"
#include "jordan/subgroup.hpp"

using namespace jordan;

namespace {

// 2x2 matrices over the Gaussian integers; enough for Q8.
struct GMat {
  std::array<int, 8> v{};  // (re, im) for entries 00, 01, 10, 11

  friend GMat operator*(const GMat& a, const GMat& b) {
    GMat c;
    for (int r = 0; r < 2; ++r)
      for (int col = 0; col < 2; ++col) {
        int re = 0, im = 0;
        for (int k = 0; k < 2; ++k) {
          const int ar = a.v[(r * 2 + k) * 2], ai = a.v[(r * 2 + k) * 2 + 1];
          const int br = b.v[(k * 2 + col) * 2], bi = b.v[(k * 2 + col) * 2 + 1];
          re += ar * br - ai * bi;
          im += ar * bi + ai * br;
        }
        c.v[(r * 2 + col) * 2] = re;
        c.v[(r * 2 + col) * 2 + 1] = im;
      }
    return c;
  }
  friend bool operator==(const GMat&, const GMat&) = default;
};

}  // namespace

template <>
struct std::hash<GMat> {
  std::size_t operator()(const GMat& m) const noexcept {
    std::size_t h = 0;
    for (int x : m.v) h = h * 31 + static_cast<std::size_t>(x + 7);
    return h;
  }
};

namespace {

GroupTable sym(std::size_t n) {
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{1, 2}})};
  std::vector<std::uint16_t> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<std::uint16_t>((i + 1) % n);
  gens.emplace_back(cyc);
  const std::function<std::string(const Permutation&)> label = [](const Permutation& p) {
    return p.to_string();
  };
  return build_from_generators<Permutation>(Permutation(n), std::span<const Permutation>(gens),
                                            kDefaultCap, label)
      .table;
}

GroupTable dihedral(std::size_t n) {
  std::vector<std::uint16_t> rot(n), refl(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<std::uint16_t>((i + 1) % n);
    refl[i] = static_cast<std::uint16_t>((n - i) % n);
  }
  return build_from_generators<Permutation>(Permutation(n),
                                            {Permutation(rot), Permutation(refl)})
      .table;
}

GroupTable quaternion() {
  GMat one, i, j;
  one.v = {1, 0, 0, 0, 0, 0, 1, 0};
  i.v = {0, 1, 0, 0, 0, 0, 0, -1};
  j.v = {0, 0, 1, 0, -1, 0, 0, 0};
  return build_from_generators<GMat>(one, {i, j}).table;
}

// Automorphisms by trying every bijection fixing the identity.
std::size_t brute_aut_count(const GroupTable& g) {
  std::vector<Elem> perm(g.order());
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < g.order() && ok; ++a)
      for (std::size_t b = 0; b < g.order() && ok; ++b)
        ok = perm[g.mul(static_cast<Elem>(a), static_cast<Elem>(b))] ==
             g.mul(perm[a], perm[b]);
    count += ok;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return count;
}

std::size_t naive_order(const GroupTable& g, Elem x) {
  std::size_t k = 1;
  for (Elem p = x; p != g.identity(); p = g.mul(p, x)) ++k;
  return k;
}

}  // namespace

TEST_CASE("from_rows rejects malformed tables") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_argument;
  };
  // Identity not at 0.
  CHECK(code_of([] { GroupTable::from_rows(2, {1, 0, 0, 1}); }) == Errc::invalid_table);
  // Repeated entry in a row.
  CHECK(code_of([] { GroupTable::from_rows(2, {0, 1, 1, 1}); }) == Errc::invalid_table);
  // Entry out of range.
  CHECK(code_of([] { GroupTable::from_rows(2, {0, 1, 1, 2}); }) == Errc::invalid_table);
  // A Latin square with identity and inverses that is not associative.
  const std::vector<Elem> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1,
                               3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK(code_of([&] { GroupTable::from_rows(5, loop); }) == Errc::invalid_table);
  CHECK_NOTHROW(GroupTable::from_rows(1, {0}));
}

TEST_CASE("cyclic groups and products") {
  const auto z6 = cyclic_group(6);
  CHECK(z6.order() == 6);
  CHECK(z6.is_abelian());
  CHECK(z6.mul(4, 5) == 3);
  CHECK(z6.inv(2) == 4);
  CHECK(z6.pow(1, -1) == 5);
  CHECK(exponent(z6) == 6);
  const auto z2z4 = direct_product_cyclic(2, 4);
  CHECK(z2z4.order() == 8);
  CHECK(exponent(z2z4) == 4);
  CHECK(z2z4.mul(1 * 4 + 3, 1 * 4 + 2) == 0 * 4 + 1);
  CHECK(trivial_group().order() == 1);
}

TEST_CASE("permutations") {
  const auto p = Permutation::from_cycles(4, {{1, 2, 3}});
  const auto q = Permutation::from_cycles(4, {{1, 2}});
  CHECK(p.to_string() == "(1 2 3)");
  CHECK((p * q)(0) == p(q(0)));
  CHECK((p * p * p).is_identity());
  CHECK((p * p.inverse()).is_identity());
  CHECK(Permutation(3).to_string() == "()");
}

TEST_CASE("build_from_generators") {
  const auto s3 = sym(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(sym(4).order() == 24);
  CHECK(dihedral(4).order() == 8);
  CHECK(quaternion().order() == 8);

  std::vector<Permutation> none;
  CHECK_THROWS_AS(build_from_generators<Permutation>(Permutation(3), none), Error);
  try {
    build_from_generators<Permutation>(Permutation(4),
                                       {Permutation::from_cycles(4, {{1, 2, 3, 4}}),
                                        Permutation::from_cycles(4, {{1, 2}})},
                                       10);
    FAIL("expected cap_exceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cap_exceeded);
  }
}

TEST_CASE("element orders match repeated multiplication") {
  for (const auto& g : {sym(4), dihedral(6), quaternion(), direct_product_cyclic(4, 6)})
    for (std::size_t x = 0; x < g.order(); ++x)
      CHECK(element_order(g, static_cast<Elem>(x)) == naive_order(g, static_cast<Elem>(x)));
}

TEST_CASE("json round trip") {
  const auto g = dihedral(5);
  const auto j = to_json(g);
  CHECK(j["order"] == 10);
  CHECK(j["mul"].size() == 10);
  const auto back = group_from_json(j);
  CHECK(back == g);
  CHECK(back.labels() == g.labels());

  try {
    group_from_json(nlohmann::json{{"order", 2}});
    FAIL("expected parse_error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  try {
    group_from_json(nlohmann::json{{"order", 2}, {"mul", {{0, 1}, {1, 1}}}});
    FAIL("expected invalid_table");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_table);
  }
}

TEST_CASE("center, commutator, normal closure") {
  const auto s4 = sym(4);
  CHECK(center(s4).size() == 1);
  CHECK(commutator_subgroup(s4).size() == 12);
  CHECK(center(dihedral(4)).size() == 2);
  CHECK(center(dihedral(5)).size() == 1);
  CHECK(center(quaternion()).size() == 2);
  CHECK(commutator_subgroup(quaternion()).size() == 2);
  CHECK(commutator_subgroup(direct_product_cyclic(3, 5)).size() == 1);

  // The normal closure of a transposition in S4 is S4.
  Elem t = 0;
  for (std::size_t x = 0; x < s4.order(); ++x)
    if (s4.label(static_cast<Elem>(x)) == "(1 2)") t = static_cast<Elem>(x);
  REQUIRE(t != 0);
  const Elem seed[] = {t};
  CHECK(normal_closure(s4, seed).size() == 24);
  CHECK(closure(s4, seed).size() == 2);
  CHECK_FALSE(is_normal(s4, closure(s4, seed)));
  CHECK(normalizer(s4, closure(s4, seed)).size() == 4);
  CHECK(centralizer(s4, seed).size() == 4);
}

TEST_CASE("quotients") {
  const auto s4 = sym(4);
  const auto a4 = commutator_subgroup(s4);
  const auto q = quotient_by_normal(s4, a4);
  CHECK(q.table.order() == 2);
  CHECK(kernel(s4, q.projection) == a4);
  CHECK(is_homomorphism(s4, q.table, q.projection.map));

  // V4 is the commutator subgroup of A4, normal in S4 with quotient S3.
  const auto a4t = induced_table(s4, a4);
  std::vector<Elem> emb;
  const auto a4_again = induced_table(s4, a4, &emb);
  CHECK(a4_again == a4t);
  const auto v4_in_a4 = commutator_subgroup(a4t);
  CHECK(v4_in_a4.size() == 4);
  Bitset v4(s4.order());
  v4_in_a4.bits().for_each([&](std::size_t i) { v4.set(emb[i]); });
  const auto v4s = SubgroupMask::checked(s4, v4);
  CHECK(is_normal(s4, v4s));
  const auto s3 = quotient_by_normal(s4, v4s);
  CHECK(s3.table.order() == 6);
  CHECK_FALSE(s3.table.is_abelian());
  const auto d8 = dihedral(4);
  const auto z = center(d8);
  const auto qd = quotient_by_normal(d8, z);
  CHECK(qd.table.order() == 4);
  CHECK(qd.table.is_abelian());
  CHECK(exponent(qd.table) == 2);

  const Elem seed[] = {1};
  const auto h = closure(s4, seed);
  REQUIRE_FALSE(is_normal(s4, h));
  try {
    quotient_by_normal(s4, h);
    FAIL("expected not_normal");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_normal);
  }
}

TEST_CASE("sylow subgroups") {
  const auto s4 = sym(4);
  CHECK(sylow(s4, 2).size() == 8);
  CHECK(sylow(s4, 3).size() == 3);
  CHECK(sylow(dihedral(6), 3).size() == 3);
  CHECK(sylow(direct_product_cyclic(4, 6), 2).size() == 8);
  try {
    sylow(s4, 5);
    FAIL("expected prime_does_not_divide");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::prime_does_not_divide);
  }
  CHECK_THROWS_AS(sylow(s4, 4), Error);
}

TEST_CASE("conjugacy classes") {
  auto classes = [](const GroupTable& g) {
    const auto ids = conjugacy_class_ids(g);
    return std::set<std::size_t>(ids.begin(), ids.end()).size();
  };
  CHECK(classes(sym(4)) == 5);
  CHECK(classes(sym(3)) == 3);
  CHECK(classes(dihedral(4)) == 5);
  CHECK(classes(quaternion()) == 5);
  CHECK(classes(cyclic_group(7)) == 7);
  // Class ids agree with brute-force conjugation.
  const auto g = sym(4);
  const auto ids = conjugacy_class_ids(g);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t c = 0; c < g.order(); ++c)
      CHECK(ids[g.conj(static_cast<Elem>(c), static_cast<Elem>(x))] == ids[x]);
}

TEST_CASE("abelian invariants") {
  auto factors = [](const GroupTable& g) {
    return abelian_invariants(g, SubgroupMask::whole(g)).factors;
  };
  CHECK(factors(direct_product_cyclic(4, 6)) == std::vector<std::size_t>{12, 2});
  CHECK(factors(direct_product_cyclic(3, 5)) == std::vector<std::size_t>{15});
  CHECK(factors(cyclic_group(1)).empty());
  const auto z2cubed = build_from_generators<Permutation>(
      Permutation(6), {Permutation::from_cycles(6, {{1, 2}}), Permutation::from_cycles(6, {{3, 4}}),
                       Permutation::from_cycles(6, {{5, 6}})});
  CHECK(factors(z2cubed.table) == std::vector<std::size_t>{2, 2, 2});
  CHECK(is_cyclic(cyclic_group(9), SubgroupMask::whole(cyclic_group(9))));
  CHECK_FALSE(is_cyclic(direct_product_cyclic(3, 3),
                        SubgroupMask::whole(direct_product_cyclic(3, 3))));
}

TEST_CASE("generating sets") {
  const auto g = sym(4);
  const auto gens = generating_set(g);
  CHECK(closure(g, gens).size() == 24);
  CHECK(small_generating_set(g).size() == 2);
  CHECK(small_generating_set(cyclic_group(10)).size() == 1);
}

TEST_CASE("automorphism counts match brute force") {
  const std::vector<std::pair<GroupTable, std::size_t>> cases = {
      {direct_product_cyclic(2, 2), 6}, {sym(3), 6},        {cyclic_group(8), 4},
      {dihedral(4), 8},                 {quaternion(), 24}, {direct_product_cyclic(2, 4), 8},
      {cyclic_group(7), 6}};
  for (const auto& [g, want] : cases) {
    const auto auts = automorphisms(g);
    CHECK(auts.size() == want);
    CHECK(brute_aut_count(g) == want);
    for (const auto& a : auts) CHECK(is_automorphism(g, a));
  }
  CHECK(automorphisms(sym(4)).size() == 24);
  CHECK_THROWS_AS(automorphisms(cyclic_group(200)), Error);
}

TEST_CASE("sigma orbits") {
  // In Z2 x Z2 the three order-2 subgroups are permuted transitively.
  const auto v4 = direct_product_cyclic(2, 2);
  const Elem a[] = {1};
  CHECK(sigma_orbit(v4, closure(v4, a)).size() == 3);
  // The rotation subgroup of D8 is characteristic.
  const auto d8 = dihedral(4);
  std::vector<Elem> big;
  for (std::size_t x = 0; x < d8.order(); ++x)
    if (element_order(d8, static_cast<Elem>(x)) == 4) big.push_back(static_cast<Elem>(x));
  CHECK(sigma_orbit(d8, closure(d8, big)).size() == 1);
}

TEST_CASE("homomorphism checks") {
  const auto z6 = cyclic_group(6);
  const auto z3 = cyclic_group(3);
  std::vector<Elem> mod3(6);
  for (std::size_t i = 0; i < 6; ++i) mod3[i] = static_cast<Elem>(i % 3);
  CHECK(is_homomorphism(z6, z3, mod3));
  CHECK(is_homomorphism(z6, z3, mod3, 50, 1));
  std::vector<Elem> bad(6, 1);
  bad[0] = 0;
  CHECK_FALSE(is_homomorphism(z6, z3, bad));
  CHECK(image(z6, z3, Homomorphism{mod3}).count() == 3);
}
