#include "jordan/qpairing.hpp"

#include <algorithm>
#include <numeric>

#include "jordan/errors.hpp"

namespace jordan::qpair {

namespace {

// p if n = p^k with k >= 1, else 0.
std::size_t prime_base(std::size_t n) {
  if (n < 2) return 0;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

// Q over all of G_B x G_B, row-major.
std::vector<Elem> q_table(const CentralData& data) {
  const std::size_t m = data.gamma_b().order();
  std::vector<Elem> q(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      q[a * m + b] = q_pair(data, static_cast<Elem>(a), static_cast<Elem>(b));
  return q;
}

}  // namespace

CentralData central_data_from(std::shared_ptr<const GroupTable> g, SubgroupMask gamma0) {
  if (!g) throw Error(Errc::invalid_argument, "null group");
  const GroupTable& t = *g;
  if (!gamma0.bits().is_subset_of(center(t).bits()))
    throw Error(Errc::not_central, "gamma0 is not contained in the center");
  Quotient q = quotient_by_normal(t, gamma0);
  if (!q.table.is_abelian())
    throw Error(Errc::quotient_not_abelian, "quotient by gamma0 is not abelian");
  std::vector<std::vector<Elem>> lifts(q.table.order());
  for (std::size_t x = 0; x < t.order(); ++x) lifts[q.projection(static_cast<Elem>(x))].push_back(
      static_cast<Elem>(x));
  return CentralData{std::move(g), std::move(gamma0), std::move(q), std::move(lifts)};
}

Elem q_pair(const CentralData& data, Elem a, Elem b) {
  const GroupTable& g = *data.g;
  const auto& la = data.lifts.at(a);
  const auto& lb = data.lifts.at(b);
  const Elem q = g.commutator(la.front(), lb.front());
  if ((la.size() > 1 || lb.size() > 1) && g.commutator(la.back(), lb.back()) != q)
    throw Error(Errc::invalid_table, "commutator depends on the chosen lifts");
  return q;
}

nlohmann::json to_json(const PropertyResult& r) {
  nlohmann::json ce = nlohmann::json::array();
  for (Elem e : r.counterexample) ce.push_back(e);
  return {{"property", r.property}, {"pass", r.pass}, {"counterexample", ce}};
}

std::vector<PropertyResult> verify_q_properties(const CentralData& data) {
  const GroupTable& g = *data.g;
  const GroupTable& b = data.gamma_b();
  const std::size_t m = b.order();
  const auto q = q_table(data);
  const auto Q = [&](std::size_t x, std::size_t y) { return q[x * m + y]; };

  std::vector<std::size_t> ord_b(m), ord_q(m * m), base(m);
  for (std::size_t x = 0; x < m; ++x) {
    ord_b[x] = element_order(b, static_cast<Elem>(x));
    base[x] = prime_base(ord_b[x]);
  }
  for (std::size_t i = 0; i < m * m; ++i) ord_q[i] = element_order(g, q[i]);

  const auto fail = [](PropertyResult& r, std::vector<Elem> ce) {
    if (r.pass) {
      r.pass = false;
      r.counterexample = std::move(ce);
    }
  };
  const auto E = [](std::size_t v) { return static_cast<Elem>(v); };

  PropertyResult biadd{"biadditive", true, {}, 0};
  for (std::size_t x = 0; x < m; ++x) {
    ++biadd.checked;
    if (Q(x, x) != g.identity() || Q(0, x) != g.identity() || Q(x, 0) != g.identity())
      fail(biadd, {E(x)});
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        ++biadd.checked;
        const std::size_t xy = b.mul(E(x), E(y));
        const std::size_t yz = b.mul(E(y), E(z));
        if (Q(xy, z) != g.mul(Q(x, z), Q(y, z)) || Q(x, yz) != g.mul(Q(x, y), Q(x, z)))
          fail(biadd, {E(x), E(y), E(z)});
      }
  }

  PropertyResult divides{"order_divides_gcd", true, {}, 0};
  PropertyResult coprime{"coprime_vanishing", true, {}, 0};
  PropertyResult pbound{"p_order_bound", true, {}, 0};
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t oq = ord_q[x * m + y];
      ++divides.checked;
      if (std::gcd(ord_b[x], ord_b[y]) % oq != 0) fail(divides, {E(x), E(y)});
      if (base[x] != 0 && base[y] != 0) {
        if (base[x] != base[y]) {
          ++coprime.checked;
          if (Q(x, y) != g.identity()) fail(coprime, {E(x), E(y)});
        } else {
          ++pbound.checked;
          if (oq > std::max(ord_b[x], ord_b[y])) fail(pbound, {E(x), E(y)});
        }
      }
    }
  return {biadd, divides, coprime, pbound};
}

PropertyResult lift_independence(const CentralData& data) {
  const GroupTable& g = *data.g;
  PropertyResult r{"lift_independence", true, {}, 0};
  const std::size_t m = data.gamma_b().order();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const Elem ref = g.commutator(data.lifts[a].front(), data.lifts[b].front());
      for (Elem la : data.lifts[a])
        for (Elem lb : data.lifts[b]) {
          ++r.checked;
          if (g.commutator(la, lb) != ref && r.pass) {
            r.pass = false;
            r.counterexample = {static_cast<Elem>(a), static_cast<Elem>(b)};
          }
        }
    }
  return r;
}

std::size_t commutator_order_dc(const CentralData& data) {
  return commutator_subgroup(*data.g).size();
}

DcReport check_dc_bound(const CentralData& data) {
  const GroupTable& g = *data.g;
  const GroupTable& b = data.gamma_b();
  if (abelian_invariants(b, SubgroupMask::whole(b)).factors.size() > 2)
    throw Error(Errc::hypothesis_violation, "quotient is not 2-generated");
  const SubgroupMask gc = commutator_subgroup(g);
  if (!gc.bits().is_subset_of(center(g).bits()) || !is_cyclic(g, gc))
    throw Error(Errc::hypothesis_violation, "commutator subgroup is not cyclic and central");

  DcReport r;
  r.d_c = gc.size();
  r.gamma_b_order = b.order();
  r.bound_holds = r.d_c * r.d_c <= r.gamma_b_order;
  r.tight = r.d_c * r.d_c == r.gamma_b_order;
  for (std::size_t x = 0; x < b.order() && !r.single_q_generates; ++x)
    for (std::size_t y = 0; y < b.order(); ++y) {
      const Elem q = q_pair(data, static_cast<Elem>(x), static_cast<Elem>(y));
      if (element_order(g, q) == r.d_c) {
        r.single_q_generates = true;
        r.gen_a = static_cast<Elem>(x);
        r.gen_b = static_cast<Elem>(y);
        break;
      }
    }
  return r;
}

Pullback abelian_pullback(const CentralData& data) {
  const GroupTable& g = *data.g;
  const GroupTable& b = data.gamma_b();
  const auto inv = abelian_invariants(b, SubgroupMask::whole(b));
  if (inv.factors.size() > 2)
    throw Error(Errc::hypothesis_violation, "quotient is not 2-generated");
  Pullback r;
  r.invariants = inv.factors;
  if (inv.generators.empty()) {
    r.gamma_cyc = SubgroupMask::identity_only(b);
  } else {
    const Elem gen[] = {inv.generators.front()};
    r.gamma_cyc = closure(b, gen);
  }
  r.index = b.order() / r.gamma_cyc.size();
  Bitset pre(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (r.gamma_cyc.contains(data.eta()(static_cast<Elem>(x)))) pre.set(x);
  r.abelian = is_abelian_subset(g, pre);
  if (!r.abelian)
    throw Error(Errc::hypothesis_violation, "preimage of the cyclic factor is not abelian");
  r.gamma_ab = SubgroupMask::checked(g, std::move(pre));
  return r;
}

}  // namespace jordan::qpair
