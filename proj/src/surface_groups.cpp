#include "jordan/surface_groups.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "jordan/automorphisms.hpp"
#include "jordan/errors.hpp"

namespace jordan::surface {

using Family = RotationGroupKind::Family;

RotationGroupKind RotationGroupKind::cyclic(int n) {
  if (n < 1) throw Error(Errc::invalid_argument, "cyclic kind needs n >= 1");
  return {Family::cyclic, n};
}

RotationGroupKind RotationGroupKind::dihedral(int n) {
  if (n < 3) throw Error(Errc::invalid_argument, "dihedral kind needs n >= 3");
  return {Family::dihedral, n};
}

RotationGroupKind RotationGroupKind::parse(std::string_view text) {
  if (text == "tetra") return tetra();
  if (text == "octa") return octa();
  if (text == "icosa") return icosa();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const auto name = text.substr(0, colon);
    const auto num = text.substr(colon + 1);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec == std::errc{} && ptr == num.data() + num.size()) {
      if (name == "cyclic" && n >= 1) return cyclic(n);
      if (name == "dihedral" && n >= 3) return dihedral(n);
    }
  }
  throw Error(Errc::parse_error, "unknown rotation group kind '" + std::string(text) + "'");
}

std::string RotationGroupKind::to_string() const {
  switch (family) {
    case Family::cyclic: return "cyclic:" + std::to_string(n);
    case Family::dihedral: return "dihedral:" + std::to_string(n);
    case Family::tetra: return "tetra";
    case Family::octa: return "octa";
    case Family::icosa: return "icosa";
  }
  return "?";
}

std::size_t RotationGroupKind::expected_order() const noexcept {
  switch (family) {
    case Family::cyclic: return static_cast<std::size_t>(n);
    case Family::dihedral: return 2 * static_cast<std::size_t>(n);
    case Family::tetra: return 12;
    case Family::octa: return 24;
    case Family::icosa: return 60;
  }
  return 0;
}

BuiltGroup<Permutation> rotation_group(const RotationGroupKind& kind, std::size_t cap) {
  std::vector<Permutation> gens;
  std::size_t degree = 0;
  switch (kind.family) {
    case Family::cyclic:
    case Family::dihedral: {
      degree = static_cast<std::size_t>(kind.n);
      std::vector<std::uint16_t> rot(degree);
      for (std::size_t i = 0; i < degree; ++i)
        rot[i] = static_cast<std::uint16_t>((i + 1) % degree);
      gens.emplace_back(rot);
      if (kind.family == Family::dihedral) {
        std::vector<std::uint16_t> refl(degree);
        for (std::size_t i = 0; i < degree; ++i)
          refl[i] = static_cast<std::uint16_t>((degree - i) % degree);
        gens.emplace_back(refl);
      }
      break;
    }
    case Family::tetra:
      degree = 4;
      gens = {Permutation::from_cycles(4, {{1, 2, 3}}),
              Permutation::from_cycles(4, {{1, 2}, {3, 4}})};
      break;
    case Family::octa:
      degree = 4;
      gens = {Permutation::from_cycles(4, {{1, 2, 3, 4}}), Permutation::from_cycles(4, {{1, 2}})};
      break;
    case Family::icosa:
      degree = 5;
      gens = {Permutation::from_cycles(5, {{1, 2, 3, 4, 5}}),
              Permutation::from_cycles(5, {{1, 2, 3}})};
      break;
  }
  if (kind.expected_order() > cap)
    throw Error(Errc::cap_exceeded, kind.to_string() + " exceeds cap " + std::to_string(cap));
  return build_from_generators<Permutation>(Permutation(degree), gens, cap,
                                            [](const Permutation& p) { return p.to_string(); });
}

namespace {

std::optional<Elem> first_of_order(const GroupTable& g, std::size_t k) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (element_order(g, static_cast<Elem>(x)) == k) return static_cast<Elem>(x);
  return std::nullopt;
}

std::optional<Elem> find_inverting(const GroupTable& g, const SubgroupMask& h) {
  const auto members = h.elements();
  for (std::size_t c = 0; c < g.order(); ++c) {
    const auto cand = static_cast<Elem>(c);
    if (h.contains(cand)) continue;
    const bool inverts = std::all_of(members.begin(), members.end(),
                                     [&](Elem x) { return g.conj(cand, x) == g.inv(x); });
    if (inverts) return cand;
  }
  return std::nullopt;
}

}  // namespace

EsferaWitness esfera_witness(const GroupTable& g, const RotationGroupKind& kind) {
  if (g.order() != kind.expected_order())
    throw Error(Errc::invalid_argument, "table order does not match " + kind.to_string());
  EsferaWitness w;
  const auto cyclic_of_order = [&](std::size_t k) {
    const auto x = first_of_order(g, k);
    if (!x) throw Error(Errc::invalid_argument, "no element of order " + std::to_string(k));
    const Elem seed[] = {*x};
    return closure(g, seed);
  };
  switch (kind.family) {
    case Family::cyclic:
      w.h_prime = SubgroupMask::whole(g);
      break;
    case Family::dihedral: {
      std::vector<Elem> big;
      for (std::size_t x = 0; x < g.order(); ++x)
        if (element_order(g, static_cast<Elem>(x)) > 2) big.push_back(static_cast<Elem>(x));
      w.h_prime = closure(g, big);
      break;
    }
    case Family::tetra: w.h_prime = cyclic_of_order(2); break;
    case Family::octa: w.h_prime = cyclic_of_order(4); break;
    case Family::icosa: w.h_prime = cyclic_of_order(5); break;
  }
  w.h_prime_order = w.h_prime.size();
  w.sigma_count = sigma_orbit(g, w.h_prime).size();
  w.inverting_element = find_inverting(g, w.h_prime);
  return w;
}

namespace {

// p if n = p^k with k >= 1, else 0.
std::size_t prime_base(std::size_t n) {
  if (n < 2) return 0;
  std::size_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? p : 0;
}

}  // namespace

bool p_group_on_sphere_is_cyclic(std::size_t p, const GroupTable& g, const SubgroupMask& h) {
  if (p <= 2 || !is_prime(p)) throw Error(Errc::invalid_argument, "p must be an odd prime");
  if (h.size() != 1 && prime_base(h.size()) != p)
    throw Error(Errc::invalid_argument, "not a " + std::to_string(p) + "-group");
  return is_cyclic(g, h);
}

bool p_group_on_sphere_is_cyclic(std::size_t p, const GroupTable& g) {
  return p_group_on_sphere_is_cyclic(p, g, SubgroupMask::whole(g));
}

std::optional<SubgroupMask> find_noncyclic_odd_p_subgroup(const GroupTable& g) {
  std::vector<std::size_t> base(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    base[x] = prime_base(element_order(g, static_cast<Elem>(x)));
  for (std::size_t a = 1; a < g.order(); ++a) {
    if (base[a] < 3) continue;
    for (std::size_t b = a + 1; b < g.order(); ++b) {
      if (base[b] != base[a]) continue;
      const Elem pair[] = {static_cast<Elem>(a), static_cast<Elem>(b)};
      const SubgroupMask h = closure(g, pair);
      if (prime_base(h.size()) == base[a] && !is_cyclic(g, h)) return h;
    }
  }
  return std::nullopt;
}

std::vector<int> torus_point_orders(int entry_bound) {
  if (entry_bound < 1) throw Error(Errc::invalid_argument, "entry bound must be >= 1");
  const long long b = entry_bound;
  std::set<int> orders;
  const heis::SL2Matrix id{};
  for (long long a = -b; a <= b; ++a)
    for (long long bb = -b; bb <= b; ++bb)
      for (long long c = -b; c <= b; ++c)
        for (long long d = -b; d <= b; ++d) {
          if (a * d - bb * c != 1) continue;
          const heis::SL2Matrix m{a, bb, c, d};
          const long long tr = a + d;
          const bool plus_minus_id = bb == 0 && c == 0 && (a == d) && (a == 1 || a == -1);
          if (!plus_minus_id && (tr > 1 || tr < -1)) continue;
          heis::SL2Matrix p = m;
          int k = 1;
          while (!(p == id)) {
            p = p * m;
            if (++k > 12) throw Error(Errc::invalid_table, "elliptic matrix without finite order");
          }
          orders.insert(k);
        }
  return {orders.begin(), orders.end()};
}

TorIndexReport tor_index_bound_check(const GroupTable& g,
                                     const std::vector<heis::TorusAffine>& action) {
  if (action.size() != g.order())
    throw Error(Errc::invalid_argument, "action must list one map per element");
  TorIndexReport r;
  Bitset bits(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    if (action[i].is_translation()) bits.set(i);
  r.translations = SubgroupMask::checked(g, std::move(bits));
  r.index = g.order() / r.translations.size();
  if (r.index > 6)
    throw Error(Errc::index_exceeds_six,
                "translation subgroup has index " + std::to_string(r.index));
  r.abelian = is_abelian_subset(g, r.translations.bits());
  if (r.abelian) {
    r.invariants = abelian_invariants(g, r.translations).factors;
    r.two_generated = r.invariants.size() <= 2;
  }
  r.acts_freely = true;
  const int n = action.empty() ? 1 : action.front().n;
  r.translations.bits().for_each([&](std::size_t i) {
    if (i == g.identity()) return;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (action[i].apply(u, v) == std::pair{u, v}) r.acts_freely = false;
  });
  return r;
}

}  // namespace jordan::surface
