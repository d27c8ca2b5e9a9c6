#include "jordan/automorphisms.hpp"

#include <algorithm>
#include <string>

#include "jordan/errors.hpp"

namespace jordan {

bool is_automorphism(const GroupTable& g, const AutMap& phi) {
  const std::size_t n = g.order();
  if (phi.perm.size() != n || phi.perm[0] != 0) return false;
  std::vector<bool> hit(n, false);
  for (Elem v : phi.perm) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return is_homomorphism(g, g, phi.perm);
}

std::vector<Elem> small_generating_set(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  for (std::size_t a = 1; a < n; ++a)
    if (element_order(g, static_cast<Elem>(a)) == n) return {static_cast<Elem>(a)};
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Elem pair[] = {static_cast<Elem>(a), static_cast<Elem>(b)};
      if (closure(g, pair).size() == n) return {pair[0], pair[1]};
    }
  return generating_set(g);
}

namespace {

// Schreier tree of `gens`: every element is parent * gens[via].
struct Tree {
  std::vector<Elem> order;  // BFS order from the identity
  std::vector<Elem> parent;
  std::vector<std::size_t> via;
};

Tree spanning_tree(const GroupTable& g, std::span<const Elem> gens) {
  const std::size_t n = g.order();
  Tree t{{0}, std::vector<Elem>(n, 0), std::vector<std::size_t>(n, 0)};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < t.order.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem p = g.mul(t.order[i], gens[j]);
      if (!seen[p]) {
        seen[p] = true;
        t.parent[p] = t.order[i];
        t.via[p] = j;
        t.order.push_back(p);
      }
    }
  if (t.order.size() != n) throw Error(Errc::invalid_argument, "hint does not generate the group");
  return t;
}

}  // namespace

std::vector<AutMap> automorphisms(const GroupTable& g,
                                  std::optional<std::span<const Elem>> gen_hint,
                                  std::size_t cap) {
  const std::size_t n = g.order();
  if (n > cap)
    throw Error(Errc::cap_exceeded,
                "automorphism enumeration capped at order " + std::to_string(cap));
  const std::vector<Elem> gens =
      gen_hint ? std::vector<Elem>(gen_hint->begin(), gen_hint->end()) : small_generating_set(g);
  if (gens.empty()) return {AutMap{{0}}};
  const Tree tree = spanning_tree(g, gens);

  std::vector<std::size_t> ord(n);
  for (std::size_t x = 0; x < n; ++x) ord[x] = element_order(g, static_cast<Elem>(x));
  std::vector<std::vector<Elem>> options(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t x = 0; x < n; ++x)
      if (ord[x] == ord[gens[j]]) options[j].push_back(static_cast<Elem>(x));

  std::vector<AutMap> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  std::vector<Elem> img(gens.size());
  std::vector<Elem> perm(n);
  std::vector<bool> hit(n);
  while (true) {
    for (std::size_t j = 0; j < gens.size(); ++j) img[j] = options[j][pick[j]];

    // Extend along the tree, then require phi(e s) = phi(e) phi(s) on every
    // edge of the Cayley graph; by induction on word length this gives a
    // homomorphism.
    perm[0] = 0;
    for (std::size_t i = 1; i < n; ++i) {
      const Elem e = tree.order[i];
      perm[e] = g.mul(perm[tree.parent[e]], img[tree.via[e]]);
    }
    bool ok = true;
    std::fill(hit.begin(), hit.end(), false);
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (hit[perm[x]]) ok = false;
      hit[perm[x]] = true;
    }
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t j = 0; j < gens.size() && ok; ++j)
        if (perm[g.mul(static_cast<Elem>(x), gens[j])] != g.mul(perm[x], img[j])) ok = false;
    if (ok) out.push_back(AutMap{perm});

    std::size_t j = 0;
    while (j < gens.size() && ++pick[j] == options[j].size()) pick[j++] = 0;
    if (j == gens.size()) break;
  }
  return out;
}

std::set<SubgroupMask> sigma_orbit(const GroupTable& g, const SubgroupMask& h_prime,
                                   std::size_t cap) {
  std::set<SubgroupMask> orbit;
  const auto members = h_prime.elements();
  for (const auto& phi : automorphisms(g, std::nullopt, cap)) {
    Bitset b(g.order());
    for (Elem e : members) b.set(phi(e));
    orbit.insert(SubgroupMask::trusted(std::move(b)));
  }
  return orbit;
}

}  // namespace jordan
