#include "jordan/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "jordan/errors.hpp"

namespace jordan {

SubgroupMask SubgroupMask::checked(const GroupTable& g, Bitset bits) {
  if (bits.size() != g.order() || !is_subgroup(g, bits))
    throw Error(Errc::invalid_argument, "bit set is not a subgroup");
  return SubgroupMask(std::move(bits));
}

SubgroupMask SubgroupMask::identity_only(const GroupTable& g) {
  Bitset b(g.order());
  b.set(g.identity());
  return SubgroupMask(std::move(b));
}

std::vector<Elem> SubgroupMask::elements() const {
  std::vector<Elem> out;
  out.reserve(size());
  bits_.for_each([&](std::size_t i) { out.push_back(static_cast<Elem>(i)); });
  return out;
}

bool is_subgroup(const GroupTable& g, const Bitset& bits) {
  if (bits.size() != g.order() || !bits.test(g.identity())) return false;
  const auto members = bits.to_indices();
  for (auto a : members) {
    if (!bits.test(g.inv(static_cast<Elem>(a)))) return false;
    for (auto b : members)
      if (!bits.test(g.mul(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
  }
  return true;
}

bool is_abelian_subset(const GroupTable& g, const Bitset& bits) {
  const auto members = bits.to_indices();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (!g.commute(static_cast<Elem>(members[i]), static_cast<Elem>(members[j]))) return false;
  return true;
}

namespace {

// Closes `bits` (already containing a subgroup or just the identity) under
// right multiplication by `gens`. `queue` holds members not yet expanded.
void close_into(const GroupTable& g, Bitset& bits, std::vector<Elem>& queue,
                std::span<const Elem> gens) {
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Elem m = queue[i];
    for (Elem s : gens) {
      const Elem p = g.mul(m, s);
      if (!bits.test(p)) {
        bits.set(p);
        queue.push_back(p);
      }
    }
  }
}

}  // namespace

SubgroupMask closure(const GroupTable& g, std::span<const Elem> seed) {
  Bitset bits(g.order());
  bits.set(g.identity());
  std::vector<Elem> queue{g.identity()};
  close_into(g, bits, queue, seed);
  return SubgroupMask::trusted(std::move(bits));
}

SubgroupMask join(const GroupTable& g, const SubgroupMask& base, std::span<const Elem> extra) {
  std::vector<Elem> gens = generating_set(g, base);
  gens.insert(gens.end(), extra.begin(), extra.end());
  return closure(g, gens);
}

std::vector<Elem> generating_set(const GroupTable& g, const SubgroupMask& h) {
  std::vector<Elem> gens;
  Bitset bits(g.order());
  bits.set(g.identity());
  std::vector<Elem> queue{g.identity()};
  h.bits().for_each([&](std::size_t i) {
    const auto x = static_cast<Elem>(i);
    if (bits.test(x)) return;
    gens.push_back(x);
    // Re-close from every member: the new generator multiplies old members too.
    queue.assign(1, g.identity());
    bits = Bitset(g.order());
    bits.set(g.identity());
    close_into(g, bits, queue, gens);
  });
  return gens;
}

std::vector<Elem> generating_set(const GroupTable& g) {
  return generating_set(g, SubgroupMask::whole(g));
}

SubgroupMask centralizer(const GroupTable& g, std::span<const Elem> s) {
  Bitset bits(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Elem>(x);
    bool ok = true;
    for (Elem t : s)
      if (!g.commute(e, t)) {
        ok = false;
        break;
      }
    if (ok) bits.set(x);
  }
  return SubgroupMask::trusted(std::move(bits));
}

SubgroupMask centralizer(const GroupTable& g, const SubgroupMask& s) {
  return centralizer(g, generating_set(g, s));
}

SubgroupMask center(const GroupTable& g) { return centralizer(g, generating_set(g)); }

SubgroupMask normalizer(const GroupTable& g, const SubgroupMask& s) {
  const auto gens = generating_set(g, s);
  Bitset bits(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    const auto e = static_cast<Elem>(x);
    bool ok = true;
    for (Elem t : gens)
      if (!s.contains(g.conj(e, t))) {
        ok = false;
        break;
      }
    if (ok) bits.set(x);
  }
  return SubgroupMask::trusted(std::move(bits));
}

SubgroupMask normal_closure(const GroupTable& g, std::span<const Elem> seed) {
  const auto ggens = generating_set(g);
  SubgroupMask h = closure(g, seed);
  while (true) {
    std::vector<Elem> missing;
    for (Elem t : generating_set(g, h))
      for (Elem x : ggens) {
        const Elem c = g.conj(x, t);
        if (!h.contains(c)) missing.push_back(c);
      }
    if (missing.empty()) return h;
    h = join(g, h, missing);
  }
}

SubgroupMask commutator_subgroup(const GroupTable& g) {
  const auto gens = generating_set(g);
  std::vector<Elem> seed;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seed.push_back(g.commutator(gens[i], gens[j]));
  return normal_closure(g, seed);
}

bool is_normal(const GroupTable& g, const SubgroupMask& s) {
  const auto ggens = generating_set(g);
  for (Elem t : generating_set(g, s))
    for (Elem x : ggens)
      if (!s.contains(g.conj(x, t))) return false;
  return true;
}

Quotient quotient_by_normal(const GroupTable& g, const SubgroupMask& s) {
  if (s.bits().size() != g.order()) throw Error(Errc::invalid_argument, "mask width mismatch");
  if (!is_normal(g, s)) throw Error(Errc::not_normal, "subgroup is not normal");
  const std::size_t n = g.order();
  constexpr auto kUnset = static_cast<Elem>(kMaxOrder);
  std::vector<Elem> coset(n, kUnset);
  std::vector<Elem> reps;
  const auto members = s.elements();
  for (std::size_t x = 0; x < n; ++x) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem m : members) coset[g.mul(static_cast<Elem>(x), m)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> mul(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) mul[a * q + b] = coset[g.mul(reps[a], reps[b])];
  return Quotient{GroupTable::from_rows(q, std::move(mul)), Homomorphism{std::move(coset)},
                  std::move(reps)};
}

SubgroupMask kernel(const GroupTable& src, const Homomorphism& f) {
  Bitset bits(src.order());
  for (std::size_t x = 0; x < src.order(); ++x)
    if (f.map[x] == 0) bits.set(x);
  return SubgroupMask::trusted(std::move(bits));
}

Bitset image(const GroupTable& src, const GroupTable& tgt, const Homomorphism& f) {
  Bitset bits(tgt.order());
  for (std::size_t x = 0; x < src.order(); ++x) bits.set(f.map[x]);
  return bits;
}

std::size_t element_order(const GroupTable& g, Elem x) {
  std::size_t k = 1;
  Elem y = x;
  while (y != g.identity()) {
    y = g.mul(y, x);
    ++k;
  }
  return k;
}

std::size_t exponent(const GroupTable& g) {
  std::size_t e = 1;
  for (std::size_t x = 0; x < g.order(); ++x)
    e = std::lcm(e, element_order(g, static_cast<Elem>(x)));
  return e;
}

bool is_prime(std::size_t p) noexcept {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

SubgroupMask sylow(const GroupTable& g, std::size_t p) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
  if (g.order() % p != 0)
    throw Error(Errc::prime_does_not_divide,
                std::to_string(p) + " does not divide " + std::to_string(g.order()));
  std::size_t target = 1;
  for (std::size_t m = g.order(); m % p == 0; m /= p) target *= p;

  // While P is not Sylow, p divides [N(P):P], so some x in N(P)\P has x^p in P
  // and <P, x> has order p|P|.
  SubgroupMask P = SubgroupMask::identity_only(g);
  while (P.size() < target) {
    const SubgroupMask N = normalizer(g, P);
    Elem found = g.identity();
    N.bits().for_each([&](std::size_t i) {
      const auto x = static_cast<Elem>(i);
      if (found != g.identity() || P.contains(x)) return;
      if (P.contains(g.pow(x, static_cast<long long>(p)))) found = x;
    });
    if (found == g.identity()) throw Error(Errc::invalid_table, "Sylow growth stalled");
    const Elem extra[] = {found};
    P = join(g, P, extra);
  }
  return P;
}

std::vector<std::size_t> conjugacy_class_ids(const GroupTable& g) {
  const auto gens = generating_set(g);
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ids(g.order(), kUnset);
  std::size_t next = 0;
  std::vector<Elem> orbit;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (ids[x] != kUnset) continue;
    ids[x] = next;
    orbit.assign(1, static_cast<Elem>(x));
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Elem s : gens) {
        const Elem c = g.conj(s, orbit[i]);
        if (ids[c] == kUnset) {
          ids[c] = next;
          orbit.push_back(c);
        }
      }
    ++next;
  }
  return ids;
}

AbelianInvariants abelian_invariants(const GroupTable& g, const SubgroupMask& h) {
  if (!is_abelian_subset(g, h.bits()))
    throw Error(Errc::invalid_argument, "invariant factors need an abelian subgroup");
  AbelianInvariants out;
  SubgroupMask k = SubgroupMask::identity_only(g);
  const auto members = h.elements();
  while (k.size() < h.size()) {
    std::size_t best = 0;
    Elem best_x = g.identity();
    for (Elem x : members) {
      std::size_t ord = 1;
      for (Elem y = x; !k.contains(y); y = g.mul(y, x)) ++ord;
      if (ord > best) {
        best = ord;
        best_x = x;
      }
    }
    out.factors.push_back(best);
    out.generators.push_back(best_x);
    const Elem extra[] = {best_x};
    k = join(g, k, extra);
  }
  return out;
}

bool is_cyclic(const GroupTable& g, const SubgroupMask& h) {
  const std::size_t n = h.size();
  bool found = false;
  h.bits().for_each([&](std::size_t i) {
    if (!found && element_order(g, static_cast<Elem>(i)) == n) found = true;
  });
  return found;
}

}  // namespace jordan
