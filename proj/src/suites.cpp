#include "jordan/suites.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <random>
#include <set>

#include "jordan/abelian_search.hpp"
#include "jordan/errors.hpp"
#include "jordan/heisenberg.hpp"
#include "jordan/jordan_bounds.hpp"
#include "jordan/qpairing.hpp"
#include "jordan/subgroup.hpp"
#include "jordan/surface_groups.hpp"

namespace jordan::suites {

using nlohmann::json;

namespace {

class Stopwatch {
 public:
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json labels_of(const GroupTable& g, const std::vector<Elem>& elems) {
  json out = json::array();
  for (Elem e : elems) out.push_back(g.label(e));
  return out;
}

// Adds the search claim; a timeout fails the claim and marks the report.
void search_claim(VerificationReport& r, const AbelianIndexResult& res, std::string name,
                  std::string ref, std::string basis, json expected, bool pass) {
  json computed = {{"index", res.index},
                   {"status", res.status == SearchStatus::exact ? "exact" : "timeout"},
                   {"nodes", res.nodes}};
  if (res.status == SearchStatus::timeout) r.timed_out = true;
  r.check(std::move(name), std::move(ref), std::move(basis), std::move(expected),
          std::move(computed), pass && res.status == SearchStatus::exact);
}

heis::IntHeisElem random_int_heis(std::mt19937_64& rng, bool integral) {
  std::uniform_int_distribution<long long> xy(-50, 50);
  std::uniform_int_distribution<long long> z(-100, 100);
  heis::IntHeisElem e{xy(rng), xy(rng), z(rng)};
  if (integral) e.z2 = 2 * (e.z2 / 2);
  return e;
}

std::vector<heis::SL2Matrix> sl2_with_bound(long long b) {
  std::vector<heis::SL2Matrix> out;
  for (long long a = -b; a <= b; ++a)
    for (long long bb = -b; bb <= b; ++bb)
      for (long long c = -b; c <= b; ++c)
        for (long long d = -b; d <= b; ++d)
          if (a * d - bb * c == 1) out.push_back({a, bb, c, d});
  return out;
}

}  // namespace

VerificationReport gamma_report(int n, const SuiteOptions& opts) {
  Stopwatch sw;
  VerificationReport r;
  r.command = "gamma";
  r.inputs = {{"n", std::to_string(n)}, {"cap", std::to_string(opts.cap)}};
  const auto g = heis::gamma_n(n, opts.cap);
  const auto& t = g.table;
  const std::size_t nn = static_cast<std::size_t>(n);

  r.check("order", "|Gamma_n| = n^3", "definition", nn * nn * nn, t.order(),
          t.order() == nn * nn * nn);
  const auto z = center(t);
  r.check("center_order", "the center of Gamma_n is {A(0,0,z)}, of order n", "lemma", nn,
          z.size(), z.size() == nn);
  const auto c = commutator_subgroup(t);
  r.check("commutator_is_center", "[Gamma_n, Gamma_n] equals the center", "brute-force", true,
          c == z, c == z);
  r.info("exponent", "exponent of Gamma_n", exponent(t));

  const auto res = min_abelian_index(t, SearchOptions{opts.budget});
  search_claim(r, res, "min_abelian_index",
               "every abelian subgroup A of Gamma_n has [Gamma_n : A] >= n, with equality for "
               "{A(x,0,z)}",
               "lemma", nn, res.index == nn);
  r.info("witness_generators", "generators of an abelian subgroup of minimal index",
         labels_of(t, generating_set(t, res.witness)));
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport hat_gamma_report(int n, const SuiteOptions& opts) {
  Stopwatch sw;
  VerificationReport r;
  r.command = "hat-gamma";
  r.inputs = {{"n", std::to_string(n)}, {"cap", std::to_string(opts.cap)}};
  const auto hat = heis::hat_gamma_n(n, opts.cap);
  const auto& t = hat.group.table;
  const std::size_t nn = static_cast<std::size_t>(n);

  r.add(Claim{"order", "order of the closure of Gamma_n and h (6n^3 if Gamma_n had index 6)",
              "info", nn * nn * nn * 6, t.order(), std::nullopt});
  r.check("theta_surjective", "the projection (g,k) -> k onto Z_6 is surjective", "lemma", true,
          hat.theta_surjective, hat.theta_surjective);
  r.info("theta_kernel_order", "order of the kernel of the projection to Z_6",
         hat.theta_kernel_order);
  r.info("gamma_image_index", "index of the image of Gamma_n", hat.gamma_index);
  r.info("gamma_image_normal", "whether the image of Gamma_n is normal", hat.gamma_image_normal);

  // (e,1)(g,0)(e,1)^-1 = (h(g),0) on the image of Gamma_n.
  const Elem rot = hat.group.index_of(heis::HatElem{heis::HeisElem::identity(n), 1});
  bool conj_ok = true;
  hat.gamma_image.bits().for_each([&](std::size_t i) {
    const auto& x = hat.group.elements[i];
    const heis::HatElem want{heis::h_auto(x.g), 0};
    if (t.conj(rot, static_cast<Elem>(i)) != hat.group.index_of(want)) conj_ok = false;
  });
  r.check("conjugation_is_h", "conjugating (g,0) by (e,1) gives (h(g),0)", "definition", true,
          conj_ok, conj_ok);

  const auto res = min_abelian_index(t, SearchOptions{opts.budget});
  const std::size_t bound = 6 * nn;
  const std::string ref = "every abelian subgroup A of hat Gamma_n has index >= 6n (n >= 8)";
  if (n >= 8) {
    search_claim(r, res, "min_abelian_index", ref, "lemma", json{{">=", bound}},
                 res.index >= bound);
  } else {
    if (res.status == SearchStatus::timeout) r.timed_out = true;
    r.add(Claim{"min_abelian_index", ref + "; informational below n = 8", "info",
                json{{">=", bound}}, json{{"index", res.index}, {"nodes", res.nodes}},
                std::nullopt});
  }
  r.info("witness_generators", "generators of an abelian subgroup of minimal index",
         labels_of(t, generating_set(t, res.witness)));
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport bound_report(const Rational& alpha, const Rational& beta,
                                std::optional<long long> p) {
  Stopwatch sw;
  VerificationReport r;
  r.command = "bound";
  r.inputs = {{"alpha", to_string(alpha)}, {"beta", to_string(beta)}};
  if (p) r.inputs["p"] = std::to_string(*p);
  const auto shape = bounds::SymplecticShape::make(alpha, beta);
  const long long lambda = bounds::lambda_of(shape);
  const long long bound = bounds::jordan_bound(shape);
  const auto degrees = bounds::admissible_fixed_surface_degrees(shape);

  r.info("lambda", "largest even integer strictly below |2 alpha / beta|, else 1", lambda);
  r.check("lambda_even_or_one", "lambda is 1 or even", "definition", true,
          lambda == 1 || lambda % 2 == 0, lambda == 1 || lambda % 2 == 0);
  r.check("jordan_bound", "[G : A] <= max(144, 6 lambda) for some abelian A", "lemma",
          std::max(144LL, 6 * lambda), bound, bound == std::max(144LL, 6 * lambda));
  const bool symmetric = std::equal(degrees.begin(), degrees.end(), degrees.rbegin(),
                                    [](long long a, long long b) { return a == -b; });
  const bool has_zero = std::find(degrees.begin(), degrees.end(), 0) != degrees.end();
  r.add(Claim{"degrees", "even d with |d| < |2 alpha / beta|", "definition",
              json{{"symmetric", true}, {"contains_zero", true}}, degrees,
              symmetric && has_zero});
  if (p) {
    const auto adm = bounds::nonabelian_p_admissible(shape, *p);
    r.check("p_admissible",
            "a nonabelian p-group acts (p > 3) if and only if 2p <= lambda", "lemma",
            2 * *p <= lambda, adm.admissible, adm.admissible == (2 * *p <= lambda));
    if (adm.admissible) r.info("p_witness", "witness group", adm.witness);
  }
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_q(const SuiteOptions& opts) {
  Stopwatch sw;
  VerificationReport r;
  r.command = "verify";
  r.inputs = {{"suite", "q"}, {"max-n", std::to_string(opts.max_n)}};

  for (int n = 2; n <= opts.max_n; ++n) {
    const std::string tag = "gamma" + std::to_string(n) + ".";
    const std::size_t nn = static_cast<std::size_t>(n);
    auto built = heis::gamma_n(n, opts.cap);
    auto g = std::make_shared<const GroupTable>(built.table);
    const auto data = qpair::central_data_from(g, center(*g));
    const auto inv = abelian_invariants(data.gamma_b(), SubgroupMask::whole(data.gamma_b()));
    r.check(tag + "quotient", "Gamma_n / center = Z_n x Z_n", "lemma",
            std::vector<std::size_t>{nn, nn}, inv.factors,
            inv.factors == std::vector<std::size_t>{nn, nn});

    for (const auto& p : qpair::verify_q_properties(data))
      r.check(tag + p.property, "Q is biadditive, alternating, with order bounds", "lemma", true,
              qpair::to_json(p), p.pass);
    if (g->order() <= 1000) {
      const auto li = qpair::lift_independence(data);
      r.check(tag + "lift_independence", "[alpha, beta] depends only on eta(alpha), eta(beta)",
              "brute-force", true, qpair::to_json(li), li.pass);
    }

    // Q((1,0),(0,1)) = A(0,0,1).
    const auto coset_of = [&](int x, int y) {
      return data.eta()(built.index_of(heis::HeisElem::make(n, x, y, 0)));
    };
    const Elem q = qpair::q_pair(data, coset_of(1, 0), coset_of(0, 1));
    const Elem want = built.index_of(heis::HeisElem::make(n, 0, 0, 2));
    r.check(tag + "q_generator", "Q((1,0),(0,1)) = A(0,0,1)", "definition", g->label(want),
            g->label(q), q == want);

    std::vector<Elem> qs;
    for (std::size_t a = 0; a < data.gamma_b().order(); ++a)
      for (std::size_t b = 0; b < data.gamma_b().order(); ++b)
        qs.push_back(qpair::q_pair(data, static_cast<Elem>(a), static_cast<Elem>(b)));
    const bool gen_comm = closure(*g, qs) == commutator_subgroup(*g);
    r.check(tag + "q_image_generates_commutator", "the values of Q generate [G, G]",
            "brute-force", true, gen_comm, gen_comm);

    const auto dc = qpair::check_dc_bound(data);
    r.check(tag + "dc_bound", "d_c^2 <= |Gamma_B|, with equality on Gamma_n", "lemma",
            json{{"d_c", nn}, {"gamma_b", nn * nn}, {"tight", true}},
            json{{"d_c", dc.d_c}, {"gamma_b", dc.gamma_b_order}, {"tight", dc.tight}},
            dc.bound_holds && dc.tight && dc.d_c == nn);
    r.check(tag + "single_q_generates", "[G, G] is generated by a single Q(a, b)", "lemma", true,
            dc.single_q_generates, dc.single_q_generates);

    const auto pb = qpair::abelian_pullback(data);
    const auto res = min_abelian_index(*g, SearchOptions{opts.budget});
    search_claim(r, res, tag + "pullback_meets_min_index",
                 "eta^-1(cyclic factor) is abelian of index min(n1, n2) = min abelian index",
                 "brute-force", json{{"index", nn}, {"abelian", true}},
                 pb.abelian && pb.index == nn && res.index == pb.index &&
                     pb.gamma_ab.size() == nn * nn);
  }

  {
    // Mixed primes in Gamma_6: a 2-element and a 3-element commute up to 1.
    auto g = std::make_shared<const GroupTable>(heis::gamma_n(6, opts.cap).table);
    const auto data = qpair::central_data_from(g, center(*g));
    const auto& b = data.gamma_b();
    std::size_t pairs = 0;
    bool ok = true;
    for (std::size_t x = 0; x < b.order(); ++x)
      for (std::size_t y = 0; y < b.order(); ++y) {
        const auto ox = element_order(b, static_cast<Elem>(x));
        const auto oy = element_order(b, static_cast<Elem>(y));
        if (!((ox == 2 && oy == 3) || (ox == 3 && oy == 2))) continue;
        ++pairs;
        ok = ok && qpair::q_pair(data, static_cast<Elem>(x), static_cast<Elem>(y)) == 0;
      }
    r.check("gamma6.mixed_prime", "Q(a, b) = 1 for a 2-element a and a 3-element b", "lemma",
            true, json{{"pairs", pairs}, {"all_trivial", ok}}, ok && pairs > 0);
  }
  {
    auto g = std::make_shared<const GroupTable>(direct_product_cyclic(4, 6));
    const auto data = qpair::central_data_from(g, SubgroupMask::identity_only(*g));
    bool ok = data.gamma_b().order() == g->order();
    for (const auto& p : qpair::verify_q_properties(data)) ok = ok && p.pass;
    const auto dc = qpair::check_dc_bound(data);
    ok = ok && dc.d_c == 1;
    r.check("abelian.trivial_q", "for abelian G with trivial G0, Q = 1 and d_c = 1",
            "definition", true, ok, ok);
  }
  {
    auto g = std::make_shared<const GroupTable>(heis::gamma_n(2, opts.cap).table);
    bool raised = false;
    try {
      qpair::central_data_from(g, SubgroupMask::identity_only(*g));
    } catch (const Error& e) {
      raised = e.code() == Errc::quotient_not_abelian;
    }
    r.check("gamma2.nonabelian_quotient_rejected", "Q needs an abelian quotient", "definition",
            "quotient_not_abelian", raised ? "quotient_not_abelian" : "accepted", raised);
  }
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_esfera(const SuiteOptions& opts) {
  Stopwatch sw;
  VerificationReport r;
  r.command = "verify";
  r.inputs = {{"suite", "esfera"}};
  using surface::RotationGroupKind;
  const std::vector<std::pair<RotationGroupKind, std::optional<std::size_t>>> cases = {
      {RotationGroupKind::cyclic(6), 1},   {RotationGroupKind::dihedral(3), 1},
      {RotationGroupKind::dihedral(4), 1}, {RotationGroupKind::dihedral(5), 1},
      {RotationGroupKind::tetra(), 3},     {RotationGroupKind::octa(), 3},
      {RotationGroupKind::icosa(), std::nullopt}};
  for (const auto& [kind, want] : cases) {
    const std::string tag = kind.to_string() + ".";
    const auto g = surface::rotation_group(kind, opts.cap);
    r.check(tag + "order", "order of the rotation group", "definition", kind.expected_order(),
            g.table.order(), g.table.order() == kind.expected_order());
    const auto w = surface::esfera_witness(g.table, kind);
    const bool cyclic = is_cyclic(g.table, w.h_prime) && w.h_prime_order > 1;
    r.check(tag + "h_prime_cyclic", "H' is a nontrivial cyclic subgroup", "lemma", true, cyclic,
            cyclic);
    if (want) {
      r.check(tag + "sigma_count", "|Sigma_H(H')| for the chosen H'", "lemma", *want,
              w.sigma_count, w.sigma_count == *want);
    } else {
      r.check(tag + "sigma_count", "|Sigma_H(H')| <= 12", "lemma", json{{"<=", 12}},
              w.sigma_count, w.sigma_count <= 12);
    }
    const bool needs_inversion = kind.family != RotationGroupKind::Family::cyclic &&
                                 kind.family != RotationGroupKind::Family::dihedral;
    json inv = w.inverting_element ? json(g.table.label(*w.inverting_element)) : json(nullptr);
    if (needs_inversion) {
      r.check(tag + "inverting_element",
              "some h outside H' conjugates every x in H' to x^-1", "lemma", true, inv,
              w.inverting_element.has_value());
    } else {
      r.info(tag + "inverting_element", "some h outside H' conjugates every x in H' to x^-1",
             inv);
    }
  }

  // Every odd p-subgroup of a finite rotation group is cyclic.
  std::vector<RotationGroupKind> family;
  for (int n = 1; n <= 60; ++n) family.push_back(RotationGroupKind::cyclic(n));
  for (int n = 3; n <= 30; ++n) family.push_back(RotationGroupKind::dihedral(n));
  family.push_back(RotationGroupKind::tetra());
  family.push_back(RotationGroupKind::octa());
  family.push_back(RotationGroupKind::icosa());
  json bad = json::array();
  for (const auto& kind : family) {
    const auto g = surface::rotation_group(kind, opts.cap);
    if (surface::find_noncyclic_odd_p_subgroup(g.table)) bad.push_back(kind.to_string());
  }
  r.check("odd_p_subgroups_cyclic", "every odd p-subgroup of a rotation group is cyclic",
          "lemma", json::array(), bad, bad.empty());

  const auto sylow_cyclic = [&](const RotationGroupKind& kind, std::size_t p) {
    const auto g = surface::rotation_group(kind, opts.cap);
    return surface::p_group_on_sphere_is_cyclic(p, g.table, sylow(g.table, p));
  };
  const bool s5 = sylow_cyclic(RotationGroupKind::icosa(), 5);
  const bool s3 = sylow_cyclic(RotationGroupKind::tetra(), 3);
  r.check("sylow_cyclic", "Sylow 5 of the icosahedral and Sylow 3 of the tetrahedral group",
          "brute-force", json{{"icosa_5", true}, {"tetra_3", true}},
          json{{"icosa_5", s5}, {"tetra_3", s3}}, s5 && s3);
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_tor(const SuiteOptions& opts) {
  Stopwatch sw;
  VerificationReport r;
  r.command = "verify";
  r.inputs = {{"suite", "tor"}, {"max-n", std::to_string(opts.max_n)}};
  const std::vector<int> expected_orders{1, 2, 3, 4, 6};
  for (int b = 1; b <= 10; ++b) {
    const auto orders = surface::torus_point_orders(b);
    r.check("point_orders.bound" + std::to_string(b),
            "finite-order elements of SL(2,Z) have order 1, 2, 3, 4 or 6", "lemma",
            expected_orders, orders, orders == expected_orders);
  }

  const int max_n = std::max(opts.max_n, 2);
  for (int n = 2; n <= max_n; ++n) {
    const std::string tag = "b" + std::to_string(n) + ".";
    const auto bg = heis::b_n_group(n, opts.cap);
    const auto& t = bg.group.table;
    const std::size_t nn = static_cast<std::size_t>(n);
    r.check(tag + "order", "|B_n| = 6n^2", "lemma", 6 * nn * nn, t.order(),
            t.order() == 6 * nn * nn);
    const Elem ci = t.inv(bg.chi);
    const Elem lhs_a = t.mul(t.mul(ci, bg.t_a), bg.chi);
    const Elem rhs_a = t.mul(bg.t_a, t.inv(bg.t_b));
    const Elem lhs_b = t.mul(t.mul(ci, bg.t_b), bg.chi);
    const bool rel = lhs_a == rhs_a && lhs_b == bg.t_a;
    r.check(tag + "chi_relations", "chi^-1 t_a chi = t_a t_b^-1 and chi^-1 t_b chi = t_a",
            "lemma", true, rel, rel);
    r.check(tag + "chi_order", "chi has order 6", "definition", 6, element_order(t, bg.chi),
            element_order(t, bg.chi) == 6);
    const bool normal = is_normal(t, bg.translations) && bg.translations.size() == nn * nn;
    const bool zeta_ok = is_homomorphism(t, bg.z6, bg.zeta.map) &&
                         kernel(t, bg.zeta) == bg.translations;
    r.check(tag + "exact_sequence", "0 -> Z_n x Z_n -> B_n -> Z_6 -> 0", "lemma", true,
            normal && zeta_ok, normal && zeta_ok);
    const auto tr = surface::tor_index_bound_check(t, bg.group.elements);
    const bool tor_ok = tr.index == 6 && tr.abelian && tr.two_generated && tr.acts_freely;
    r.check(tag + "translation_index",
            "translations form a free, abelian, 2-generated subgroup of index <= 6", "lemma",
            json{{"index", 6}}, json{{"index", tr.index}, {"invariants", tr.invariants}},
            tor_ok);
  }

  {
    const int n = 4;
    const heis::TorusAffine ta{n, {}, 1, 0}, tb{n, {}, 0, 1};
    const heis::TorusAffine minus{n, {-1, 0, 0, -1}, 0, 0};
    const heis::TorusAffine only_t[] = {ta, tb};
    const heis::TorusAffine with_m[] = {ta, tb, minus};
    const auto g1 = build_from_generators<heis::TorusAffine>(heis::TorusAffine::identity(n), only_t,
                                                             opts.cap);
    const auto g2 = build_from_generators<heis::TorusAffine>(heis::TorusAffine::identity(n), with_m,
                                                             opts.cap);
    const auto r1 = surface::tor_index_bound_check(g1.table, g1.elements);
    const auto r2 = surface::tor_index_bound_check(g2.table, g2.elements);
    r.check("translations_only.index", "pure translations have index 1", "definition", 1,
            r1.index, r1.index == 1);
    r.check("chi_cubed.index", "translations with chi^3 = -I: order 2n^2, index 2",
            "brute-force", json{{"order", 2 * n * n}, {"index", 2}},
            json{{"order", g2.table.order()}, {"index", r2.index}},
            r2.index == 2 && g2.table.order() == static_cast<std::size_t>(2 * n * n));
  }

  for (int n : {6, 8, 9, 12}) {
    for (int k : {1, 2, 3}) {
      std::vector<std::pair<int, int>> want{{0, 0}};
      if (k == 2 && n % 3 == 0) want.emplace_back(n / 3, n / 3);
      if (k == 3 && n % 2 == 0) want = {{0, 0}, {0, n / 2}, {n / 2, 0}, {n / 2, n / 2}};
      std::sort(want.begin(), want.end());
      auto got = heis::fixed_points_chi_power(n, k);
      std::sort(got.begin(), got.end());
      r.check("fixed_points.n" + std::to_string(n) + ".k" + std::to_string(k),
              "fixed points of chi^k on Z_n^2: {0} for k = 1, K_2 = {(0,0), (n/3,n/3)} for "
              "k = 2, K_3 = {0, n/2}^2 for k = 3",
              "lemma", want, got, got == want);
    }
  }

  for (int n : {2, 4, 6}) {
    const auto hat = heis::hat_gamma_n(n, opts.cap);
    const auto bg = heis::b_n_group(n, opts.cap);
    std::vector<Elem> map(hat.group.elements.size());
    for (std::size_t i = 0; i < map.size(); ++i)
      map[i] = bg.group.index_of(heis::eta_hat(hat.group.elements[i]));
    const bool hom = is_homomorphism(hat.group.table, bg.group.table, map,
                                     hat.group.table.order() > 400
                                         ? std::optional<std::size_t>(100000)
                                         : std::nullopt,
                                     opts.seed);
    bool theta_ok = true;
    for (std::size_t i = 0; i < map.size(); ++i)
      theta_ok = theta_ok && bg.zeta(map[i]) == hat.theta(static_cast<Elem>(i));
    r.check("eta_hat.n" + std::to_string(n), "eta_hat is a homomorphism and theta = zeta eta_hat",
            "lemma", true, hom && theta_ok, hom && theta_ok);
  }
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_sl2(const SuiteOptions& opts) {
  Stopwatch sw;
  VerificationReport r;
  r.command = "verify";
  r.inputs = {{"suite", "sl2"}, {"seed", std::to_string(opts.seed)}};
  std::mt19937_64 rng(opts.seed);

  const auto pool = sl2_with_bound(20);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t cocycle_ok = 0, linear_nonzero = 0;
  for (int i = 0; i < 100; ++i) {
    const auto c = heis::q_form_cocycle_check(pool[pick(rng)], pool[pick(rng)]);
    if (c.is_cocycle_mod_linear) ++cocycle_ok;
    if (!is_zero(c.linear_x) || !is_zero(c.linear_y)) ++linear_nonzero;
  }
  r.check("cocycle", "q_FG - q_F o G - q_G has no quadratic part (100 random pairs)",
          "brute-force", 100, cocycle_ok, cocycle_ok == 100);
  r.info("cocycle_linear_defects", "pairs with a nonzero linear residue", linear_nonzero);

  std::uniform_int_distribution<int> half(-2, 2);
  std::size_t lift_fail = 0;
  for (int i = 0; i < 100; ++i) {
    const auto lift =
        heis::sl2_lift(pool[pick(rng)], Rational(half(rng), 2), Rational(half(rng), 2));
    for (int j = 0; j < 1000; ++j) {
      const auto a = random_int_heis(rng, false), b = random_int_heis(rng, false);
      if (!(lift(a * b) == lift(a) * lift(b))) ++lift_fail;
    }
  }
  r.check("lift_homomorphism", "every SL(2,Z) lift is a homomorphism (100 F x 1000 pairs)",
          "brute-force", 0, lift_fail, lift_fail == 0);

  std::size_t h6_fail = 0, h_hom_fail = 0;
  for (int n = 2; n <= 12; n += 2) {
    std::vector<heis::HeisElem> all;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z2 = 0; z2 < 2 * n; ++z2) all.push_back(heis::HeisElem::make(n, x, y, z2));
    for (const auto& e : all)
      if (!(heis::h_power(e, 6) == e)) ++h6_fail;
    if (n <= 8)
      for (const auto& a : all)
        for (const auto& b : all)
          if (!(heis::h_auto(a * b) == heis::h_auto(a) * heis::h_auto(b))) ++h_hom_fail;
  }
  r.check("h_order_6", "h^6 = id on every element, even n in [2, 12]", "lemma", 0, h6_fail,
          h6_fail == 0);
  r.check("h_automorphism", "h(ab) = h(a) h(b) on all pairs, even n <= 8", "lemma", 0,
          h_hom_fail, h_hom_fail == 0);

  std::size_t hint_fail = 0, hp_fail = 0, match_h = 0, match_hp = 0;
  const auto chi = heis::SL2Matrix::rotation6();
  const auto lift_h = heis::sl2_lift(chi);
  const auto lift_hp = heis::sl2_lift(chi, Rational(0), Rational(1, 2));
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_int_heis(rng, false), b = random_int_heis(rng, false);
    auto p = a;
    for (int k = 0; k < 6; ++k) p = heis::h_auto_int(p);
    if (!(p == a) || !(heis::h_auto_int(a * b) == heis::h_auto_int(a) * heis::h_auto_int(b)))
      ++hint_fail;

    const auto c = random_int_heis(rng, true), d = random_int_heis(rng, true);
    auto q = c;
    bool integral = true;
    for (int k = 0; k < 6; ++k) {
      q = heis::h_prime_auto(q);
      integral = integral && q.integral();
    }
    if (!(q == c) || !integral ||
        !(heis::h_prime_auto(c * d) == heis::h_prime_auto(c) * heis::h_prime_auto(d)))
      ++hp_fail;
    if (i < 1000) {
      if (lift_h(a) == heis::h_auto_int(a)) ++match_h;
      if (lift_hp(c) == heis::h_prime_auto(c)) ++match_hp;
    }
  }
  r.check("h_int", "h is an automorphism of order 6 over Z (10^4 random)", "lemma", 0, hint_fail,
          hint_fail == 0);
  r.check("h_prime", "h' preserves integrality, is an automorphism of order 6 (10^4 random)",
          "lemma", 0, hp_fail, hp_fail == 0);
  r.check("lift_chi_is_h", "the lift of [[0,-1],[1,1]] with zero linear part is h (10^3 random)",
          "definition", 1000, match_h, match_h == 1000);
  r.check("lift_chi_half_is_h_prime",
          "the lift of [[0,-1],[1,1]] with linear part (0, 1/2) is h' (10^3 random)",
          "definition", 1000, match_hp, match_hp == 1000);
  r.runtime_ms = sw.ms();
  return r;
}

VerificationReport verify_doubling(const SuiteOptions& opts) {
  Stopwatch sw;
  VerificationReport r;
  r.command = "verify";
  r.inputs = {{"suite", "doubling"}, {"seed", std::to_string(opts.seed)}};
  for (int p : {3, 5, 7}) {
    const std::string tag = "p" + std::to_string(p) + ".";
    const auto d = heis::doubling_embed(p, opts.cap);
    const auto& src = d.source.table;
    const auto& tgt = d.target.table;
    const std::optional<std::size_t> samples =
        p >= 7 ? std::optional<std::size_t>(100000) : std::nullopt;
    const bool hom = is_homomorphism(src, tgt, d.d.map, samples, opts.seed);
    std::set<Elem> distinct(d.d.map.begin(), d.d.map.end());
    const bool injective = distinct.size() == src.order();
    r.check(tag + "injective_homomorphism", "d(A(x,y,z)) = A(2x,2y,4z) is an injective morphism",
            "lemma", json{{"homomorphism", true}, {"injective", true}},
            json{{"homomorphism", hom}, {"injective", injective},
                 {"pairs", samples ? *samples : src.order() * src.order()}},
            hom && injective);
    const auto img = SubgroupMask::checked(tgt, image(src, tgt, d.d));
    const auto syl = sylow(tgt, static_cast<std::size_t>(p));
    const std::size_t p3 = static_cast<std::size_t>(p * p * p);
    r.check(tag + "image_is_sylow", "the image of d is a Sylow p-subgroup of Gamma_2p", "lemma",
            json{{"order", p3}, {"equals_sylow", true}},
            json{{"order", img.size()}, {"equals_sylow", img == syl}},
            img.size() == p3 && img == syl);
    const Elem one = d.source.index_of(heis::HeisElem::make(p, 1, 0, 0));
    const Elem two = d.target.index_of(heis::HeisElem::make(2 * p, 2, 0, 0));
    r.check(tag + "d_generator", "d(A(1,0,0)) = A(2,0,0)", "definition", tgt.label(two),
            tgt.label(d.d(one)), d.d(one) == two);
  }
  r.runtime_ms = sw.ms();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"q", "esfera", "tor", "sl2", "doubling"};
  return names;
}

VerificationReport verify_suite(std::string_view name, const SuiteOptions& opts) {
  if (name == "q") return verify_q(opts);
  if (name == "esfera") return verify_esfera(opts);
  if (name == "tor") return verify_tor(opts);
  if (name == "sl2") return verify_sl2(opts);
  if (name == "doubling") return verify_doubling(opts);
  if (name == "all") {
    Stopwatch sw;
    VerificationReport all;
    all.command = "verify";
    all.inputs = {{"suite", "all"}, {"max-n", std::to_string(opts.max_n)},
                  {"seed", std::to_string(opts.seed)}};
    for (const auto& s : suite_names()) {
      auto part = verify_suite(s, opts);
      for (auto& c : part.claims) c.name = s + "." + c.name;
      all.merge(part);
    }
    all.runtime_ms = sw.ms();
    return all;
  }
  throw Error(Errc::invalid_argument, "unknown suite '" + std::string(name) + "'");
}

}  // namespace jordan::suites
