#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "jordan/abelian_search.hpp"
#include "jordan/heisenberg.hpp"
#include "jordan/jordan_bounds.hpp"
#include "jordan/qpairing.hpp"
#include "jordan/subgroup.hpp"
#include "jordan/surface_groups.hpp"

using namespace jordan;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Gamma_n: orders, center, commutator, minimal abelian index.
void criterion1(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 10; ++n) {
    const std::size_t m = static_cast<std::size_t>(n);
    const auto g = heis::gamma_n(n).table;
    const auto z = center(g);
    const auto r = min_abelian_index(g);
    o.require(g.order() == m * m * m, "order n=" + std::to_string(n));
    o.require(z.size() == m, "center n=" + std::to_string(n));
    o.require(commutator_subgroup(g) == z, "commutator n=" + std::to_string(n));
    o.require(r.status == SearchStatus::exact && r.index == m,
              "min index n=" + std::to_string(n) + " got " + std::to_string(r.index));
  }
  const double s = seconds_since(t0);
  o.require(s < 30, "runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail << "n=2..10, min index = n, " << s << " s";
}

// hat Gamma_n: minimal abelian index at least 6n.
void criterion2(Outcome& o) {
  for (int n : {8, 10}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto hat = heis::hat_gamma_n(n);
    const auto r = min_abelian_index(hat.group.table, SearchOptions{std::chrono::seconds(300)});
    const double s = seconds_since(t0);
    const std::size_t want = 6 * static_cast<std::size_t>(n);
    o.require(r.status == SearchStatus::exact, "search timed out n=" + std::to_string(n));
    o.require(r.index >= want, "index " + std::to_string(r.index) + " < " + std::to_string(want));
    o.require(s < 300, "runtime n=" + std::to_string(n));
    o.detail << (o.detail.tellp() > 0 ? ", " : "") << "n=" << n
             << ": order=" << hat.group.table.order() << " kernel=" << hat.theta_kernel_order
             << " index=" << r.index << " >= " << want << " (" << s << " s)";
  }
}

// h on A(x,y,z) with z in Z_n, n odd: 1/2 is the inverse of 2 mod n.
struct OddElem {
  long long x, y, z;
  bool operator==(const OddElem&) const = default;
};

OddElem h_odd(const OddElem& e, long long n) {
  const long long half = (n + 1) / 2;
  const auto md = [n](long long v) { return ((v % n) + n) % n; };
  return {md(-e.y), md(e.x + e.y), md(e.z - e.x * e.y - md(e.y * e.y) * half)};
}

void criterion3(Outcome& o) {
  std::size_t checked = 0;
  for (int n = 2; n <= 12; ++n) {
    if (n % 2 == 0) {
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z2 = 0; z2 < 2 * n; ++z2) {
            const auto e = heis::HeisElem::make(n, x, y, z2);
            auto p = e;
            for (int k = 0; k < 6; ++k) p = heis::h_auto(p);
            o.require(p == e, "h^6 != id at n=" + std::to_string(n));
            ++checked;
          }
    } else {
      for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y)
          for (long long z = 0; z < n; ++z) {
            const OddElem e{x, y, z};
            auto p = e;
            for (int k = 0; k < 6; ++k) p = h_odd(p, n);
            o.require(p == e, "h^6 != id at n=" + std::to_string(n));
            ++checked;
          }
    }
  }
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<long long> coord(-1000, 1000);
  for (int i = 0; i < 10000; ++i) {
    const heis::IntHeisElem e{coord(rng), coord(rng), 2 * coord(rng)};
    auto p = e;
    for (int k = 0; k < 6; ++k) {
      p = heis::h_prime_auto(p);
      o.require(p.integral(), "h' left the integral lattice");
    }
    o.require(p == e, "h'^6 != id");
  }
  const auto lift = heis::sl2_lift(heis::SL2Matrix::rotation6());
  for (int i = 0; i < 1000; ++i) {
    const heis::IntHeisElem e{coord(rng), coord(rng), coord(rng)};
    o.require(lift(e) == heis::h_auto_int(e), "lift of [[0,-1],[1,1]] differs from h");
  }
  if (o.pass)
    o.detail << "h^6 = id on " << checked << " elements (n=2..12), 10^4 h' triples, "
             << "10^3 lift comparisons";
}

void criterion4(Outcome& o) {
  for (int n = 2; n <= 8; ++n) {
    const auto g = std::make_shared<const GroupTable>(heis::gamma_n(n).table);
    const auto data = qpair::central_data_from(g, center(*g));
    for (const auto& p : qpair::verify_q_properties(data)) {
      o.require(p.pass, p.property + " fails at n=" + std::to_string(n));
      if (n == 6 && (p.property == "coprime_vanishing" || p.property == "p_order_bound"))
        o.require(p.checked > 0, "no mixed-prime pairs in Gamma_6");
    }
    const auto dc = qpair::check_dc_bound(data);
    o.require(dc.bound_holds, "d_c^2 > |G_B| at n=" + std::to_string(n));
    o.require(dc.tight && dc.single_q_generates,
              "no equality witness at n=" + std::to_string(n));
  }
  if (o.pass) o.detail << "four properties on Gamma_2..8, d_c^2 = |G_B| = n^2 each";
}

void criterion5(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int p : {5, 7}) {
    const auto d = heis::doubling_embed(p);
    const auto& s = d.source.table;
    const auto& t = d.target.table;
    const std::optional<std::size_t> samples =
        p == 5 ? std::nullopt : std::optional<std::size_t>(100000);
    o.require(is_homomorphism(s, t, d.d.map, samples, 0),
              "not a homomorphism p=" + std::to_string(p));
    o.require(kernel(s, d.d).size() == 1, "not injective p=" + std::to_string(p));
    const auto img = image(s, t, d.d);
    const std::size_t p3 = static_cast<std::size_t>(p * p * p);
    o.require(img.count() == p3 && is_subgroup(t, img), "image order p=" + std::to_string(p));
    o.require((t.order() / p3) % static_cast<std::size_t>(p) != 0,
              "image is not a Sylow subgroup p=" + std::to_string(p));
    o.require(sylow(t, static_cast<std::size_t>(p)).size() == p3,
              "Sylow order p=" + std::to_string(p));
  }
  const double s = seconds_since(t0);
  o.require(s < 60, "runtime " + std::to_string(s) + " s");
  if (o.pass) o.detail << "p=5 exhaustive, p=7 sampled 10^5 pairs, " << s << " s";
}

void criterion6(Outcome& o) {
  using surface::RotationGroupKind;
  std::vector<std::pair<RotationGroupKind, std::size_t>> exact = {
      {RotationGroupKind::cyclic(2), 1},    {RotationGroupKind::cyclic(5), 1},
      {RotationGroupKind::cyclic(12), 1},   {RotationGroupKind::dihedral(3), 1},
      {RotationGroupKind::dihedral(4), 1},  {RotationGroupKind::dihedral(7), 1},
      {RotationGroupKind::dihedral(12), 1}, {RotationGroupKind::tetra(), 3},
      {RotationGroupKind::octa(), 3}};
  for (const auto& [k, want] : exact) {
    const auto g = surface::rotation_group(k).table;
    const auto w = surface::esfera_witness(g, k);
    o.require(w.sigma_count == want, k.to_string() + " sigma " + std::to_string(w.sigma_count));
    o.require(!surface::find_noncyclic_odd_p_subgroup(g), k.to_string() + " odd p-subgroup");
    if (k.family == RotationGroupKind::Family::tetra || k.family == RotationGroupKind::Family::octa)
      o.require(w.inverting_element.has_value(), k.to_string() + " no inverting element");
  }
  const auto ico = surface::rotation_group(RotationGroupKind::icosa()).table;
  const auto w = surface::esfera_witness(ico, RotationGroupKind::icosa());
  o.require(w.sigma_count <= 12, "icosa sigma " + std::to_string(w.sigma_count));
  o.require(w.inverting_element.has_value(), "icosa no inverting element");
  o.require(!surface::find_noncyclic_odd_p_subgroup(ico), "icosa odd p-subgroup");
  o.detail << (o.pass ? "" : "; ") << "icosa sigma count = " << w.sigma_count;
}

void criterion7(Outcome& o) {
  o.require(surface::torus_point_orders(10) == std::vector<int>{1, 2, 3, 4, 6},
            "torus point orders");
  for (int n = 2; n <= 8; ++n) {
    const auto b = heis::b_n_group(n);
    const auto& t = b.group.table;
    o.require(t.order() == static_cast<std::size_t>(6 * n * n), "|B_n| n=" + std::to_string(n));
    const Elem ci = t.inv(b.chi);
    o.require(t.mul(t.mul(ci, b.t_a), b.chi) == t.mul(b.t_a, t.inv(b.t_b)) &&
                  t.mul(t.mul(ci, b.t_b), b.chi) == b.t_a,
              "chi relations n=" + std::to_string(n));
  }
  for (int n : {6, 8, 9, 12}) {
    for (int k : {2, 3}) {
      std::vector<std::pair<int, int>> want{{0, 0}};
      if (k == 2 && n % 3 == 0) want.emplace_back(n / 3, n / 3);
      if (k == 3 && n % 2 == 0) want = {{0, 0}, {0, n / 2}, {n / 2, 0}, {n / 2, n / 2}};
      std::sort(want.begin(), want.end());
      auto got = heis::fixed_points_chi_power(n, k);
      std::sort(got.begin(), got.end());
      if (got != want) {
        std::ostringstream msg;
        msg << "K_" << k << " n=" << n << " formula has " << want.size() << " points, fixed set {";
        for (std::size_t i = 0; i < got.size(); ++i)
          msg << (i ? "," : "") << "(" << got[i].first << "," << got[i].second << ")";
        msg << "}";
        o.require(false, msg.str());
      }
    }
  }
  if (o.pass) o.detail << "orders {1,2,3,4,6}, B_2..8 relations, K_2/K_3 match";
}

void criterion8(Outcome& o) {
  using bounds::SymplecticShape;
  const auto sh = [](Rational a, Rational b) { return SymplecticShape::make(a, b); };
  const auto lam = [&](Rational a, Rational b) { return bounds::lambda_of(sh(a, b)); };
  o.require(lam(Rational(1), Rational(1)) == 1, "lambda(1,1)");
  o.require(lam(Rational(5), Rational(1)) == 8, "lambda(5,1)");
  o.require(lam(Rational(4), Rational(1)) == 6, "lambda(4,1)");
  o.require(lam(Rational(3, 2), Rational(1)) == 2, "lambda(3/2,1)");
  o.require(lam(Rational(100), Rational(1)) == 198, "lambda(100,1)");
  o.require(lam(Rational(101), Rational(1)) == 200, "lambda(101,1)");
  o.require(bounds::jordan_bound(sh(Rational(1), Rational(1))) == 144, "bound at lambda 1");
  o.require(bounds::jordan_bound(sh(Rational(13), Rational(1))) == 144, "bound at lambda 24");
  o.require(bounds::jordan_bound(sh(Rational(27, 2), Rational(1))) == 156, "bound at lambda 26");
  o.require(bounds::nonabelian_p_admissible(sh(Rational(6), Rational(1)), 5).admissible,
            "p=5 lambda=10");
  o.require(!bounds::nonabelian_p_admissible(sh(Rational(5), Rational(1)), 5).admissible,
            "p=5 lambda=8");
  o.require(!bounds::nonabelian_p_admissible(sh(Rational(7), Rational(1)), 7).admissible,
            "p=7 lambda=12");
  o.require(bounds::nonabelian_p_admissible(sh(Rational(13), Rational(1)), 5).admissible,
            "p=5 lambda=24");
  o.require(bounds::admissible_fixed_surface_degrees(sh(Rational(1), Rational(1))) ==
                std::vector<long long>{0},
            "degrees(1,1)");
  o.require(bounds::admissible_fixed_surface_degrees(sh(Rational(5), Rational(1))) ==
                std::vector<long long>{-8, -6, -4, -2, 0, 2, 4, 6, 8},
            "degrees(5,1)");
  o.require(bounds::admissible_fixed_surface_degrees(sh(Rational(1), Rational(4))) ==
                std::vector<long long>{0},
            "degrees(1,4)");
  // jordan_bound = 144 exactly when lambda <= 24.
  for (long long num = 1; num <= 400; ++num) {
    const auto s = sh(Rational(num, 4), Rational(1));
    const long long l = bounds::lambda_of(s);
    o.require((bounds::jordan_bound(s) == 144) == (l <= 24), "crossover at alpha=" +
                                                                 std::to_string(num) + "/4");
  }
  if (o.pass) o.detail << "table reproduced, lambda(4,1) = 6, crossover at lambda 24";
}

void criterion9(Outcome& o) {
  std::vector<heis::SL2Matrix> pool;
  for (long long a = -20; a <= 20; ++a)
    for (long long b = -20; b <= 20; ++b)
      for (long long c = -20; c <= 20; ++c)
        for (long long d = -20; d <= 20; ++d)
          if (a * d - b * c == 1) pool.push_back({a, b, c, d});
  std::mt19937_64 rng(0);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t ok = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& f = pool[pick(rng)];
    const auto& g = pool[pick(rng)];
    const auto c = heis::q_form_cocycle_check(f, g);
    if (c.is_cocycle_mod_linear) ++ok;
  }
  o.require(ok == 100, std::to_string(100 - ok) + " pairs with quadratic defect");
  if (o.pass) o.detail << "100 pairs from " << pool.size() << " matrices, quadratic defect 0";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Gamma_n structure", criterion1},   {"hat Gamma_n index", criterion2},
      {"h and h'", criterion3},            {"Q pairing", criterion4},
      {"doubling", criterion5},            {"rotation groups", criterion6},
      {"torus point groups", criterion7},  {"shape arithmetic", criterion8},
      {"cocycle", criterion9}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
