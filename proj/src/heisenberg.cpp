#include "jordan/heisenberg.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "jordan/errors.hpp"

namespace jordan::heis {

namespace {

long long mod(long long a, long long m) {
  const long long r = a % m;
  return r < 0 ? r + m : r;
}

void require_same(const HeisElem& a, const HeisElem& b) {
  if (a.n != b.n)
    throw Error(Errc::modulus_mismatch,
                "moduli " + std::to_string(a.n) + " and " + std::to_string(b.n));
}

}  // namespace

HeisElem HeisElem::make(int n, long long x, long long y, long long z2) {
  if (n < 1) throw Error(Errc::invalid_argument, "modulus must be positive");
  return HeisElem{n, static_cast<int>(mod(x, n)), static_cast<int>(mod(y, n)),
                  static_cast<int>(mod(z2, 2LL * n))};
}

HeisElem heis_mul(const HeisElem& a, const HeisElem& b) {
  require_same(a, b);
  return HeisElem::make(a.n, a.x + b.x, a.y + b.y,
                        static_cast<long long>(a.z2) + b.z2 + 2LL * a.x * b.y);
}

HeisElem heis_inv(const HeisElem& a) {
  // A(x,y,z)^-1 = A(-x, -y, xy - z)
  return HeisElem::make(a.n, -a.x, -a.y, 2LL * a.x * a.y - a.z2);
}

HeisElem h_auto(const HeisElem& e) {
  if (e.n % 2 != 0)
    throw Error(Errc::odd_modulus, "h needs an even modulus, got " + std::to_string(e.n));
  const long long x = e.x;
  const long long y = e.y;
  return HeisElem::make(e.n, -y, x + y, e.z2 - 2 * x * y - y * y);
}

HeisElem h_power(const HeisElem& e, int k) {
  HeisElem out = e;
  for (int i = 0; i < static_cast<int>(mod(k, 6)); ++i) out = h_auto(out);
  return out;
}

std::string to_string(const HeisElem& e) {
  const std::string z = e.z2 % 2 == 0 ? std::to_string(e.z2 / 2) : std::to_string(e.z2) + "/2";
  return "A(" + std::to_string(e.x) + "," + std::to_string(e.y) + "," + z + ")";
}

HeisElem parse_heis(std::string_view literal, int n) {
  const auto fail = [&] {
    throw Error(Errc::parse_error, "expected A(x,y,z), got '" + std::string(literal) + "'");
  };
  std::string s;
  for (char ch : literal)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 4 || s[0] != 'A' || s[1] != '(' || s.back() != ')') fail();
  const std::string body = s.substr(2, s.size() - 3);
  const auto c1 = body.find(',');
  const auto c2 = c1 == std::string::npos ? c1 : body.find(',', c1 + 1);
  if (c2 == std::string::npos || body.find(',', c2 + 1) != std::string::npos) fail();

  const auto parse_int = [&](std::string_view t) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) fail();
    return v;
  };
  const long long x = parse_int(std::string_view(body).substr(0, c1));
  const long long y = parse_int(std::string_view(body).substr(c1 + 1, c2 - c1 - 1));
  const std::string_view zs = std::string_view(body).substr(c2 + 1);
  long long z2 = 0;
  if (const auto slash = zs.find('/'); slash != std::string_view::npos) {
    if (zs.substr(slash + 1) != "2") fail();
    z2 = parse_int(zs.substr(0, slash));
  } else {
    z2 = 2 * parse_int(zs);
  }
  return HeisElem::make(n, x, y, z2);
}

IntHeisElem operator*(const IntHeisElem& a, const IntHeisElem& b) {
  return {a.x + b.x, a.y + b.y, a.z2 + b.z2 + 2 * a.x * b.y};
}

IntHeisElem h_auto_int(const IntHeisElem& e) {
  return {-e.y, e.x + e.y, e.z2 - 2 * e.x * e.y - e.y * e.y};
}

IntHeisElem h_prime_auto(const IntHeisElem& e) {
  if (!e.integral()) throw Error(Errc::non_integral_input, "h' is defined on integral elements");
  return {-e.y, e.x + e.y, e.z2 - 2 * e.x * e.y - (e.y * e.y - e.y)};
}

SL2Matrix SL2Matrix::make(long long a, long long b, long long c, long long d) {
  if (a * d - b * c != 1)
    throw Error(Errc::det_not_one, "determinant is " + std::to_string(a * d - b * c));
  return {a, b, c, d};
}

QuadPoly QuadPoly::substitute(const SL2Matrix& m) const {
  // u = a x + b y, v = c x + d y
  const Rational ma(m.a), mb(m.b), mc(m.c), md(m.d);
  QuadPoly out;
  out.xx = xx * ma * ma + xy * ma * mc + yy * mc * mc;
  out.xy = xx * 2 * ma * mb + xy * (ma * md + mb * mc) + yy * 2 * mc * md;
  out.yy = xx * mb * mb + xy * mb * md + yy * md * md;
  out.x = x * ma + y * mc;
  out.y = x * mb + y * md;
  out.c = c;
  return out;
}

QuadPoly operator+(const QuadPoly& p, const QuadPoly& q) {
  return {p.xx + q.xx, p.xy + q.xy, p.yy + q.yy, p.x + q.x, p.y + q.y, p.c + q.c};
}

QuadPoly operator-(const QuadPoly& p, const QuadPoly& q) {
  return {p.xx - q.xx, p.xy - q.xy, p.yy - q.yy, p.x - q.x, p.y - q.y, p.c - q.c};
}

QuadPoly q_form(const SL2Matrix& f) {
  QuadPoly q;
  q.xx = Rational(f.a * f.c, 2);
  q.xy = Rational(f.a * f.d + f.b * f.c - 1, 2);
  q.yy = Rational(f.b * f.d, 2);
  return q;
}

Sl2Lift::Sl2Lift(const SL2Matrix& f, const Rational& lx, const Rational& ly)
    : f_(SL2Matrix::make(f.a, f.b, f.c, f.d)) {
  for (const Rational* r : {&lx, &ly})
    if (r->denominator() != 1 && r->denominator() != 2)
      throw Error(Errc::invalid_argument, "linear coefficients must lie in (1/2)Z");
  lin2x_ = (lx * 2).numerator();
  lin2y_ = (ly * 2).numerator();
}

IntHeisElem Sl2Lift::operator()(const IntHeisElem& e) const {
  const auto [u, v] = f_.apply(e.x, e.y);
  const long long twice_q = f_.a * f_.c * e.x * e.x +
                            (f_.a * f_.d + f_.b * f_.c - 1) * e.x * e.y +
                            f_.b * f_.d * e.y * e.y;
  return {u, v, e.z2 + twice_q + lin2x_ * e.x + lin2y_ * e.y};
}

Sl2Lift sl2_lift(const SL2Matrix& f, const Rational& lx, const Rational& ly) {
  return Sl2Lift(f, lx, ly);
}

CocycleCheck q_form_cocycle_check(const SL2Matrix& f, const SL2Matrix& g) {
  CocycleCheck out;
  out.difference = q_form(f * g) - q_form(f).substitute(g) - q_form(g);
  const Rational zero(0);
  out.is_cocycle_mod_linear =
      out.difference.xx == zero && out.difference.xy == zero && out.difference.yy == zero;
  out.linear_x = out.difference.x;
  out.linear_y = out.difference.y;
  return out;
}

BuiltGroup<HeisElem> gamma_n(int n, std::size_t cap) {
  if (n < 2) throw Error(Errc::invalid_argument, "Gamma_n needs n >= 2");
  const std::size_t order = static_cast<std::size_t>(n) * n * n;
  if (order > cap)
    throw Error(Errc::cap_exceeded, "|Gamma_" + std::to_string(n) + "| = " +
                                        std::to_string(order) + " exceeds cap " +
                                        std::to_string(cap));
  const HeisElem gens[] = {HeisElem::make(n, 1, 0, 0), HeisElem::make(n, 0, 1, 0)};
  return build_from_generators<HeisElem>(HeisElem::identity(n), gens, cap,
                                         [](const HeisElem& e) { return to_string(e); });
}

HatElem operator*(const HatElem& a, const HatElem& b) {
  return HatElem{heis_mul(a.g, h_power(b.g, a.k)), static_cast<int>(mod(a.k + b.k, 6))};
}

std::string to_string(const HatElem& e) {
  return "(" + to_string(e.g) + ",h^" + std::to_string(e.k) + ")";
}

HatGamma hat_gamma_n(int n, std::size_t cap) {
  if (n % 2 != 0) throw Error(Errc::odd_modulus, "hat Gamma_n needs even n");
  if (n < 2) throw Error(Errc::invalid_argument, "hat Gamma_n needs n >= 2");
  const HeisElem e = HeisElem::identity(n);
  const HatElem gens[] = {HatElem{HeisElem::make(n, 1, 0, 0), 0},
                          HatElem{HeisElem::make(n, 0, 1, 0), 0}, HatElem{e, 1}};
  HatGamma out{build_from_generators<HatElem>(HatElem{e, 0}, gens, cap,
                                              [](const HatElem& x) { return to_string(x); }),
               cyclic_group(6), {}, {}, false, 0, 0, false};
  const auto& g = out.group.table;
  const std::size_t order = g.order();

  out.theta.map.resize(order);
  Bitset gamma(order);
  Bitset hit(6);
  for (std::size_t i = 0; i < order; ++i) {
    const HatElem& x = out.group.elements[i];
    out.theta.map[i] = static_cast<Elem>(x.k);
    hit.set(static_cast<std::size_t>(x.k));
    if (x.k == 0 && x.g.integral()) gamma.set(i);
  }
  out.theta_surjective = hit.count() == 6;
  out.gamma_image = SubgroupMask::checked(g, std::move(gamma));
  out.gamma_image_normal = is_normal(g, out.gamma_image);
  out.gamma_index = order / out.gamma_image.size();
  out.theta_kernel_order = kernel(g, out.theta).size();
  return out;
}

std::pair<int, int> TorusAffine::apply(int u, int v) const noexcept {
  const auto [p, q] = m.apply(u, v);
  return {static_cast<int>(mod(p + tx, n)), static_cast<int>(mod(q + ty, n))};
}

TorusAffine operator*(const TorusAffine& f, const TorusAffine& g) {
  if (f.n != g.n) throw Error(Errc::modulus_mismatch, "torus moduli differ");
  const auto [u, v] = f.m.apply(g.tx, g.ty);
  return TorusAffine{f.n, f.m * g.m, static_cast<int>(mod(u + f.tx, f.n)),
                     static_cast<int>(mod(v + f.ty, f.n))};
}

std::string to_string(const TorusAffine& f) {
  return "[[" + std::to_string(f.m.a) + "," + std::to_string(f.m.b) + "],[" +
         std::to_string(f.m.c) + "," + std::to_string(f.m.d) + "]]+(" + std::to_string(f.tx) +
         "," + std::to_string(f.ty) + ")";
}

namespace {

SL2Matrix chi_power(int k) {
  SL2Matrix m;
  for (int i = 0; i < static_cast<int>(mod(k, 6)); ++i) m = SL2Matrix::rotation6() * m;
  return m;
}

}  // namespace

BGroup b_n_group(int n, std::size_t cap) {
  if (n < 1) throw Error(Errc::invalid_argument, "B_n needs n >= 1");
  const TorusAffine chi{n, SL2Matrix::rotation6(), 0, 0};
  const TorusAffine ta{n, SL2Matrix{}, 1 % n, 0};
  const TorusAffine tb{n, SL2Matrix{}, 0, 1 % n};
  const TorusAffine gens[] = {chi, ta, tb};
  BGroup out{build_from_generators<TorusAffine>(TorusAffine::identity(n), gens, cap,
                                                [](const TorusAffine& f) { return to_string(f); }),
             0, 0, 0, cyclic_group(6), {}, {}};
  out.chi = out.group.index_of(chi);
  out.t_a = out.group.index_of(ta);
  out.t_b = out.group.index_of(tb);

  const auto& g = out.group.table;
  SL2Matrix powers[6];
  for (int k = 0; k < 6; ++k) powers[k] = chi_power(k);
  out.zeta.map.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto& m = out.group.elements[i].m;
    int k = 0;
    while (k < 6 && !(powers[k] == m)) ++k;
    if (k == 6) throw Error(Errc::invalid_table, "linear part outside <chi>");
    out.zeta.map[i] = static_cast<Elem>(k);
  }
  const Elem trans[] = {out.t_a, out.t_b};
  out.translations = closure(g, trans);
  return out;
}

TorusAffine eta_hat(const HatElem& e) {
  return TorusAffine{e.g.n, chi_power(e.k), e.g.x, e.g.y};
}

std::vector<std::pair<int, int>> fixed_points_chi_power(int n, int k) {
  if (n < 1) throw Error(Errc::invalid_argument, "n must be positive");
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      long long a = u, b = v;
      for (int i = 0; i < static_cast<int>(mod(k, 6)); ++i) {
        const long long na = mod(a + b, n);
        const long long nb = mod(-a, n);
        a = na;
        b = nb;
      }
      if (a == u && b == v) out.emplace_back(u, v);
    }
  return out;
}

Doubling doubling_embed(int p, std::size_t cap) {
  if (p < 3 || p % 2 == 0 || !is_prime(static_cast<std::size_t>(p)))
    throw Error(Errc::invalid_argument, "doubling needs an odd prime, got " + std::to_string(p));
  Doubling out{gamma_n(p, cap), gamma_n(2 * p, cap), {}};
  out.d.map.resize(out.source.table.order());
  for (std::size_t i = 0; i < out.source.elements.size(); ++i) {
    const HeisElem& e = out.source.elements[i];
    // z = z2/2, so 4z has doubled value 8z = 4 z2.
    const HeisElem img = HeisElem::make(2 * p, 2LL * e.x, 2LL * e.y, 4LL * e.z2);
    out.d.map[i] = out.target.index_of(img);
  }
  return out;
}

}  // namespace jordan::heis
