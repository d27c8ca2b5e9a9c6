#pragma once

/**
 * @file heisenberg.hpp
 * @brief Finite and integral Heisenberg groups, the order-6 automorphism h,
 *        the extension by h, the planar group B_n and the SL(2,Z) lifts.
 *
 * A(x,y,z) is the upper unitriangular matrix with entries x, y (superdiagonal)
 * and z (corner); A(x,y,z)A(x',y',z') = A(x+x', y+y', z+z'+xy').
 *
 * The corner coordinate is stored doubled (z2 = 2z) throughout: h sends
 * integral elements to half-integral ones (h(A(0,1,0)) = A(-1,1,-1/2)), and
 * storing 2z keeps all arithmetic in integers.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jordan/build.hpp"
#include "jordan/group_table.hpp"
#include "jordan/rational.hpp"
#include "jordan/subgroup.hpp"

namespace jordan::heis {

// Element of the Heisenberg group mod n with half-integral corner:
// x, y in Z_n and z2 = 2z in Z_{2n}. Integral z means z2 even.
struct HeisElem {
  int n = 1;
  int x = 0;
  int y = 0;
  int z2 = 0;

  static HeisElem make(int n, long long x, long long y, long long z2);
  static HeisElem identity(int n) { return HeisElem{n, 0, 0, 0}; }
  bool integral() const noexcept { return z2 % 2 == 0; }

  friend bool operator==(const HeisElem&, const HeisElem&) = default;
};

}  // namespace jordan::heis

template <>
struct std::hash<jordan::heis::HeisElem> {
  std::size_t operator()(const jordan::heis::HeisElem& e) const noexcept {
    return (static_cast<std::size_t>(e.x) * 1000003u + static_cast<std::size_t>(e.y)) * 1000033u +
           static_cast<std::size_t>(e.z2) + (static_cast<std::size_t>(e.n) << 48);
  }
};

namespace jordan::heis {

// Throws Error(modulus_mismatch).
HeisElem heis_mul(const HeisElem& a, const HeisElem& b);
inline HeisElem operator*(const HeisElem& a, const HeisElem& b) { return heis_mul(a, b); }
HeisElem heis_inv(const HeisElem& a);

// h(A(x,y,z)) = A(-y, x+y, z - xy - y^2/2). Needs even n: throws Error(odd_modulus).
HeisElem h_auto(const HeisElem& e);
HeisElem h_power(const HeisElem& e, int k);

// "A(x,y,z)" with z an integer or "k/2".
std::string to_string(const HeisElem& e);
// Parses "A(x,y,z)" (z integer or "k/2") and reduces mod n. Throws Error(parse_error).
HeisElem parse_heis(std::string_view literal, int n);

// Element of the Heisenberg group over Z with z in (1/2)Z, stored as z2 = 2z.
struct IntHeisElem {
  long long x = 0;
  long long y = 0;
  long long z2 = 0;

  long long z_num() const noexcept { return z2 % 2 == 0 ? z2 / 2 : z2; }
  long long z_den() const noexcept { return z2 % 2 == 0 ? 1 : 2; }
  bool integral() const noexcept { return z2 % 2 == 0; }

  friend bool operator==(const IntHeisElem&, const IntHeisElem&) = default;
};

IntHeisElem operator*(const IntHeisElem& a, const IntHeisElem& b);
IntHeisElem h_auto_int(const IntHeisElem& e);
// h'(A(x,y,z)) = A(-y, x+y, z - xy - (y^2-y)/2). Throws Error(non_integral_input).
IntHeisElem h_prime_auto(const IntHeisElem& e);

// Rows [a b; c d] with ad - bc = 1.
struct SL2Matrix {
  long long a = 1;
  long long b = 0;
  long long c = 0;
  long long d = 1;

  // Throws Error(det_not_one).
  static SL2Matrix make(long long a, long long b, long long c, long long d);
  static SL2Matrix identity() { return {}; }
  // [[0,-1],[1,1]]: the linear part of h, of order 6.
  static SL2Matrix rotation6() { return {0, -1, 1, 1}; }

  std::pair<long long, long long> apply(long long x, long long y) const noexcept {
    return {a * x + b * y, c * x + d * y};
  }
  friend SL2Matrix operator*(const SL2Matrix& f, const SL2Matrix& g) noexcept {
    return {f.a * g.a + f.b * g.c, f.a * g.b + f.b * g.d, f.c * g.a + f.d * g.c,
            f.c * g.b + f.d * g.d};
  }
  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
};

// Polynomial in x, y of degree at most 2 with rational coefficients.
struct QuadPoly {
  Rational xx, xy, yy, x, y, c;

  Rational eval(const Rational& u, const Rational& v) const {
    return xx * u * u + xy * u * v + yy * v * v + x * u + y * v + c;
  }
  // p(a x + b y, c x + d y)
  QuadPoly substitute(const SL2Matrix& m) const;
  friend QuadPoly operator+(const QuadPoly& p, const QuadPoly& q);
  friend QuadPoly operator-(const QuadPoly& p, const QuadPoly& q);
  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

// q_F(x,y) = (ac x^2 + (ad + bc - 1) xy + bd y^2) / 2 for F = [a b; c d].
QuadPoly q_form(const SL2Matrix& f);

// A(x,y,z) -> A(ax+by, cx+dy, z + q_F(x,y) + lx x + ly y).
class Sl2Lift {
 public:
  // lx, ly must have denominator 1 or 2 (else Error(invalid_argument)).
  Sl2Lift(const SL2Matrix& f, const Rational& lx, const Rational& ly);

  IntHeisElem operator()(const IntHeisElem& e) const;
  const SL2Matrix& matrix() const noexcept { return f_; }

 private:
  SL2Matrix f_;
  long long lin2x_;  // 2 * lx
  long long lin2y_;  // 2 * ly
};

Sl2Lift sl2_lift(const SL2Matrix& f, const Rational& lx = Rational(0),
                 const Rational& ly = Rational(0));

// q_{FG}(v) - q_F(G v) - q_G(v), expanded symbolically.
struct CocycleCheck {
  bool is_cocycle_mod_linear = false;  // all quadratic coefficients vanish
  Rational linear_x, linear_y;          // residual linear coefficients
  QuadPoly difference;
};
CocycleCheck q_form_cocycle_check(const SL2Matrix& f, const SL2Matrix& g);

// Gamma_n = T(Z,Z)/T(Z,nZ), generated by A(1,0,0) and A(0,1,0). Order n^3.
BuiltGroup<HeisElem> gamma_n(int n, std::size_t cap = kDefaultCap);

// Pair (g, k) acting on the circle bundle as m -> g * h^k(m).
struct HatElem {
  HeisElem g;
  int k = 0;  // mod 6

  friend bool operator==(const HatElem&, const HatElem&) = default;
};

}  // namespace jordan::heis

template <>
struct std::hash<jordan::heis::HatElem> {
  std::size_t operator()(const jordan::heis::HatElem& e) const noexcept {
    return std::hash<jordan::heis::HeisElem>{}(e.g) * 7u + static_cast<std::size_t>(e.k);
  }
};

namespace jordan::heis {
// (g,k)(g',k') = (g h^k(g'), k+k')
HatElem operator*(const HatElem& a, const HatElem& b);
std::string to_string(const HatElem& e);

struct HatGamma {
  BuiltGroup<HatElem> group;
  GroupTable z6;
  Homomorphism theta;            // (g,k) -> k, onto Z_6
  SubgroupMask gamma_image;      // {(g,0) : g integral}
  bool gamma_image_normal = false;
  std::size_t gamma_index = 0;   // [hat Gamma_n : image of Gamma_n]
  std::size_t theta_kernel_order = 0;
  bool theta_surjective = false;
};

// Closure of {(A(1,0,0),0), (A(0,1,0),0), (e,1)}. n even, n >= 2.
HatGamma hat_gamma_n(int n, std::size_t cap = kDefaultCap);

// Affine map v -> M v + t of the torus R^2/nZ^2, with M an integer matrix and
// t in Z_n^2. Faithful on the real torus for every n.
struct TorusAffine {
  int n = 1;
  SL2Matrix m;
  int tx = 0;
  int ty = 0;

  static TorusAffine identity(int n) { return TorusAffine{n, SL2Matrix{}, 0, 0}; }
  std::pair<int, int> apply(int u, int v) const noexcept;
  bool is_translation() const noexcept { return m == SL2Matrix{}; }

  friend bool operator==(const TorusAffine&, const TorusAffine&) = default;
};

}  // namespace jordan::heis

template <>
struct std::hash<jordan::heis::TorusAffine> {
  std::size_t operator()(const jordan::heis::TorusAffine& f) const noexcept {
    std::size_t h = static_cast<std::size_t>(f.n);
    for (long long v : {f.m.a, f.m.b, f.m.c, f.m.d, static_cast<long long>(f.tx),
                        static_cast<long long>(f.ty)})
      h = h * 1000003u + static_cast<std::size_t>(v);
    return h;
  }
};

namespace jordan::heis {
// Composition: (f*g)(v) = f(g(v)).
TorusAffine operator*(const TorusAffine& f, const TorusAffine& g);
std::string to_string(const TorusAffine& f);

struct BGroup {
  BuiltGroup<TorusAffine> group;
  Elem chi = 0, t_a = 0, t_b = 0;
  GroupTable z6;
  Homomorphism zeta;          // chi^k t -> k
  SubgroupMask translations;  // <t_a, t_b>
};

// Closure of chi(x,y) = (-y, x+y), t_a(x,y) = (x+1, y), t_b(x,y) = (x, y+1). n >= 1.
BGroup b_n_group(int n, std::size_t cap = kDefaultCap);

// The projection (g,k) -> (v -> chi^k v + (g.x, g.y)).
TorusAffine eta_hat(const HatElem& e);

// {(u,v) in Z_n^2 : chi^k . (u,v) = (u,v)} for the conjugation action
// chi . (u,v) = (u+v, -u).
std::vector<std::pair<int, int>> fixed_points_chi_power(int n, int k);

struct Doubling {
  BuiltGroup<HeisElem> source;  // Gamma_p
  BuiltGroup<HeisElem> target;  // Gamma_2p
  Homomorphism d;               // A(x,y,z) -> A(2x, 2y, 4z)
};

// p an odd prime. Throws Error(invalid_argument) otherwise.
Doubling doubling_embed(int p, std::size_t cap = kDefaultCap);

}  // namespace jordan::heis
