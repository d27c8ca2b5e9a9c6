// jordan: builds the finite groups and runs the verification suites.
//
// One JSON document goes to stdout, a readable summary to stderr.
// Exit codes: 0 all claims pass, 1 some claim fails, 2 usage error,
// 3 timeout or size cap.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "jordan/abelian_search.hpp"
#include "jordan/errors.hpp"
#include "jordan/heisenberg.hpp"
#include "jordan/rational.hpp"
#include "jordan/report.hpp"
#include "jordan/simd/kernels.hpp"
#include "jordan/suites.hpp"
#include "jordan/surface_groups.hpp"

namespace {

using namespace jordan;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

int emit(const VerificationReport& r) {
  std::cout << to_json(r).dump(2) << '\n';
  std::cerr << summarize(r);
  if (r.timed_out) return kExitLimit;
  return r.all_pass() ? kExitPass : kExitFail;
}

int emit_error(const Error& e) {
  const int code = e.code() == Errc::cap_exceeded ? kExitLimit : kExitUsage;
  std::cout << json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump(2) << '\n';
  std::cerr << "error: " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite groups and bounds for symplectic actions on S^2 x T^2"};
  app.require_subcommand(1);
  app.fallthrough();

  suites::SuiteOptions opts;
  double budget_s = 300;
  app.add_option("--seed", opts.seed, "Seed for randomized checks")->capture_default_str();
  app.add_option("--cap", opts.cap, "Largest group order to build")
      ->capture_default_str()
      ->check(CLI::Range(std::size_t{1}, kMaxOrder));
  app.add_option("--budget-s", budget_s, "Time budget per search, seconds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  int n = 0;
  auto* gamma = app.add_subcommand("gamma", "Structure and minimal abelian index of Gamma_n");
  gamma->add_option("--n", n, "Modulus, n >= 2")->required()->check(CLI::Range(2, 1000));

  auto* hat = app.add_subcommand("hat-gamma", "The Z_6 extension hat Gamma_n (n even)");
  hat->add_option("--n", n, "Even modulus, n >= 2")->required()->check(CLI::Range(2, 1000));

  std::string alpha, beta;
  std::optional<long long> p;
  auto* bound = app.add_subcommand("bound", "lambda, the Jordan bound, degrees, p-admissibility");
  bound->add_option("--alpha", alpha, "Torus area, p/q or integer")->required();
  bound->add_option("--beta", beta, "Sphere area, p/q or integer")->required();
  bound->add_option("--p", p, "Prime p > 3");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"q", "esfera", "tor", "sl2", "doubling", "all"}));
  verify->add_option("--max-n", opts.max_n, "Largest modulus for the q and tor suites")
      ->capture_default_str()
      ->check(CLI::Range(2, 64));

  std::string kind;
  auto* sphere = app.add_subcommand("sphere", "Rotation group of S^2 and its H' witness");
  sphere->add_option("--kind", kind, "cyclic:n, dihedral:n, tetra, octa or icosa")->required();

  std::string group_name;
  auto* exp = app.add_subcommand("export", "Print a group table as JSON");
  exp->add_option("--group", group_name, "gamma, hat-gamma, b or sphere")
      ->required()
      ->check(CLI::IsMember({"gamma", "hat-gamma", "b", "sphere"}));
  exp->add_option("--n", n, "Modulus");
  exp->add_option("--kind", kind, "Rotation group kind");

  std::string in_path;
  auto* minidx = app.add_subcommand("min-index", "Minimal abelian index of a JSON group table");
  minidx->add_option("--in", in_path, "Group table file")->required()->check(CLI::ExistingFile);

  std::string op, lit_a, lit_b;
  auto* elem = app.add_subcommand("elem", "Arithmetic on Heisenberg elements A(x,y,z)");
  elem->add_option("--n", n, "Even modulus")->required()->check(CLI::Range(2, 1000));
  elem->add_option("--op", op, "mul, inv, h or commutator")
      ->required()
      ->check(CLI::IsMember({"mul", "inv", "h", "commutator"}));
  elem->add_option("--a", lit_a, "First element")->required();
  elem->add_option("--b", lit_b, "Second element");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }
  opts.budget = std::chrono::duration<double>(budget_s);

  try {
    if (gamma->parsed()) return emit(suites::gamma_report(n, opts));
    if (hat->parsed()) return emit(suites::hat_gamma_report(n, opts));
    if (bound->parsed())
      return emit(suites::bound_report(parse_rational(alpha), parse_rational(beta), p));
    if (verify->parsed()) return emit(suites::verify_suite(suite, opts));

    if (sphere->parsed()) {
      const auto k = surface::RotationGroupKind::parse(kind);
      const auto g = surface::rotation_group(k, opts.cap);
      const auto w = surface::esfera_witness(g.table, k);
      VerificationReport r;
      r.command = "sphere";
      r.inputs = {{"kind", k.to_string()}};
      r.info("order", "order of the rotation group", g.table.order());
      r.info("h_prime", "elements of the chosen cyclic subgroup H'",
             [&] {
               json out = json::array();
               for (Elem e : w.h_prime.elements()) out.push_back(g.table.label(e));
               return out;
             }());
      r.check("sigma_count", "|Sigma_H(H')| <= 12", "lemma", json{{"<=", 12}}, w.sigma_count,
              w.sigma_count <= 12);
      r.info("inverting_element", "some h outside H' conjugates every x in H' to x^-1",
             w.inverting_element ? json(g.table.label(*w.inverting_element)) : json(nullptr));
      return emit(r);
    }

    if (exp->parsed()) {
      json out;
      if (group_name == "gamma") out = to_json(heis::gamma_n(n, opts.cap).table);
      else if (group_name == "hat-gamma") out = to_json(heis::hat_gamma_n(n, opts.cap).group.table);
      else if (group_name == "b") out = to_json(heis::b_n_group(n, opts.cap).group.table);
      else
        out = to_json(
            surface::rotation_group(surface::RotationGroupKind::parse(kind), opts.cap).table);
      std::cout << out.dump() << '\n';
      std::cerr << "exported " << group_name << " of order " << out["order"] << '\n';
      return kExitPass;
    }

    if (minidx->parsed()) {
      std::ifstream in(in_path);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw Error(Errc::parse_error, e.what());
      }
      const auto g = group_from_json(j);
      if (g.order() > opts.cap)
        throw Error(Errc::cap_exceeded, "table order exceeds cap " + std::to_string(opts.cap));
      const auto res = min_abelian_index(g, SearchOptions{opts.budget});
      VerificationReport r;
      r.command = "min-index";
      r.inputs = {{"in", in_path}};
      r.timed_out = res.status == SearchStatus::timeout;
      r.info("order", "group order", g.order());
      r.info("min_abelian_index", "minimum of [G : A] over abelian subgroups A",
             json{{"index", res.index},
                  {"status", r.timed_out ? "timeout" : "exact"},
                  {"nodes", res.nodes},
                  {"simd", simd::isa_name(simd::active().isa)}});
      return emit(r);
    }

    if (elem->parsed()) {
      const auto a = heis::parse_heis(lit_a, n);
      heis::HeisElem out;
      if (op == "inv") out = heis::heis_inv(a);
      else if (op == "h") out = heis::h_auto(a);
      else {
        if (lit_b.empty()) throw Error(Errc::invalid_argument, "--b is required for " + op);
        const auto b = heis::parse_heis(lit_b, n);
        out = op == "mul" ? a * b : a * b * heis::heis_inv(a) * heis::heis_inv(b);
      }
      std::cout << json{{"op", op}, {"n", n}, {"result", heis::to_string(out)}}.dump(2) << '\n';
      std::cerr << op << " = " << heis::to_string(out) << '\n';
      return kExitPass;
    }
  } catch (const Error& e) {
    return emit_error(e);
  }
  return kExitUsage;
}
