#include "jordan/group_table.hpp"

#include <random>
#include <string>
#include <utility>

#include "json.hpp"

#include "jordan/errors.hpp"

namespace jordan {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::invalid_table: return "InvalidTable";
    case Errc::not_normal: return "NotNormal";
    case Errc::prime_does_not_divide: return "PrimeDoesNotDivide";
    case Errc::modulus_mismatch: return "ModulusMismatch";
    case Errc::odd_modulus: return "OddModulus";
    case Errc::non_integral_input: return "NonIntegralInput";
    case Errc::det_not_one: return "DetNotOne";
    case Errc::not_central: return "NotCentral";
    case Errc::quotient_not_abelian: return "QuotientNotAbelian";
    case Errc::hypothesis_violation: return "HypothesisViolation";
    case Errc::index_exceeds_six: return "IndexExceedsSix";
    case Errc::zero_area: return "ZeroArea";
    case Errc::prime_too_small: return "PrimeTooSmall";
    case Errc::lambda_too_small: return "LambdaTooSmall";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void bad_table(const std::string& why) { throw Error(Errc::invalid_table, why); }

}  // namespace

GroupTable GroupTable::from_rows(std::size_t order, std::vector<Elem> mul,
                                 std::vector<std::string> labels) {
  if (order == 0) bad_table("order must be positive");
  if (order > kMaxOrder) bad_table("order " + std::to_string(order) + " exceeds element width");
  if (mul.size() != order * order) bad_table("table size does not match order");
  if (!labels.empty() && labels.size() != order) bad_table("label count does not match order");

  GroupTable g;
  g.order_ = order;
  g.mul_ = std::move(mul);
  g.labels_ = std::move(labels);

  for (Elem v : g.mul_)
    if (v >= order) bad_table("entry out of range");
  for (std::size_t a = 0; a < order; ++a) {
    if (g.mul(0, static_cast<Elem>(a)) != a || g.mul(static_cast<Elem>(a), 0) != a)
      bad_table("element 0 is not the identity");
  }

  // Rows must be permutations; the inverse is where the identity lands.
  g.inv_.assign(order, 0);
  std::vector<std::uint32_t> seen(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    const auto r = g.row(static_cast<Elem>(a));
    const auto stamp = static_cast<std::uint32_t>(a + 1);
    bool found_inverse = false;
    for (std::size_t b = 0; b < order; ++b) {
      if (seen[r[b]] == stamp) bad_table("row " + std::to_string(a) + " repeats an entry");
      seen[r[b]] = stamp;
      if (r[b] == 0) {
        g.inv_[a] = static_cast<Elem>(b);
        found_inverse = true;
      }
    }
    if (!found_inverse) bad_table("element without inverse");
  }
  for (std::size_t a = 0; a < order; ++a)
    if (g.mul(g.inv_[a], static_cast<Elem>(a)) != 0) bad_table("left and right inverses differ");

  if (order <= kExhaustiveAssocLimit) {
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        const auto ab = g.row(g.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
        const auto ra = g.row(static_cast<Elem>(a));
        const auto rb = g.row(static_cast<Elem>(b));
        for (std::size_t c = 0; c < order; ++c)
          if (ab[c] != ra[rb[c]]) bad_table("table is not associative");
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (std::size_t s = 0; s < kAssocSamples; ++s) {
      const auto a = static_cast<Elem>(pick(rng));
      const auto b = static_cast<Elem>(pick(rng));
      const auto c = static_cast<Elem>(pick(rng));
      if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) bad_table("table is not associative");
    }
  }
  return g;
}

Elem GroupTable::pow(Elem a, long long k) const noexcept {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool GroupTable::is_abelian() const noexcept {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (!commute(static_cast<Elem>(a), static_cast<Elem>(b))) return false;
  return true;
}

std::string GroupTable::label(Elem a) const {
  if (!labels_.empty()) return labels_[a];
  return "#" + std::to_string(a);
}

GroupTable trivial_group() { return GroupTable::from_rows(1, {0}, {"e"}); }

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "cyclic group of order 0");
  std::vector<Elem> mul(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = static_cast<Elem>((a + b) % n);
  return GroupTable::from_rows(n, std::move(mul));
}

GroupTable direct_product_cyclic(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw Error(Errc::invalid_argument, "factor of order 0");
  const std::size_t order = m * n;
  std::vector<Elem> mul(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t u = (a / n + b / n) % m;
      const std::size_t v = (a % n + b % n) % n;
      mul[a * order + b] = static_cast<Elem>(u * n + v);
    }
  return GroupTable::from_rows(order, std::move(mul));
}

bool is_homomorphism(const GroupTable& src, const GroupTable& tgt, std::span<const Elem> map,
                     std::optional<std::size_t> samples, std::uint64_t seed) {
  const std::size_t n = src.order();
  if (map.size() != n) return false;
  for (Elem v : map)
    if (v >= tgt.order()) return false;
  if (samples) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < *samples; ++s) {
      const auto a = static_cast<Elem>(pick(rng));
      const auto b = static_cast<Elem>(pick(rng));
      if (map[src.mul(a, b)] != tgt.mul(map[a], map[b])) return false;
    }
    return true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto ea = static_cast<Elem>(a);
      const auto eb = static_cast<Elem>(b);
      if (map[src.mul(ea, eb)] != tgt.mul(map[ea], map[eb])) return false;
    }
  return true;
}

nlohmann::json to_json(const GroupTable& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    const auto r = g.row(static_cast<Elem>(a));
    rows.push_back(std::vector<Elem>(r.begin(), r.end()));
  }
  nlohmann::json j{{"order", g.order()}, {"mul", std::move(rows)}};
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

GroupTable group_from_json(const nlohmann::json& j) {
  try {
    const auto order = j.at("order").get<std::size_t>();
    const auto& rows = j.at("mul");
    if (!rows.is_array() || rows.size() != order) bad_table("mul must have `order` rows");
    std::vector<Elem> mul;
    mul.reserve(order * order);
    for (const auto& r : rows) {
      if (!r.is_array() || r.size() != order) bad_table("mul rows must have `order` entries");
      for (const auto& v : r) {
        const auto x = v.get<long long>();
        if (x < 0 || static_cast<std::size_t>(x) >= order) bad_table("entry out of range");
        mul.push_back(static_cast<Elem>(x));
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return GroupTable::from_rows(order, std::move(mul), std::move(labels));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

}  // namespace jordan
