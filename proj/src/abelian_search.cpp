#include "jordan/abelian_search.hpp"

#include <algorithm>
#include <utility>

#include "jordan/simd/kernels.hpp"

namespace jordan {

CommutingGraph::CommutingGraph(const GroupTable& g) {
  const std::size_t n = g.order();
  rows_.reserve(n);
  std::vector<Elem> column(n);
  const auto& k = simd::active();
  for (std::size_t x = 0; x < n; ++x) {
    const auto e = static_cast<Elem>(x);
    for (std::size_t y = 0; y < n; ++y) column[y] = g.mul(static_cast<Elem>(y), e);
    Bitset row(n);
    k.eq_mask_u16(g.row(e).data(), column.data(), n, row.data());
    rows_.push_back(std::move(row));
  }
}

namespace {

using Clock = std::chrono::steady_clock;

class Searcher {
 public:
  Searcher(const GroupTable& g, const SearchOptions& opts)
      : g_(g), graph_(g), order_of_(g.order()) {
    for (std::size_t x = 0; x < g.order(); ++x)
      order_of_[x] = element_order(g, static_cast<Elem>(x));
    if (opts.budget)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(*opts.budget);
  }

  AbelianIndexResult run() {
    const std::size_t n = g_.order();
    Bitset z = center(g_).bits();
    if (z.count() == n) return finish(std::move(z));

    greedy_incumbent(z);

    // Top level: one representative per non-central conjugacy class.
    const auto class_id = conjugacy_class_ids(g_);
    std::vector<Elem> reps;
    std::vector<std::vector<Elem>> members;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t c = class_id[x];
      if (c >= members.size()) members.resize(c + 1);
      if (members[c].empty() && !z.test(x)) reps.push_back(static_cast<Elem>(x));
      members[c].push_back(static_cast<Elem>(x));
    }
    sort_candidates(reps);

    const Bitset everything = Bitset::full(n);
    Bitset excluded(n);
    for (Elem x : reps) {
      if (timed_out_) break;
      if (everything.minus_count(excluded) <= best_size_) break;
      Bitset a = extend(z, x);
      if (!a.intersects(excluded)) recurse(a, graph_.row(x), excluded);
      for (Elem c : members[class_id[x]]) excluded.set(c);
    }
    return finish_search();
  }

 private:
  void sort_candidates(std::vector<Elem>& v) const {
    std::sort(v.begin(), v.end(), [&](Elem a, Elem b) {
      return order_of_[a] != order_of_[b] ? order_of_[a] < order_of_[b] : a < b;
    });
  }

  // <A, x> for x centralizing the abelian subgroup A: the union of cosets A x^k.
  Bitset extend(const Bitset& a, Elem x) const {
    Bitset out = a;
    const auto members = a.to_indices();
    for (Elem y = x; !a.test(y); y = g_.mul(y, x))
      for (auto m : members) out.set(g_.mul(static_cast<Elem>(m), y));
    return out;
  }

  void greedy_incumbent(const Bitset& z) {
    Bitset a = z;
    Bitset c = Bitset::full(g_.order());
    while (a.count() < c.count()) {
      Elem pick = 0;
      std::size_t pick_size = 0;
      minus(c, a).for_each([&](std::size_t i) {
        const std::size_t s = c.and_count(graph_.row(static_cast<Elem>(i)));
        if (s > pick_size) {
          pick_size = s;
          pick = static_cast<Elem>(i);
        }
      });
      a = extend(a, pick);
      c &= graph_.row(pick);
    }
    record(a);
  }

  void record(const Bitset& a) {
    const std::size_t s = a.count();
    if (s > best_size_) {
      best_size_ = s;
      best_ = a;
    }
  }

  bool out_of_time() {
    if (timed_out_) return true;
    // A node costs several passes over |G|-bit sets, far more than a clock read.
    if (deadline_ && Clock::now() > *deadline_) timed_out_ = true;
    return timed_out_;
  }

  // Invariants: a is abelian, a is a subset of c = C(a), a avoids `excluded`.
  void recurse(const Bitset& a, const Bitset& c, Bitset excluded) {
    ++nodes_;
    if (out_of_time()) return;
    if (c.minus_count(excluded) <= best_size_) return;
    const std::size_t a_size = a.count();
    if (a_size == c.count()) {
      record(a);
      return;
    }
    std::vector<Elem> cand;
    Bitset open = minus(c, a);
    open.subtract(excluded);
    open.for_each([&](std::size_t i) { cand.push_back(static_cast<Elem>(i)); });
    sort_candidates(cand);

    for (Elem x : cand) {
      if (timed_out_) return;
      if (c.minus_count(excluded) <= best_size_) return;
      Bitset a2 = extend(a, x);
      if (!a2.intersects(excluded)) recurse(a2, c & graph_.row(x), excluded);
      excluded.set(x);
    }
  }

  AbelianIndexResult finish(Bitset witness) {
    AbelianIndexResult r;
    r.status = SearchStatus::exact;
    r.index = g_.order() / witness.count();
    r.witness = SubgroupMask::trusted(std::move(witness));
    r.nodes = nodes_;
    return r;
  }

  AbelianIndexResult finish_search() {
    AbelianIndexResult r = finish(best_);
    if (timed_out_) r.status = SearchStatus::timeout;
    return r;
  }

  const GroupTable& g_;
  CommutingGraph graph_;
  std::vector<std::size_t> order_of_;
  std::optional<Clock::time_point> deadline_;
  Bitset best_;
  std::size_t best_size_ = 0;
  std::size_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

AbelianIndexResult min_abelian_index(const GroupTable& g, const SearchOptions& opts) {
  return Searcher(g, opts).run();
}

GroupTable induced_table(const GroupTable& g, const SubgroupMask& h,
                         std::vector<Elem>* embedding) {
  const auto members = h.elements();  // ascending, so the identity comes first
  const std::size_t m = members.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < m; ++i) local[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> mul(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = local[g.mul(members[i], members[j])];
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Elem e : members) labels.push_back(g.labels()[e]);
  if (embedding) *embedding = members;
  return GroupTable::from_rows(m, std::move(mul), std::move(labels));
}

}  // namespace jordan
