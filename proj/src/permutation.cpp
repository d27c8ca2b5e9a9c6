#include "jordan/permutation.hpp"

#include <numeric>
#include <utility>

#include "jordan/errors.hpp"

namespace jordan {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || hit[v]) throw Error(Errc::invalid_argument, "not a permutation");
    hit[v] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::initializer_list<std::initializer_list<int>> cycles) {
  Permutation p(degree);
  for (const auto& cyc : cycles) {
    const std::vector<int> pts(cyc);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int from = pts[i];
      const int to = pts[(i + 1) % pts.size()];
      if (from < 1 || to < 1 || static_cast<std::size_t>(from) > degree ||
          static_cast<std::size_t>(to) > degree)
        throw Error(Errc::invalid_argument, "cycle point out of range");
      p.images_[from - 1] = static_cast<std::uint16_t>(to - 1);
    }
  }
  return Permutation(p.images_);
}

Permutation Permutation::inverse() const {
  std::vector<std::uint16_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint16_t>(i);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (done[i] || images_[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw Error(Errc::invalid_argument, "degree mismatch");
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

}  // namespace jordan
