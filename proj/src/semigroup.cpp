#include "nsdeg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "nsdeg/checked.hpp"
#include "nsdeg/error.hpp"

namespace nsdeg {

namespace {

std::string join(std::span<const std::int64_t> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

// Minimal generators from membership alone: the multiplicity together with
// the nonzero Apéry elements that are not sums of two nonzero Apéry elements.
std::vector<std::int64_t> generators_from_window(std::int64_t frobenius, const Bitset& window) {
  if (frobenius < 0) return {1};
  auto member = [&](std::int64_t z) {
    return z >= 0 && (z > frobenius || window.test(static_cast<std::size_t>(z)));
  };
  std::int64_t m = 1;
  while (!member(m)) ++m;
  std::vector<std::int64_t> apery(static_cast<std::size_t>(m), -1);
  std::int64_t found = 0;
  for (std::int64_t z = 0; found < m; ++z) {
    auto& slot = apery[static_cast<std::size_t>(z % m)];
    if (slot < 0 && member(z)) {
      slot = z;
      ++found;
    }
  }
  std::vector<std::int64_t> nonzero(apery.begin() + 1, apery.end());
  std::sort(nonzero.begin(), nonzero.end());
  std::vector<std::int64_t> gens{m};
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    const std::int64_t w = nonzero[i];
    bool decomposable = false;
    for (std::size_t j = 0; j < i && !decomposable; ++j) {
      const std::int64_t rest = w - nonzero[j];
      if (rest < nonzero[j]) break;
      decomposable = std::binary_search(nonzero.begin(), nonzero.end(), rest);
    }
    if (!decomposable) gens.push_back(w);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() : NumericalSemigroup(-1, Bitset(1, true)) {}

NumericalSemigroup::NumericalSemigroup(std::int64_t frobenius, Bitset window)
    : frobenius_(frobenius), window_(std::move(window)) {
  gens_ = generators_from_window(frobenius_, window_);
  for (std::int64_t z = 1; z <= frobenius_; ++z)
    if (!window_.test(static_cast<std::size_t>(z))) gaps_.push_back(z);
  for (std::int64_t x : gaps_) {
    bool pseudo = true;
    for (std::int64_t g : gens_)
      if (!contains(x + g)) {
        pseudo = false;
        break;
      }
    if (pseudo) pf_.push_back(x);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> input, Limits limits) {
  if (input.empty()) throw Error(ErrorCode::EmptyGenerators, "generator list is empty");
  std::vector<std::int64_t> gens(input.begin(), input.end());
  for (std::int64_t g : gens)
    if (g <= 0) throw Error(ErrorCode::NonPositiveGenerator, std::to_string(g));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::int64_t d = 0;
  for (std::int64_t g : gens) d = std::gcd(d, g);
  if (d != 1) throw Error(ErrorCode::GcdNotOne, "gcd(" + join(gens) + ") = " + std::to_string(d));

  const std::int64_t m = gens.front();
  if (m == 1) return NumericalSemigroup();
  // frobenius >= m - 1, so the window is at least m long.
  if (m > limits.window_cap)
    throw Error(ErrorCode::Overflow, "window for multiplicity " + std::to_string(m) + " exceeds cap " +
                                         std::to_string(limits.window_cap));

  // Apéry set with respect to m by shortest paths on residues; distances past
  // the cap bound are pruned, which also keeps every sum far from int64 range.
  const std::int64_t bound = checked_add(limits.window_cap, m - 1);
  constexpr std::int64_t kUnreached = -1;
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m), kUnreached);
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [dv, r] = queue.top();
    queue.pop();
    if (dv != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const std::int64_t g = gens[i];
      if (g > bound - dv) continue;
      const std::int64_t nd = dv + g;
      auto& slot = dist[static_cast<std::size_t>(nd % m)];
      if (slot == kUnreached || nd < slot) {
        slot = nd;
        queue.emplace(nd, nd % m);
      }
    }
  }
  std::int64_t max_apery = 0;
  for (std::int64_t w : dist) {
    if (w == kUnreached)
      throw Error(ErrorCode::Overflow, "frobenius number of <" + join(gens) + "> exceeds window cap " +
                                           std::to_string(limits.window_cap));
    max_apery = std::max(max_apery, w);
  }
  const std::int64_t frobenius = max_apery - m;
  auto member = [&](std::int64_t z) { return z >= 0 && z >= dist[static_cast<std::size_t>(z % m)]; };

  Bitset window(static_cast<std::size_t>(frobenius + 2));
  for (std::int64_t z = 0; z <= frobenius + 1; ++z)
    if (member(z)) window.set(static_cast<std::size_t>(z));

  // g is redundant iff g - h ∈ S for some smaller input generator h; anything
  // above frobenius + m is redundant outright.
  std::vector<std::int64_t> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::int64_t g = gens[i];
    if (g > frobenius + m) break;
    bool redundant = false;
    for (std::size_t j = 0; j < i && !redundant; ++j) redundant = member(g - gens[j]);
    if (!redundant) minimal.push_back(g);
  }

  NumericalSemigroup s(frobenius, std::move(window));
  if (s.gens_ != minimal)
    throw Error(ErrorCode::InternalInvariantViolation,
                "generator reduction mismatch: <" + join(minimal) + "> vs <" + join(s.gens_) + ">");
  return s;
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::span<const std::int64_t> input) {
  std::vector<std::int64_t> gaps(input.begin(), input.end());
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (gaps.empty()) return NumericalSemigroup();
  if (gaps.front() <= 0) throw Error(ErrorCode::InvalidGapSet, "gaps must be positive");
  const std::int64_t frobenius = gaps.back();
  Bitset window(static_cast<std::size_t>(frobenius + 2), true);
  for (std::int64_t g : gaps) window.reset(static_cast<std::size_t>(g));
  for (std::int64_t x = 1; x <= frobenius; ++x) {
    if (!window.test(static_cast<std::size_t>(x))) continue;
    for (std::int64_t y = x; x + y <= frobenius; ++y)
      if (window.test(static_cast<std::size_t>(y)) && !window.test(static_cast<std::size_t>(x + y)))
        throw Error(ErrorCode::InvalidGapSet,
                    std::to_string(x) + " + " + std::to_string(y) + " is listed as a gap");
  }
  return NumericalSemigroup(frobenius, std::move(window));
}

NumericalSemigroup NumericalSemigroup::remove_generator(std::int64_t g) const {
  if (g <= frobenius_ || !std::binary_search(gens_.begin(), gens_.end(), g))
    throw Error(ErrorCode::NotMember, std::to_string(g) + " is not a minimal generator above the Frobenius number");
  Bitset window(static_cast<std::size_t>(g + 2), true);
  for (std::int64_t z : gaps_) window.reset(static_cast<std::size_t>(z));
  window.reset(static_cast<std::size_t>(g));
  return NumericalSemigroup(g, std::move(window));
}

std::vector<std::int64_t> NumericalSemigroup::apery_set(std::int64_t n) const {
  if (n <= 0 || !contains(n)) throw Error(ErrorCode::NotMember, std::to_string(n) + " is not a positive element");
  std::vector<std::int64_t> apery(static_cast<std::size_t>(n), -1);
  std::int64_t found = 0;
  for (std::int64_t z = 0; found < n; ++z) {
    auto& slot = apery[static_cast<std::size_t>(z % n)];
    if (slot < 0 && contains(z)) {
      slot = z;
      ++found;
    }
  }
  return apery;
}

const std::vector<std::int64_t>& NumericalSemigroup::pseudo_frobenius() const {
  if (is_full()) throw Error(ErrorCode::FullSemigroup, "pseudo-Frobenius set of N is undefined");
  return pf_;
}

bool NumericalSemigroup::is_symmetric() const {
  if (is_full()) throw Error(ErrorCode::FullSemigroup, "symmetry of N is undefined");
  for (std::int64_t x = 0; x <= frobenius_; ++x)
    if (contains(x) == contains(frobenius_ - x)) return false;
  return true;
}

}  // namespace nsdeg
