#include "wsg/numerical_semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "wsg/checked.hpp"
#include "wsg/error.hpp"

namespace wsg {

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const std::int64_t> generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyInput, "no generators");
  std::int64_t g = 0;
  for (auto x : generators) {
    if (x <= 0) throw Error(ErrorCode::NonPositive, "generators must be positive");
    g = std::gcd(g, x);
  }
  if (g != 1) throw Error(ErrorCode::GcdNotOne, "generators have gcd " + std::to_string(g));

  NumericalSemigroup s;
  s.generators_.assign(generators.begin(), generators.end());
  const std::int64_t m0 = *std::min_element(generators.begin(), generators.end());
  s.multiplicity_ = m0;

  // Dijkstra over residues mod m0: an edge r -> r + gen (mod m0) of weight gen.
  constexpr auto kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(m0), kInf);
  using Item = std::pair<std::int64_t, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (auto gen : generators) {
      const std::int64_t next = (r + gen) % m0;
      const std::int64_t nd = checked::add(d, gen);
      if (nd < dist[static_cast<std::size_t>(next)]) {
        dist[static_cast<std::size_t>(next)] = nd;
        queue.emplace(nd, next);
      }
    }
  }
  s.apery_ = std::move(dist);
  s.frobenius_ = *std::max_element(s.apery_.begin(), s.apery_.end()) - m0;

  for (std::int64_t r = 0; r < m0; ++r)
    for (std::int64_t x = r; x < s.apery_[static_cast<std::size_t>(r)]; x += m0) s.gaps_.push_back(x);
  std::sort(s.gaps_.begin(), s.gaps_.end());
  return s;
}

bool NumericalSemigroup::contains(std::int64_t x) const noexcept {
  if (x < 0) return false;
  return apery_[static_cast<std::size_t>(x % multiplicity_)] <= x;
}

}  // namespace wsg
