#include "dbruhat/oracles.hpp"

#include <deque>
#include <functional>

namespace dbruhat::oracle {

int coxeter_length(const AffineElement& x) {
  const RootSystem& R = x.system();
  std::vector<AffineRoot> simple;
  for (int i = 0; i < R.rank(); ++i) simple.push_back({R.simple(i), 0});
  simple.push_back({R.negate(R.highest_root()), 1});

  AffineElement cur = x;
  int steps = 0;
  for (;;) {
    auto it = std::find_if(simple.begin(), simple.end(), [&](const AffineRoot& a) { return !is_positive(R, cur(a)); });
    if (it == simple.end()) break;
    cur = cur * affine_reflection(R, *it);
    ++steps;
  }
  ensure(cur == AffineElement::identity(R), "greedy reduction stopped away from the identity");
  return steps;
}

BruhatClosure::BruhatClosure(const WeylGroup& W) : below_(W.order(), std::vector<bool>(W.order(), false)) {
  const RootSystem& R = W.system();
  // Ids are in shortlex order, so every cover w → ws_α (length up) points
  // to a larger id and one pass in id order closes the relation.
  for (ElementId b = 0; b < static_cast<ElementId>(W.order()); ++b) {
    auto& row = below_[static_cast<std::size_t>(b)];
    row[static_cast<std::size_t>(b)] = true;
    for (RootIndex a = 0; a < R.num_positive(); ++a) {
      const ElementId c = W.times_reflection(b, a);
      if (W.length(c) >= W.length(b)) continue;
      const auto& lower = below_[static_cast<std::size_t>(c)];
      for (std::size_t i = 0; i < row.size(); ++i)
        if (lower[i]) row[i] = true;
    }
  }
}

std::vector<AdmissibleType> admissible_types_brute(const AffineElement& x, const WeylElement& u, const ReflectionOrder& order,
                                                   int value_bound) {
  const int N = order.size();
  std::vector<AdmissibleType> out;
  std::vector<TypeEntry> cur;
  std::function<void(int)> rec = [&](int next_index) {
    if (auto tau = try_admissible(cur, u, order); tau && tau->x() == x) out.push_back(*tau);
    for (int idx = next_index; idx <= N; ++idx)
      for (int v = -value_bound; v <= value_bound; ++v) {
        cur.push_back({idx, v});
        rec(idx + 1);
        cur.pop_back();
      }
  };
  rec(1);
  return out;
}

std::uint64_t partitions(const RootSystem& R, const Coweight& lambda) {
  std::function<std::uint64_t(int, const Coweight&)> go = [&](int a, const Coweight& rest) -> std::uint64_t {
    if (rest.is_zero()) return 1;
    if (a == R.num_positive()) return 0;
    std::uint64_t total = 0;
    for (Coweight r = rest; r.nonnegative(); r = r - R.coroot(a)) total += go(a + 1, r);
    return total;
  };
  return lambda.nonnegative() ? go(0, lambda) : 0;
}

}  // namespace dbruhat::oracle
