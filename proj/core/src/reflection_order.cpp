#include "dbruhat/reflection_order.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

namespace dbruhat {

ReflectionOrder::ReflectionOrder(RootSystem R, std::vector<RootIndex> seq, std::vector<int> word)
    : R_(std::move(R)), seq_(std::move(seq)), word_(std::move(word)), pos_(static_cast<std::size_t>(R_.num_positive()), -1) {
  for (int i = 0; i < size(); ++i) pos_[static_cast<std::size_t>(seq_[static_cast<std::size_t>(i)])] = i;
}

ReflectionOrder ReflectionOrder::from_reduced_word(const RootSystem& R, std::span<const int> word) {
  const int N = R.num_positive();
  std::vector<std::uint16_t> w(static_cast<std::size_t>(R.num_roots()));
  std::iota(w.begin(), w.end(), std::uint16_t{0});
  std::vector<RootIndex> seq;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const int a = word[i];
    if (a < 0 || a >= R.rank()) throw DomainError("simple index out of range at position " + std::to_string(i + 1));
    const RootIndex beta = w[static_cast<std::size_t>(a)];
    if (!R.is_positive(beta)) throw DomainError("word is not reduced at position " + std::to_string(i + 1));
    seq.push_back(beta);
    std::vector<std::uint16_t> next(w.size());
    for (int r = 0; r < R.num_roots(); ++r) next[static_cast<std::size_t>(r)] = w[static_cast<std::size_t>(R.reflect(a, r))];
    w = std::move(next);
  }
  if (static_cast<int>(seq.size()) != N)
    throw DomainError("word has length " + std::to_string(seq.size()) + " but the longest element has length " + std::to_string(N));
  return ReflectionOrder(R, std::move(seq), std::vector<int>(word.begin(), word.end()));
}

ReflectionOrder ReflectionOrder::from_roots(const RootSystem& R, std::span<const RootIndex> seq) {
  if (!is_reflection_order(R, seq)) throw DomainError("sequence violates convexity");
  WeylElement w = WeylElement::identity(R);
  std::vector<int> word;
  for (RootIndex b : seq) {
    const RootIndex g = w.inverse()(b);
    ensure(g < R.rank(), "convex order does not come from a reduced word");
    word.push_back(g);
    w = w * WeylElement::simple_reflection(R, g);
  }
  return ReflectionOrder(R, std::vector<RootIndex>(seq.begin(), seq.end()), std::move(word));
}

ReflectionOrder ReflectionOrder::reversed() const {
  std::vector<RootIndex> rev(seq_.rbegin(), seq_.rend());
  return from_roots(R_, rev);
}

ReflectionOrder ReflectionOrder::minus_w0() const {
  const WeylElement w0 = longest_element(R_);
  std::vector<RootIndex> out;
  for (RootIndex b : seq_) out.push_back(R_.negate(w0(b)));
  return from_roots(R_, out);
}

bool is_reflection_order(const RootSystem& R, std::span<const RootIndex> seq) {
  const int N = R.num_positive();
  std::vector<int> pos(static_cast<std::size_t>(N), -1);
  if (static_cast<int>(seq.size()) != N) throw DomainError("sequence is not a permutation of the positive roots");
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const RootIndex b = seq[i];
    if (b < 0 || b >= N || pos[static_cast<std::size_t>(b)] >= 0)
      throw DomainError("sequence is not a permutation of the positive roots");
    pos[static_cast<std::size_t>(b)] = static_cast<int>(i);
  }
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      auto s = R.find(R.root(a) + R.root(b));
      if (!s) continue;
      const int pa = pos[static_cast<std::size_t>(a)], pb = pos[static_cast<std::size_t>(b)], ps = pos[static_cast<std::size_t>(*s)];
      if (!((pa < ps && ps < pb) || (pb < ps && ps < pa))) return false;
    }
  return true;
}

ReflectionOrder canonical_order(const RootSystem& R) {
  return ReflectionOrder::from_reduced_word(R, longest_element(R).reduced_word());
}

void for_each_order(const RootSystem& R, const std::function<void(const ReflectionOrder&)>& fn) {
  if (R.rank() > kMaxEnumerationRank)
    throw DomainError("order enumeration is limited to rank " + std::to_string(kMaxEnumerationRank) +
                      "; pass an explicit reduced word instead");
  const int N = R.num_positive();
  std::vector<int> word;
  std::vector<std::vector<std::uint16_t>> stack;
  std::vector<std::uint16_t> e(static_cast<std::size_t>(R.num_roots()));
  std::iota(e.begin(), e.end(), std::uint16_t{0});
  stack.push_back(e);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == N) {
      fn(ReflectionOrder::from_reduced_word(R, word));
      return;
    }
    const auto cur = stack.back();
    for (int a = 0; a < R.rank(); ++a) {
      if (!R.is_positive(cur[static_cast<std::size_t>(a)])) continue;
      std::vector<std::uint16_t> next(cur.size());
      for (int r = 0; r < R.num_roots(); ++r) next[static_cast<std::size_t>(r)] = cur[static_cast<std::size_t>(R.reflect(a, r))];
      word.push_back(a);
      stack.push_back(std::move(next));
      self(self);
      stack.pop_back();
      word.pop_back();
    }
  };
  rec(rec);
}

std::vector<ReflectionOrder> enumerate_orders(const RootSystem& R) {
  std::vector<ReflectionOrder> out;
  for_each_order(R, [&](const ReflectionOrder& o) { out.push_back(o); });
  return out;
}

std::uint64_t count_reduced_words(const WeylElement& w) {
  std::unordered_map<WeylElement, std::uint64_t> memo;
  const RootSystem& R = w.system();
  auto rec = [&](auto&& self, const WeylElement& x) -> std::uint64_t {
    if (x.is_identity()) return 1;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const WeylElement xi = x.inverse();
    std::uint64_t total = 0;
    for (int i = 0; i < R.rank(); ++i)
      if (!R.is_positive(xi(i))) total += self(self, WeylElement::simple_reflection(R, i) * x);
    memo.emplace(x, total);
    return total;
  };
  return rec(rec, w);
}

WeylElement pi_gt(const ReflectionOrder& order, int n) {
  if (n < 0 || n > order.size()) throw DomainError("bound out of range");
  const RootSystem& R = order.system();
  WeylElement w = WeylElement::identity(R);
  for (int i = n; i < order.size(); ++i) w = w * WeylElement::reflection(R, order.beta(i));
  return w;
}

WeylElement prefix_product(const ReflectionOrder& order, int n) {
  if (n < 0 || n > order.size()) throw DomainError("bound out of range");
  const RootSystem& R = order.system();
  WeylElement w = WeylElement::identity(R);
  for (int i = 0; i < n; ++i) w = w * WeylElement::reflection(R, order.beta(i));
  return w;
}

std::pair<ReflectionOrder, int> order_with_suffix(const WeylElement& g) {
  const RootSystem& R = g.system();
  const WeylElement w0 = longest_element(R);
  const WeylElement head = g * w0;
  const WeylElement tail = head.inverse() * w0;
  std::vector<int> word = head.reduced_word();
  word.insert(word.end(), tail.reduced_word().begin(), tail.reduced_word().end());
  auto order = ReflectionOrder::from_reduced_word(R, word);
  const int n = head.length();
  ensure(pi_gt(order, n) == g, "suffix product mismatch");
  return {std::move(order), n};
}

}  // namespace dbruhat
