#include "dbruhat/double_bruhat.hpp"

#include <algorithm>
#include <set>

namespace dbruhat {

LabelledPath::LabelledPath(WeylElement start, std::vector<PathEdge> edges) : start_(std::move(start)), edges_(std::move(edges)) {
  const RootSystem& R = start_.system();
  for (const auto& e : edges_)
    if (e.root < 0 || !R.is_positive(e.root)) throw DomainError("path edge roots must be positive");
}

std::vector<WeylElement> LabelledPath::vertices() const {
  const RootSystem& R = start_.system();
  std::vector<WeylElement> out{start_};
  for (const auto& e : edges_) out.push_back(out.back() * WeylElement::reflection(R, e.root));
  return out;
}

WeylElement LabelledPath::end() const { return vertices().back(); }

Coweight LabelledPath::weight() const {
  const RootSystem& R = start_.system();
  Coweight w(R.rank());
  for (const auto& e : edges_) w += e.label * R.coroot(e.root);
  return w;
}

int LabelledPath::short_count() const {
  const RootSystem& R = start_.system();
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [&](const PathEdge& e) { return !R.is_long(e.root); }));
}

bool LabelledPath::respects_label_bounds() const {
  const RootSystem& R = start_.system();
  WeylElement u = start_;
  for (const auto& e : edges_) {
    if (e.label < (R.is_positive(u(e.root)) ? 0 : 1)) return false;
    u = u * WeylElement::reflection(R, e.root);
  }
  return true;
}

bool LabelledPath::increasing_for(const ReflectionOrder& order, int n) const {
  int last = -1;
  for (const auto& e : edges_) {
    const int p = order.position(e.root);
    if (p <= last || p >= n) return false;
    last = p;
  }
  return true;
}

WeightWindow::WeightWindow(std::vector<Coweight> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("weight window must be non-empty");
  std::sort(weights_.begin(), weights_.end());
  weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
  cap_ = weights_.front();
  for (const auto& w : weights_) {
    if (w.rank() != cap_.rank()) throw DomainError("window weights of mixed rank");
    for (int i = 0; i < w.rank(); ++i) cap_[i] = std::max(cap_[i], w[i]);
  }
}

WeightWindow WeightWindow::box(const Coweight& upper) {
  std::vector<Coweight> all;
  Coweight cur(upper.rank());
  if (!upper.nonnegative()) throw DomainError("box window needs a nonnegative corner");
  for (;;) {
    all.push_back(cur);
    int i = 0;
    while (i < upper.rank() && cur[i] == upper[i]) cur[i++] = 0;
    if (i == upper.rank()) break;
    ++cur[i];
  }
  return WeightWindow(std::move(all));
}

bool WeightWindow::contains(const Coweight& w) const { return std::binary_search(weights_.begin(), weights_.end(), w); }

void WeightMultiset::add(const WeightKey& key, std::uint64_t mult) {
  ensure(key.short_count + key.long_count == key.length, "inconsistent short/long counts");
  if (mult) entries_[key] += mult;
}

std::uint64_t WeightMultiset::multiplicity(const WeightKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? 0 : it->second;
}

std::map<int, std::uint64_t> WeightMultiset::lengths_at(const Coweight& w) const {
  std::map<int, std::uint64_t> out;
  for (const auto& [k, m] : entries_)
    if (k.weight == w) out[k.length] += m;
  return out;
}

std::optional<int> WeightMultiset::max_length() const {
  std::optional<int> best;
  for (const auto& [k, m] : entries_) best = std::max(best.value_or(k.length), k.length);
  return best;
}

std::vector<DbgEdge> dbg_edges(const WeylGroup& W) {
  std::vector<DbgEdge> out;
  const int N = W.system().num_positive();
  for (ElementId w = 0; w < static_cast<ElementId>(W.order()); ++w)
    for (RootIndex b = 0; b < N; ++b) out.push_back({w, b, W.times_reflection(w, b)});
  return out;
}

namespace {

struct Walker {
  const WeylGroup& W;
  const RootSystem& R;
  const ReflectionOrder& order;
  int n;
  const Coweight& cap;
  const std::function<void(const PathVisit&)>& visit;
  std::vector<PathEdge> edges;

  void run(ElementId u, const Coweight& weight, int shorts, int longs, int last) {
    visit(PathVisit{u, weight, shorts, longs, last, edges});
    for (int j = last + 1; j < n; ++j) {
      const RootIndex beta = order.beta(j);
      const Coweight& c = R.coroot(beta);
      const int lower = R.is_positive(W.apply(u, beta)) ? 0 : 1;
      Coweight w = weight + lower * c;
      if (!w.dominated_by(cap)) continue;
      const ElementId next = W.times_reflection(u, beta);
      const bool is_long = R.is_long(beta);
      for (int m = lower; w.dominated_by(cap); ++m, w += c) {
        edges.push_back({beta, m});
        run(next, w, shorts + (is_long ? 0 : 1), longs + (is_long ? 1 : 0), j);
        edges.pop_back();
      }
    }
  }
};

}  // namespace

void for_each_bounded_path(const WeylGroup& W, const ReflectionOrder& order, int n, ElementId u, const Coweight& cap,
                           const std::function<void(const PathVisit&)>& visit) {
  const RootSystem& R = W.system();
  R.require_same(order.system());
  if (n < 0 || n > order.size()) throw DomainError("bound out of range");
  if (cap.rank() != R.rank()) throw DomainError("weight has the wrong rank");
  const Coweight zero(R.rank());
  if (!zero.dominated_by(cap)) return;
  Walker walker{W, R, order, n, cap, visit, {}};
  walker.run(u, zero, 0, 0, -1);
}

std::vector<LabelledPath> enumerate_increasing_paths(const WeylGroup& W, const ReflectionOrder& order, int n,
                                                     const WeylElement& u, const WeylElement& v, const Coweight& target) {
  std::vector<LabelledPath> out;
  const ElementId vid = W.id(v);
  for_each_bounded_path(W, order, n, W.id(u), target, [&](const PathVisit& p) {
    if (p.vertex == vid && p.weight == target) out.emplace_back(u, std::vector<PathEdge>(p.edges.begin(), p.edges.end()));
  });
  return out;
}

std::vector<WeightMultiset> wts_census(const WeylGroup& W, const ReflectionOrder& order, int n, const WeylElement& u,
                                       const WeightWindow& window) {
  std::vector<WeightMultiset> out(W.order(), WeightMultiset(window));
  for_each_bounded_path(W, order, n, W.id(u), window.cap(), [&](const PathVisit& p) {
    if (window.contains(p.weight))
      out[static_cast<std::size_t>(p.vertex)].add({p.weight, p.length(), p.short_count, p.long_count});
  });
  return out;
}

WeightMultiset wts_with_order(const WeylGroup& W, const ReflectionOrder& order, int n, const WeylElement& u,
                              const WeylElement& v, const WeightWindow& window) {
  WeightMultiset out(window);
  const ElementId vid = W.id(v);
  for_each_bounded_path(W, order, n, W.id(u), window.cap(), [&](const PathVisit& p) {
    if (p.vertex == vid && window.contains(p.weight)) out.add({p.weight, p.length(), p.short_count, p.long_count});
  });
  return out;
}

WeightMultiset wts_multiset(const WeylGroup& W, const WeylElement& u, const WeylElement& v, const WeylElement& v2,
                            const WeightWindow& window) {
  auto [order, n] = order_with_suffix(v.inverse() * v2);
  return wts_with_order(W, order, n, u, v, window);
}

LabelledPath path_dual(const LabelledPath& p, const ReflectionOrder& order) {
  if (!p.increasing_for(order, order.size())) throw DomainError("path is not increasing for the given order");
  const WeylElement w0 = longest_element(p.start().system());
  std::vector<PathEdge> rev(p.edges().rbegin(), p.edges().rend());
  return LabelledPath(w0 * p.end(), std::move(rev));
}

LabelledPath path_minus_w0(const LabelledPath& p, const ReflectionOrder& order) {
  if (!p.increasing_for(order, order.size())) throw DomainError("path is not increasing for the given order");
  const RootSystem& R = p.start().system();
  const WeylElement w0 = longest_element(R);
  std::vector<PathEdge> edges;
  for (const auto& e : p.edges()) edges.push_back({R.negate(w0(e.root)), e.label});
  return LabelledPath(w0 * p.start() * w0, std::move(edges));
}

std::optional<int> max_increasing_length(const WeylElement& u, const WeylElement& v, const WeylElement& v2) {
  const WeylElement a = v.inverse() * v2;
  const WeylElement b = u.inverse() * v2;
  if (!bruhat_leq(a, b)) return std::nullopt;
  return b.length() - a.length();
}

std::map<YbKey, std::uint64_t> yb_compose_oracle(const WeylGroup& W, const ReflectionOrder& order, int n,
                                                 const WeylElement& u, const WeightWindow& window) {
  const RootSystem& R = W.system();
  if (n < 0 || n > order.size()) throw DomainError("bound out of range");
  // Terms are kept as (w, weight, κ-exponents, length) with w the group
  // element of the formal sum, i.e. the inverse of the path vertex. In the
  // dual system short and long trade places; exponents are recorded in the
  // original system's terms so they compare directly with path counts.
  std::map<YbKey, std::uint64_t> terms;
  terms[{W.inverse(W.id(u)), Coweight(R.rank()), 0, 0, 0}] = 1;
  for (int k = 0; k < n; ++k) {
    const RootIndex alpha = order.beta(k);
    const Coweight& c = R.coroot(alpha);
    const WeylElement s = WeylElement::reflection(R, alpha);
    const bool is_long = R.is_long(alpha);
    std::map<YbKey, std::uint64_t> next = terms;  // the identity summand
    for (const auto& [key, coeff] : terms) {
      const WeylElement& w = W.element(key.vertex);
      const int lower = R.is_positive(w.inverse()(alpha)) ? 0 : 1;  // Φ⁺(−w⁻¹α)
      const ElementId sw = W.id(s * w);
      Coweight wt = key.weight + lower * c;
      for (int i = lower; wt.dominated_by(window.cap()); ++i, wt += c)
        next[{sw, wt, key.short_count + (is_long ? 0 : 1), key.long_count + (is_long ? 1 : 0), key.length + 1}] += coeff;
    }
    terms = std::move(next);
  }
  std::map<YbKey, std::uint64_t> out;
  for (const auto& [key, coeff] : terms)
    if (window.contains(key.weight)) out[{W.inverse(key.vertex), key.weight, key.short_count, key.long_count, key.length}] += coeff;
  return out;
}

}  // namespace dbruhat
