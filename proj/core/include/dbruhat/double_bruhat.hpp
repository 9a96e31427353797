#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dbruhat/reflection_order.hpp"

namespace dbruhat {

struct PathEdge {
  RootIndex root = 0;  // positive root
  int label = 0;
  friend bool operator==(const PathEdge&, const PathEdge&) = default;
};

// u₁ →(α₁,m₁) u₂ → ⋯ in the double Bruhat graph, u_{i+1} = u_i s_{α_i}.
class LabelledPath {
 public:
  LabelledPath(WeylElement start, std::vector<PathEdge> edges);

  const WeylElement& start() const { return start_; }
  const std::vector<PathEdge>& edges() const { return edges_; }
  std::vector<WeylElement> vertices() const;
  WeylElement end() const;
  Coweight weight() const;
  int length() const { return static_cast<int>(edges_.size()); }
  int short_count() const;
  int long_count() const { return length() - short_count(); }

  // m_i ≥ Φ⁺(−u_iα_i) on every edge.
  bool respects_label_bounds() const;
  // Strictly increasing and using only β₁..β_n.
  bool increasing_for(const ReflectionOrder& order, int n) const;

  friend bool operator==(const LabelledPath&, const LabelledPath&) = default;

 private:
  WeylElement start_;
  std::vector<PathEdge> edges_;
};

struct WeightKey {
  Coweight weight;
  int length = 0;
  int short_count = 0;
  int long_count = 0;
  friend bool operator==(const WeightKey&, const WeightKey&) = default;
  friend auto operator<=>(const WeightKey&, const WeightKey&) = default;
};

// Window of weights a census is computed for: finite, sorted, unique.
class WeightWindow {
 public:
  explicit WeightWindow(std::vector<Coweight> weights);
  // {ω : 0 ≤ ω ≤ upper} coordinatewise.
  static WeightWindow box(const Coweight& upper);
  static WeightWindow single(const Coweight& w) { return WeightWindow({w}); }

  const std::vector<Coweight>& weights() const { return weights_; }
  const Coweight& cap() const { return cap_; }
  bool contains(const Coweight& w) const;
  friend bool operator==(const WeightWindow& a, const WeightWindow& b) { return a.weights_ == b.weights_; }

 private:
  std::vector<Coweight> weights_;
  Coweight cap_;
};

class WeightMultiset {
 public:
  explicit WeightMultiset(WeightWindow window) : window_(std::move(window)) {}

  void add(const WeightKey& key, std::uint64_t mult = 1);
  std::uint64_t multiplicity(const WeightKey& key) const;
  const std::map<WeightKey, std::uint64_t>& entries() const { return entries_; }
  const WeightWindow& window() const { return window_; }
  bool empty() const { return entries_.empty(); }
  // Coarse view: length ↦ multiplicity at a single weight.
  std::map<int, std::uint64_t> lengths_at(const Coweight& w) const;
  std::optional<int> max_length() const;

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b) { return a.entries_ == b.entries_; }

 private:
  WeightWindow window_;
  std::map<WeightKey, std::uint64_t> entries_;
};

struct DbgEdge {
  ElementId from;
  RootIndex root;
  ElementId to;
};
std::vector<DbgEdge> dbg_edges(const WeylGroup& W);

// State handed to path visitors; spans are valid only during the callback.
struct PathVisit {
  ElementId vertex;
  const Coweight& weight;
  int short_count;
  int long_count;
  int last_position;  // position of the last root in the order, −1 when empty
  std::span<const PathEdge> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

// Depth-first walk over every increasing path from u that uses only
// β₁..β_n and whose weight stays coordinatewise ≤ cap. Every prefix is
// visited once, the empty path included.
void for_each_bounded_path(const WeylGroup& W, const ReflectionOrder& order, int n, ElementId u, const Coweight& cap,
                           const std::function<void(const PathVisit&)>& visit);

std::vector<LabelledPath> enumerate_increasing_paths(const WeylGroup& W, const ReflectionOrder& order, int n,
                                                     const WeylElement& u, const WeylElement& v, const Coweight& target);

// Census of all end vertices at once: result[id] is the multiset of paths u ⇒ element(id).
std::vector<WeightMultiset> wts_census(const WeylGroup& W, const ReflectionOrder& order, int n, const WeylElement& u,
                                       const WeightWindow& window);
WeightMultiset wts_with_order(const WeylGroup& W, const ReflectionOrder& order, int n, const WeylElement& u,
                              const WeylElement& v, const WeightWindow& window);
// wts(u ⇒ v ⇢ v2) using order_with_suffix(v⁻¹v2).
WeightMultiset wts_multiset(const WeylGroup& W, const WeylElement& u, const WeylElement& v, const WeylElement& v2,
                            const WeightWindow& window);

// Path reversal through w₀: result runs w₀·end ⇒ w₀·start, increasing for the reversed order.
LabelledPath path_dual(const LabelledPath& p, const ReflectionOrder& order);
// Conjugation by w₀ with roots −w₀α; increasing for order.minus_w0().
LabelledPath path_minus_w0(const LabelledPath& p, const ReflectionOrder& order);

std::optional<int> max_increasing_length(const WeylElement& u, const WeylElement& v, const WeylElement& v2);

struct YbKey {
  ElementId vertex;
  Coweight weight;
  int short_count;
  int long_count;
  int length;
  friend auto operator<=>(const YbKey&, const YbKey&) = default;
};

// Composes the truncated Yang–Baxter operators R_{β₁}, …, R_{β_n} (first
// one applied first) on the dual root system, starting from u⁻¹.
std::map<YbKey, std::uint64_t> yb_compose_oracle(const WeylGroup& W, const ReflectionOrder& order, int n,
                                                 const WeylElement& u, const WeightWindow& window);

}  // namespace dbruhat
