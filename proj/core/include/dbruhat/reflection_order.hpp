#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "dbruhat/weyl.hpp"

namespace dbruhat {

// Total order β₁ ≺ ⋯ ≺ β_N on Φ⁺ coming from a reduced word of w₀, with
// β_i = s_{a₁}⋯s_{a_{i−1}}(a_i). Positions are 0-based internally.
class ReflectionOrder {
 public:
  static ReflectionOrder from_reduced_word(const RootSystem& R, std::span<const int> word);
  // Validates convexity and recovers the generating word.
  static ReflectionOrder from_roots(const RootSystem& R, std::span<const RootIndex> seq);

  const RootSystem& system() const { return R_; }
  int size() const { return static_cast<int>(seq_.size()); }
  const std::vector<RootIndex>& roots() const { return seq_; }
  const std::vector<int>& word() const { return word_; }
  RootIndex beta(int i) const { return seq_[static_cast<std::size_t>(i)]; }
  int position(RootIndex positive_root) const { return pos_[static_cast<std::size_t>(positive_root)]; }
  bool precedes(RootIndex a, RootIndex b) const { return position(a) < position(b); }

  ReflectionOrder reversed() const;
  // The order α ≺′ β ⟺ −w₀α ≺ −w₀β.
  ReflectionOrder minus_w0() const;

  friend bool operator==(const ReflectionOrder& a, const ReflectionOrder& b) { return a.seq_ == b.seq_; }

 private:
  ReflectionOrder(RootSystem R, std::vector<RootIndex> seq, std::vector<int> word);
  RootSystem R_;
  std::vector<RootIndex> seq_;
  std::vector<int> word_;
  std::vector<int> pos_;
};

bool is_reflection_order(const RootSystem& R, std::span<const RootIndex> seq);
ReflectionOrder canonical_order(const RootSystem& R);

inline constexpr int kMaxEnumerationRank = 4;
// Streams every reflection order once (reduced words of w₀ in lex order).
void for_each_order(const RootSystem& R, const std::function<void(const ReflectionOrder&)>& fn);
std::vector<ReflectionOrder> enumerate_orders(const RootSystem& R);
// Number of reduced words of w, by memoized recursion over left descents.
std::uint64_t count_reduced_words(const WeylElement& w);

// π_{≻n} = s_{β_{n+1}}⋯s_{β_N} with n the number of leading roots.
WeylElement pi_gt(const ReflectionOrder& order, int n);
// s_{β₁}⋯s_{β_n}.
WeylElement prefix_product(const ReflectionOrder& order, int n);
// An order and n with π_{≻n} = g, n = N − ℓ(g).
std::pair<ReflectionOrder, int> order_with_suffix(const WeylElement& g);

}  // namespace dbruhat
