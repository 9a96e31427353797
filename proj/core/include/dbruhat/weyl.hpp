#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dbruhat/root_system.hpp"

namespace dbruhat {

// Element of the finite Weyl group, stored as the permutation it induces on
// the root table. The shortlex-minimal reduced word (0-based simple
// indices) is computed once at construction.
class WeylElement {
 public:
  static WeylElement identity(const RootSystem& R);
  static WeylElement simple_reflection(const RootSystem& R, int i);
  static WeylElement reflection(const RootSystem& R, RootIndex a);
  static WeylElement from_word(const RootSystem& R, std::span<const int> word);
  static WeylElement from_permutation(const RootSystem& R, std::vector<std::uint16_t> perm);

  const RootSystem& system() const { return R_; }
  RootIndex operator()(RootIndex r) const { return perm_[static_cast<std::size_t>(r)]; }
  std::span<const std::uint16_t> permutation() const { return perm_; }
  const std::vector<int>& reduced_word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  WeylElement inverse() const;
  WeylElement operator*(const WeylElement& o) const;

  RootVector act(const RootVector& v) const;
  Coweight act(const Coweight& mu) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }
  // Shortlex order on reduced words; used wherever a deterministic choice is needed.
  friend bool shortlex_less(const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word_ < b.word_;
  }
  std::size_t hash() const;

 private:
  WeylElement(RootSystem R, std::vector<std::uint16_t> perm);
  RootSystem R_;
  std::vector<std::uint16_t> perm_;
  std::vector<int> word_;
};

struct ShortlexLess {
  bool operator()(const WeylElement& a, const WeylElement& b) const { return shortlex_less(a, b); }
};

// Subword-criterion Bruhat order.
bool bruhat_leq(const WeylElement& w, const WeylElement& w2);
// Longest element of the parabolic subgroup W_J (J as 0-based simple indices).
WeylElement longest_element(const RootSystem& R, std::span<const int> J);
WeylElement longest_element(const RootSystem& R);
// Dominant conjugate λ of μ together with the minimal-length v with v⁻¹μ = λ.
std::pair<Coweight, WeylElement> dominant_rep(const RootSystem& R, const Coweight& mu);
bool is_dominant(const RootSystem& R, const Coweight& mu);

using ElementId = std::int32_t;

// The finite group enumerated once, with the tables the path searches need.
// Elements are numbered by shortlex order of their reduced words, so id 0 is
// the identity.
class WeylGroup {
 public:
  static constexpr std::size_t kDefaultMaxOrder = 60000;
  explicit WeylGroup(RootSystem R, std::size_t max_order = kDefaultMaxOrder);

  const RootSystem& system() const { return R_; }
  std::size_t order() const { return elements_.size(); }
  const WeylElement& element(ElementId id) const { return elements_[static_cast<std::size_t>(id)]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  ElementId id(const WeylElement& w) const;
  ElementId identity() const { return 0; }
  ElementId longest() const { return longest_; }
  int length(ElementId w) const { return element(w).length(); }
  RootIndex apply(ElementId w, RootIndex r) const { return element(w)(r); }
  // w·s_β for a positive root β.
  ElementId times_reflection(ElementId w, RootIndex beta) const {
    return right_reflect_[static_cast<std::size_t>(w) * static_cast<std::size_t>(R_.num_positive()) + static_cast<std::size_t>(beta)];
  }
  ElementId multiply(ElementId a, ElementId b) const { return id(element(a) * element(b)); }
  ElementId inverse(ElementId a) const { return inverse_[static_cast<std::size_t>(a)]; }

 private:
  struct PermHash {
    std::size_t operator()(const std::vector<std::uint16_t>& p) const;
  };
  RootSystem R_;
  std::vector<WeylElement> elements_;
  std::unordered_map<std::vector<std::uint16_t>, ElementId, PermHash> index_;
  std::vector<ElementId> right_reflect_;
  std::vector<ElementId> inverse_;
  ElementId longest_ = 0;
};

}  // namespace dbruhat

template <>
struct std::hash<dbruhat::WeylElement> {
  std::size_t operator()(const dbruhat::WeylElement& w) const { return w.hash(); }
};
