#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

#include "dbruhat/error.hpp"

namespace dbruhat {

inline constexpr int kMaxRank = 8;

// Integer vector of fixed small rank. The tag separates the root lattice
// (simple-root coordinates) from the coroot lattice (simple-coroot
// coordinates) so the two can never be mixed by accident.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(int rank) : rank_(static_cast<std::int8_t>(rank)) {
    if (rank < 0 || rank > kMaxRank) throw DomainError("rank out of range");
  }
  LatticeVector(std::initializer_list<int> xs) : LatticeVector(static_cast<int>(xs.size())) {
    std::copy(xs.begin(), xs.end(), c_.begin());
  }
  static LatticeVector from(std::span<const int> xs) {
    LatticeVector v(static_cast<int>(xs.size()));
    std::copy(xs.begin(), xs.end(), v.c_.begin());
    return v;
  }

  int rank() const { return rank_; }
  int operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const int* begin() const { return c_.data(); }
  const int* end() const { return c_.data() + rank_; }

  bool is_zero() const {
    return std::all_of(begin(), end(), [](int x) { return x == 0; });
  }
  bool nonnegative() const {
    return std::all_of(begin(), end(), [](int x) { return x >= 0; });
  }
  // Coordinatewise comparison.
  bool dominated_by(const LatticeVector& o) const {
    for (int i = 0; i < rank_; ++i)
      if (c_[i] > o.c_[i]) return false;
    return true;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    check(o);
    for (int i = 0; i < rank_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    check(o);
    for (int i = 0; i < rank_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  LatticeVector& operator*=(int k) {
    for (int i = 0; i < rank_; ++i) c_[i] *= k;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(int k, LatticeVector a) { return a *= k; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector& a, const LatticeVector& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(rank_);
    for (int i = 0; i < rank_; ++i) h = h * 1000003u ^ static_cast<std::size_t>(c_[i] + 0x9e3779b9);
    return h;
  }

 private:
  void check(const LatticeVector& o) const {
    if (o.rank_ != rank_) throw DomainError("lattice vectors of different rank");
  }

  std::array<int, kMaxRank> c_{};
  std::int8_t rank_ = 0;
};

struct RootLatticeTag {};
struct CorootLatticeTag {};

using RootVector = LatticeVector<RootLatticeTag>;  // simple-root basis
using Coweight = LatticeVector<CorootLatticeTag>;  // simple-coroot basis

}  // namespace dbruhat

template <class Tag>
struct std::hash<dbruhat::LatticeVector<Tag>> {
  std::size_t operator()(const dbruhat::LatticeVector<Tag>& v) const { return v.hash(); }
};
