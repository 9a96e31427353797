#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dbruhat/lattice.hpp"

namespace dbruhat {

// Index into the root table. Positive roots occupy [0, N), with the simple
// roots first; the negative of root i is stored at i + N.
using RootIndex = int;

struct CartanType {
  char family = 'A';
  int rank = 1;

  static CartanType parse(std::string_view label);
  std::string str() const;
  bool simply_laced() const { return family == 'A' || family == 'D' || family == 'E'; }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

class RootSystem {
 public:
  explicit RootSystem(CartanType type);
  static RootSystem build(std::string_view label) { return RootSystem(CartanType::parse(label)); }

  const CartanType& type() const { return d_->type; }
  std::string label() const { return d_->type.str(); }
  int rank() const { return d_->type.rank; }
  int num_positive() const { return d_->num_positive; }
  int num_roots() const { return 2 * d_->num_positive; }

  const RootVector& root(RootIndex i) const { return d_->roots[static_cast<std::size_t>(i)]; }
  const Coweight& coroot(RootIndex i) const { return d_->coroots[static_cast<std::size_t>(i)]; }
  RootIndex negate(RootIndex i) const { return i < num_positive() ? i + num_positive() : i - num_positive(); }
  bool is_positive(RootIndex i) const { return i < num_positive(); }
  RootIndex positive_part(RootIndex i) const { return is_positive(i) ? i : negate(i); }
  RootIndex simple(int i) const { return i; }
  bool is_long(RootIndex i) const { return d_->is_long[static_cast<std::size_t>(positive_part(i))]; }
  RootIndex highest_root() const { return d_->highest; }

  std::optional<RootIndex> find(const RootVector& v) const;
  RootIndex index_of(const RootVector& v) const;

  // ⟨α_i∨, α_j⟩.
  int cartan(int i, int j) const { return d_->cartan[static_cast<std::size_t>(i * rank() + j)]; }
  int pair(const Coweight& mu, const RootVector& alpha) const;
  // ⟨γ∨, δ⟩ for root indices, from the table.
  int pair(RootIndex coroot_of, RootIndex root) const {
    return d_->pairing[static_cast<std::size_t>(coroot_of * num_roots() + root)];
  }
  // s_a(b) on root indices, a arbitrary.
  RootIndex reflect(RootIndex a, RootIndex b) const {
    return d_->reflect[static_cast<std::size_t>(positive_part(a) * num_roots() + b)];
  }
  RootVector reflect(RootIndex a, const RootVector& v) const;
  Coweight reflect(RootIndex a, const Coweight& mu) const;

  const RootVector& two_rho() const { return d_->two_rho; }
  const Coweight& two_rho_check() const { return d_->two_rho_check; }
  // Squared length of a root in the integral symmetric form normalized so
  // that the shortest root has a fixed even value.
  int norm(RootIndex i) const;

  bool same_as(const RootSystem& o) const { return d_ == o.d_ || d_->type == o.d_->type; }
  void require_same(const RootSystem& o) const;

 private:
  struct Data {
    CartanType type;
    int num_positive = 0;
    std::vector<int> cartan;
    std::vector<int> form;  // symmetric form on simple roots
    std::vector<RootVector> roots;
    std::vector<Coweight> coroots;
    std::vector<bool> is_long;
    std::vector<int> pairing;
    std::vector<RootIndex> reflect;
    RootVector two_rho;
    Coweight two_rho_check;
    RootIndex highest = 0;
    std::unordered_map<RootVector, RootIndex> index;
  };
  std::shared_ptr<const Data> d_;
};

}  // namespace dbruhat
