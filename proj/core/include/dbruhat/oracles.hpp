#pragma once

#include <vector>

#include "dbruhat/admissible.hpp"

// Slow, definition-level recomputations used by the verification suites.
// None of them shares code paths with the fast implementations they check.
namespace dbruhat::oracle {

// Greedy reduction in the affine Coxeter system: multiply by a simple affine
// reflection r_a (a ∈ Δ_af = {(α_i,0)} ∪ {(−θ,1)}) while x(a) < 0.
int coxeter_length(const AffineElement& x);

// Bruhat order as the transitive closure of w → w s_α with ℓ going up.
class BruhatClosure {
 public:
  explicit BruhatClosure(const WeylGroup& W);
  bool leq(ElementId a, ElementId b) const { return below_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]; }

 private:
  std::vector<std::vector<bool>> below_;
};

// Every entry set with indices in 1..N and |ν_h| ≤ bound that passes the
// sign condition and multiplies out to x.
std::vector<AdmissibleType> admissible_types_brute(const AffineElement& x, const WeylElement& u, const ReflectionOrder& order,
                                                   int value_bound);

// Number of ways to write λ as a sum of positive coroots, by recursion over
// the coroots in a fixed order.
std::uint64_t partitions(const RootSystem& R, const Coweight& lambda);

}  // namespace dbruhat::oracle
