#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dbruhat/double_bruhat.hpp"

namespace dbruhat {

struct QbgEdge {
  ElementId from;
  RootIndex root;
  ElementId to;
  bool up;
  Coweight weight;  // 0 on up edges, α∨ on down edges
};

class QuantumBruhatGraph {
 public:
  explicit QuantumBruhatGraph(const WeylGroup& W);

  const WeylGroup& group() const { return *W_; }
  const std::vector<QbgEdge>& edges() const { return edges_; }
  const std::vector<std::size_t>& out_edges(ElementId w) const { return out_[static_cast<std::size_t>(w)]; }

  struct Distances {
    std::vector<int> dist;          // −1 when unreachable
    std::vector<Coweight> weight;   // weight of every shortest path
  };
  // Breadth-first search from u; asserts that all shortest paths to a
  // vertex carry the same weight.
  Distances from(ElementId u) const;
  std::pair<int, Coweight> distance_weight(const WeylElement& u, const WeylElement& v) const;

 private:
  const WeylGroup* W_;
  std::vector<QbgEdge> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

QuantumBruhatGraph build_qbg(const WeylGroup& W);

struct QbgCompareReport {
  int distance = 0;
  Coweight wt;
  std::uint64_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks ω ≥ wt(u⇒v), e ≤ ⟨ω,2ρ⟩ + ℓ(v) − ℓ(u) with equality only at
// (wt, d), and multiplicity one at (wt, d), over the window.
QbgCompareReport qbg_dbg_compare(const QuantumBruhatGraph& Q, const WeylElement& u, const WeylElement& v,
                                 const WeightWindow& window);

}  // namespace dbruhat
