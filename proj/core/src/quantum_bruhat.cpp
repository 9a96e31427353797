#include "dbruhat/quantum_bruhat.hpp"

#include <deque>
#include <sstream>

namespace dbruhat {

QuantumBruhatGraph::QuantumBruhatGraph(const WeylGroup& W) : W_(&W), out_(W.order()) {
  const RootSystem& R = W.system();
  for (ElementId w = 0; w < static_cast<ElementId>(W.order()); ++w)
    for (RootIndex a = 0; a < R.num_positive(); ++a) {
      const ElementId t = W.times_reflection(w, a);
      const int jump = W.length(t) - W.length(w);
      const int drop = 1 - R.pair(R.coroot(a), R.two_rho());
      if (jump == 1) {
        out_[static_cast<std::size_t>(w)].push_back(edges_.size());
        edges_.push_back({w, a, t, true, Coweight(R.rank())});
      } else if (jump == drop) {
        out_[static_cast<std::size_t>(w)].push_back(edges_.size());
        edges_.push_back({w, a, t, false, R.coroot(a)});
      }
    }
}

QuantumBruhatGraph build_qbg(const WeylGroup& W) { return QuantumBruhatGraph(W); }

QuantumBruhatGraph::Distances QuantumBruhatGraph::from(ElementId u) const {
  const std::size_t n = W_->order();
  Distances d{std::vector<int>(n, -1), std::vector<Coweight>(n, Coweight(W_->system().rank()))};
  std::deque<ElementId> queue{u};
  d.dist[static_cast<std::size_t>(u)] = 0;
  while (!queue.empty()) {
    const ElementId w = queue.front();
    queue.pop_front();
    for (std::size_t ei : out_[static_cast<std::size_t>(w)]) {
      const QbgEdge& e = edges_[ei];
      const auto t = static_cast<std::size_t>(e.to);
      const Coweight cand = d.weight[static_cast<std::size_t>(w)] + e.weight;
      if (d.dist[t] < 0) {
        d.dist[t] = d.dist[static_cast<std::size_t>(w)] + 1;
        d.weight[t] = cand;
        queue.push_back(e.to);
      } else if (d.dist[t] == d.dist[static_cast<std::size_t>(w)] + 1) {
        ensure(d.weight[t] == cand, "shortest quantum Bruhat paths disagree in weight");
      }
    }
  }
  return d;
}

std::pair<int, Coweight> QuantumBruhatGraph::distance_weight(const WeylElement& u, const WeylElement& v) const {
  const auto d = from(W_->id(u));
  const auto t = static_cast<std::size_t>(W_->id(v));
  ensure(d.dist[t] >= 0, "quantum Bruhat graph is not strongly connected");
  return {d.dist[t], d.weight[t]};
}

QbgCompareReport qbg_dbg_compare(const QuantumBruhatGraph& Q, const WeylElement& u, const WeylElement& v,
                                 const WeightWindow& window) {
  const WeylGroup& W = Q.group();
  const RootSystem& R = W.system();
  QbgCompareReport rep;
  std::tie(rep.distance, rep.wt) = Q.distance_weight(u, v);
  if (!window.contains(rep.wt)) throw DomainError("window must contain wt(u=>v)");
  const WeightMultiset m = wts_multiset(W, u, v, v, window);
  auto describe = [&](const Coweight& w, int e) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
    os << "; " << e << ")";
    return os.str();
  };
  std::uint64_t top = 0;
  for (const auto& [key, mult] : m.entries()) {
    ++rep.checks;
    if (!(key.weight - rep.wt).nonnegative()) rep.violations.push_back("weight below wt(u=>v) at " + describe(key.weight, key.length));
    const int bound = R.pair(key.weight, R.two_rho()) + v.length() - u.length();
    if (key.length > bound) rep.violations.push_back("length bound exceeded at " + describe(key.weight, key.length));
    if (key.length == bound && !(key.weight == rep.wt && key.length == rep.distance))
      rep.violations.push_back("bound attained away from (wt, d) at " + describe(key.weight, key.length));
    if (key.weight == rep.wt && key.length == rep.distance) top += mult;
  }
  ++rep.checks;
  if (top != 1) rep.violations.push_back("multiplicity of (wt, d) is " + std::to_string(top));
  return rep;
}

}  // namespace dbruhat
