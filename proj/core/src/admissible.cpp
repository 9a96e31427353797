#include "dbruhat/admissible.hpp"

#include <algorithm>

namespace dbruhat {

namespace {

// r_{(α,n)}(β,m) = (s_αβ, m − n⟨α∨,β⟩)
AffineRoot reflect(const RootSystem& R, const AffineRoot& by, const AffineRoot& a) {
  return {R.reflect(by.root, a.root), a.level - by.level * R.pair(by.root, a.root)};
}

std::vector<AffineRoot> roots_of(const std::vector<TypeEntry>& entries, const WeylElement& u, const ReflectionOrder& order) {
  std::vector<AffineRoot> b;
  for (const auto& e : entries) b.push_back({u(order.beta(e.index - 1)), e.value});
  return b;
}

void check_indices(const std::vector<TypeEntry>& entries, const ReflectionOrder& order) {
  int last = 0;
  for (const auto& e : entries) {
    if (e.index <= last || e.index > order.size()) throw DomainError("type indices must be strictly increasing within 1..N");
    last = e.index;
  }
}

// First 1-based h whose sign condition fails, or 0.
int first_violation(const RootSystem& R, const std::vector<AffineRoot>& b) {
  const std::size_t N = b.size();
  for (std::size_t h = 0; h < N; ++h) {
    AffineRoot a = b[h];
    for (std::size_t k = h + 1; k < N; ++k) a = reflect(R, b[k], a);
    if (is_positive(R, a)) return static_cast<int>(h) + 1;
  }
  return 0;
}

}  // namespace

std::vector<AffineRoot> AdmissibleType::roots() const { return roots_of(entries_, u_, order_); }

std::optional<AdmissibleType> try_admissible(std::vector<TypeEntry> entries, const WeylElement& u, const ReflectionOrder& order) {
  check_indices(entries, order);
  const RootSystem& R = order.system();
  const auto b = roots_of(entries, u, order);
  if (first_violation(R, b) != 0) return std::nullopt;
  return admissible_from_values(std::move(entries), u, order);
}

AdmissibleType admissible_from_values(std::vector<TypeEntry> entries, const WeylElement& u, const ReflectionOrder& order) {
  check_indices(entries, order);
  const RootSystem& R = order.system();
  R.require_same(u.system());
  const auto b = roots_of(entries, u, order);
  if (const int h = first_violation(R, b))
    throw AdmissibilityError(h, "sign condition fails at h = " + std::to_string(h));
  AffineElement x = AffineElement::identity(R);
  for (const auto& a : b) x = x * affine_reflection(R, a);
  return AdmissibleType(std::move(x), u, order, std::move(entries));
}

LabelledPath type_to_path(const AdmissibleType& tau) {
  const RootSystem& R = tau.order().system();
  const auto b = tau.roots();
  const std::size_t N = b.size();
  std::vector<PathEdge> edges;
  for (std::size_t h = 0; h < N; ++h) {
    AffineRoot a = negate(R, b[h]);
    for (std::size_t k = h + 1; k < N; ++k) a = reflect(R, b[k], a);
    ensure(is_positive(R, a), "pulled-back root is not positive");
    edges.push_back({tau.order().beta(tau.entries()[h].index - 1), a.level});
  }
  const AffineElement& x = tau.x();
  LabelledPath p(x.w().inverse() * tau.u(), std::move(edges));
  ensure(p.end() == tau.u(), "type path does not end at u");
  ensure(p.weight() == tau.u().inverse().act(x.w().act(x.mu())), "type path has the wrong weight");
  ensure(p.respects_label_bounds(), "type path violates label bounds");
  return p;
}

AdmissibleType path_to_type(const LabelledPath& p, const ReflectionOrder& order, int n) {
  const RootSystem& R = order.system();
  if (!p.increasing_for(order, n)) throw DomainError("path is not increasing and bounded for the order");
  if (!p.respects_label_bounds()) throw DomainError("path violates the label bounds");
  const auto verts = p.vertices();
  const WeylElement& u = verts.back();
  const std::size_t N = p.edges().size();
  // b′_h = (u_h β, m_h) with u_h the source of edge h; undo the reflections
  // from the top down.
  std::vector<AffineRoot> b(N);
  for (std::size_t h = N; h-- > 0;) {
    const auto& e = p.edges()[h];
    AffineRoot a{verts[h](e.root), e.label};
    for (std::size_t k = N; k-- > h + 1;) a = reflect(R, b[k], a);
    b[h] = negate(R, a);
    ensure(b[h].root == u(e.root), "recovered root is not u·β");
  }
  std::vector<TypeEntry> entries;
  for (std::size_t h = 0; h < N; ++h) entries.push_back({order.position(p.edges()[h].root) + 1, b[h].level});
  auto tau = admissible_from_values(std::move(entries), u, order);
  ensure(type_to_path(tau) == p, "types and paths do not round-trip");
  return tau;
}

std::vector<AdmissibleType> enumerate_admissible_types(const WeylGroup& W, const AffineElement& x, const WeylElement& u,
                                                       const ReflectionOrder& order, int n) {
  const WeylElement start = x.w().inverse() * u;
  const Coweight target = u.inverse().act(x.w().act(x.mu()));
  std::vector<AdmissibleType> out;
  for (const auto& p : enumerate_increasing_paths(W, order, n, start, u, target)) {
    auto tau = path_to_type(p, order, n);
    ensure(tau.x() == x, "pulled-back type has a different x");
    out.push_back(std::move(tau));
  }
  return out;
}

int type_dimension(const AdmissibleType& tau) {
  const int twice = tau.size() - ell_u(tau.x(), tau.u());
  ensure(twice % 2 == 0, "type dimension is not integral");
  return twice / 2;
}

IntersectionCensus semi_infinite_intersection(const WeylGroup& W, const WeylElement& u, const WeylElement& v,
                                              const AffineElement& x, const AffineElement& y) {
  auto [order, n] = order_with_suffix(u.inverse() * v);
  const WeylElement from = y.w().inverse() * u;
  const WeylElement to = x.w().inverse() * u;
  const Coweight target = u.inverse().act(y.w().act(y.mu()) - x.w().act(x.mu()));
  const int base = ell_u(x, u) - ell_u(y, u);
  IntersectionCensus census{{}, std::nullopt, 0, order, n};
  for (auto& p : enumerate_increasing_paths(W, order, n, from, to, target)) {
    const int twice = base + p.length();
    ensure(twice % 2 == 0, "piece dimension is not integral");
    census.pieces.push_back({std::move(p), twice / 2});
  }
  for (const auto& piece : census.pieces) census.dim = std::max(census.dim.value_or(piece.dim), piece.dim);
  if (census.dim)
    census.top_count = static_cast<int>(
        std::count_if(census.pieces.begin(), census.pieces.end(), [&](const IntersectionPiece& q) { return q.dim == *census.dim; }));
  return census;
}

}  // namespace dbruhat
