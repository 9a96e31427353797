#include "dbruhat/root_system.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace dbruhat {

CartanType CartanType::parse(std::string_view label) {
  auto reject = [&] { return DomainError("unknown Cartan label '" + std::string(label) + "'"); };
  if (label.size() < 2) throw reject();
  char f = label[0];
  if (f >= 'a' && f <= 'g') f = static_cast<char>(f - 'a' + 'A');
  int r = 0;
  auto digits = label.substr(1);
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
  if (ec != std::errc{} || p != digits.data() + digits.size()) throw reject();
  bool ok = false;
  switch (f) {
    case 'A': ok = r >= 1 && r <= kMaxRank; break;
    case 'B':
    case 'C': ok = r >= 2 && r <= kMaxRank; break;
    case 'D': ok = r >= 4 && r <= kMaxRank; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: break;
  }
  if (!ok) throw reject();
  return {f, r};
}

std::string CartanType::str() const { return std::string(1, family) + std::to_string(rank); }

namespace {

// Integral symmetric form on simple roots, Bourbaki numbering.
std::vector<int> symmetric_form(const CartanType& t) {
  const int n = t.rank;
  std::vector<int> s(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int i, int j) -> int& { return s[static_cast<std::size_t>(i * n + j)]; };
  auto link = [&](int i, int j, int v) { at(i, j) = v; at(j, i) = v; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < n; ++i) at(i, i) = i + 1 < n ? 4 : 2;
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -2);
      break;
    case 'C':
      for (int i = 0; i < n; ++i) at(i, i) = i + 1 < n ? 2 : 4;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      break;
    case 'D':
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case 'E':
      for (int i = 0; i < n; ++i) at(i, i) = 2;
      link(0, 2, -1);
      link(1, 3, -1);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case 'F':
      at(0, 0) = at(1, 1) = 4;
      at(2, 2) = at(3, 3) = 2;
      link(0, 1, -2);
      link(1, 2, -2);
      link(2, 3, -1);
      break;
    case 'G':
      at(0, 0) = 2;
      at(1, 1) = 6;
      link(0, 1, -3);
      break;
    default:
      throw DomainError("unsupported family");
  }
  return s;
}

int height(const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

RootSystem::RootSystem(CartanType type) {
  auto d = std::make_shared<Data>();
  d->type = type;
  const int n = type.rank;
  d->form = symmetric_form(type);
  auto S = [&](int i, int j) { return d->form[static_cast<std::size_t>(i * n + j)]; };
  d->cartan.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d->cartan[static_cast<std::size_t>(i * n + j)] = 2 * S(i, j) / S(i, i);
  auto A = [&](int i, int j) { return d->cartan[static_cast<std::size_t>(i * n + j)]; };

  // Close the simple roots under simple reflections.
  std::unordered_map<RootVector, int> seen;
  std::vector<RootVector> all;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(n);
    e[i] = 1;
    seen.emplace(e, 0);
    all.push_back(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j) c += A(i, j) * v[j];
      RootVector w = v;
      w[i] -= c;
      if (seen.emplace(w, 0).second) {
        all.push_back(w);
        queue.push_back(w);
      }
    }
  }
  std::vector<RootVector> pos;
  for (const auto& v : all)
    if (v.nonnegative()) pos.push_back(v);
  std::sort(pos.begin(), pos.end(), [](const RootVector& a, const RootVector& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return b < a;
  });
  d->num_positive = static_cast<int>(pos.size());
  ensure(all.size() == 2 * pos.size(), "root closure is not symmetric");
  d->roots = pos;
  for (const auto& v : pos) d->roots.push_back(-v);
  d->highest = d->num_positive - 1;

  auto norm = [&](const RootVector& a) {
    int s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s += a[i] * S(i, j) * a[j];
    return s;
  };
  int max_norm = 0;
  for (const auto& v : pos) max_norm = std::max(max_norm, norm(v));
  for (const auto& a : d->roots) {
    Coweight c(n);
    const int na = norm(a);
    for (int j = 0; j < n; ++j) {
      ensure(a[j] * S(j, j) % na == 0, "non-integral coroot");
      c[j] = a[j] * S(j, j) / na;
    }
    d->coroots.push_back(c);
  }
  for (const auto& v : pos) d->is_long.push_back(!type.simply_laced() && norm(v) == max_norm);

  std::unordered_map<RootVector, int> index;
  for (int i = 0; i < static_cast<int>(d->roots.size()); ++i) index.emplace(d->roots[static_cast<std::size_t>(i)], i);
  const int m = static_cast<int>(d->roots.size());
  auto raw_pair = [&](const Coweight& mu, const RootVector& al) {
    int s = 0;
    for (int i = 0; i < n; ++i)
      if (mu[i] != 0)
        for (int j = 0; j < n; ++j) s += mu[i] * al[j] * A(i, j);
    return s;
  };
  d->pairing.resize(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      d->pairing[static_cast<std::size_t>(a * m + b)] = raw_pair(d->coroots[static_cast<std::size_t>(a)], d->roots[static_cast<std::size_t>(b)]);
  d->reflect.resize(static_cast<std::size_t>(d->num_positive * m));
  for (int a = 0; a < d->num_positive; ++a)
    for (int b = 0; b < m; ++b) {
      const int k = d->pairing[static_cast<std::size_t>(a * m + b)];
      RootVector w = d->roots[static_cast<std::size_t>(b)] - k * d->roots[static_cast<std::size_t>(a)];
      auto it = index.find(w);
      ensure(it != index.end(), "reflection leaves the root set");
      d->reflect[static_cast<std::size_t>(a * m + b)] = it->second;
    }

  d->index = std::move(index);
  d->two_rho = RootVector(n);
  d->two_rho_check = Coweight(n);
  for (int i = 0; i < d->num_positive; ++i) {
    d->two_rho += d->roots[static_cast<std::size_t>(i)];
    d->two_rho_check += d->coroots[static_cast<std::size_t>(i)];
  }
  d_ = std::move(d);
}

std::optional<RootIndex> RootSystem::find(const RootVector& v) const {
  if (v.rank() != rank()) return std::nullopt;
  auto it = d_->index.find(v);
  if (it == d_->index.end()) return std::nullopt;
  return it->second;
}

RootIndex RootSystem::index_of(const RootVector& v) const {
  if (auto i = find(v)) return *i;
  throw DomainError("vector is not a root of " + label());
}

int RootSystem::pair(const Coweight& mu, const RootVector& alpha) const {
  if (mu.rank() != rank() || alpha.rank() != rank()) throw DomainError("pairing dimension mismatch");
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    if (mu[i] != 0)
      for (int j = 0; j < rank(); ++j) s += mu[i] * alpha[j] * cartan(i, j);
  return s;
}

RootVector RootSystem::reflect(RootIndex a, const RootVector& v) const {
  const int k = pair(coroot(a), v);
  return v - k * root(a);
}

Coweight RootSystem::reflect(RootIndex a, const Coweight& mu) const {
  const int k = pair(mu, root(a));
  return mu - k * coroot(a);
}

int RootSystem::norm(RootIndex i) const {
  const auto& a = root(i);
  const int n = rank();
  int s = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) s += a[p] * d_->form[static_cast<std::size_t>(p * n + q)] * a[q];
  return s;
}

void RootSystem::require_same(const RootSystem& o) const {
  if (!same_as(o)) throw DomainError("objects belong to different root systems (" + label() + " vs " + o.label() + ")");
}

}  // namespace dbruhat
