#include "dbruhat/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace dbruhat {

namespace {

std::vector<std::uint16_t> simple_perm(const RootSystem& R, int i) {
  std::vector<std::uint16_t> p(static_cast<std::size_t>(R.num_roots()));
  for (int r = 0; r < R.num_roots(); ++r) p[static_cast<std::size_t>(r)] = static_cast<std::uint16_t>(R.reflect(i, r));
  return p;
}

std::vector<std::uint16_t> invert(std::span<const std::uint16_t> p) {
  std::vector<std::uint16_t> q(p.size());
  for (std::size_t r = 0; r < p.size(); ++r) q[p[r]] = static_cast<std::uint16_t>(r);
  return q;
}

}  // namespace

WeylElement::WeylElement(RootSystem R, std::vector<std::uint16_t> perm) : R_(std::move(R)), perm_(std::move(perm)) {
  const int N = R_.num_positive();
  // Left-greedy descent peeling yields the lexicographically first reduced word.
  std::vector<std::uint16_t> cur = perm_;
  std::vector<std::uint16_t> inv = invert(cur);
  for (;;) {
    int s = -1;
    for (int i = 0; i < R_.rank(); ++i)
      if (inv[static_cast<std::size_t>(i)] >= N) {
        s = i;
        break;
      }
    if (s < 0) break;
    word_.push_back(s);
    for (auto& r : cur) r = static_cast<std::uint16_t>(R_.reflect(s, r));
    inv = invert(cur);
  }
  for (std::size_t r = 0; r < cur.size(); ++r) ensure(cur[r] == r, "reduced word does not reach the identity");
}

WeylElement WeylElement::identity(const RootSystem& R) {
  std::vector<std::uint16_t> p(static_cast<std::size_t>(R.num_roots()));
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return WeylElement(R, std::move(p));
}

WeylElement WeylElement::simple_reflection(const RootSystem& R, int i) {
  if (i < 0 || i >= R.rank()) throw DomainError("simple reflection index out of range");
  return WeylElement(R, simple_perm(R, i));
}

WeylElement WeylElement::reflection(const RootSystem& R, RootIndex a) {
  if (a < 0 || a >= R.num_roots()) throw DomainError("root index out of range");
  std::vector<std::uint16_t> p(static_cast<std::size_t>(R.num_roots()));
  for (int r = 0; r < R.num_roots(); ++r) p[static_cast<std::size_t>(r)] = static_cast<std::uint16_t>(R.reflect(a, r));
  return WeylElement(R, std::move(p));
}

WeylElement WeylElement::from_word(const RootSystem& R, std::span<const int> word) {
  std::vector<std::uint16_t> p(static_cast<std::size_t>(R.num_roots()));
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  // Right multiplication by s_i: (w s_i)(r) = w(s_i r).
  for (int i : word) {
    if (i < 0 || i >= R.rank()) throw DomainError("simple reflection index out of range");
    std::vector<std::uint16_t> q(p.size());
    for (int r = 0; r < R.num_roots(); ++r) q[static_cast<std::size_t>(r)] = p[static_cast<std::size_t>(R.reflect(i, r))];
    p = std::move(q);
  }
  return WeylElement(R, std::move(p));
}

WeylElement WeylElement::from_permutation(const RootSystem& R, std::vector<std::uint16_t> perm) {
  if (perm.size() != static_cast<std::size_t>(R.num_roots())) throw DomainError("permutation size mismatch");
  return WeylElement(R, std::move(perm));
}

WeylElement WeylElement::inverse() const { return WeylElement(R_, invert(perm_)); }

WeylElement WeylElement::operator*(const WeylElement& o) const {
  R_.require_same(o.R_);
  std::vector<std::uint16_t> p(perm_.size());
  for (std::size_t r = 0; r < p.size(); ++r) p[r] = perm_[o.perm_[r]];
  return WeylElement(R_, std::move(p));
}

RootVector WeylElement::act(const RootVector& v) const {
  if (v.rank() != R_.rank()) throw DomainError("dimension mismatch in Weyl action");
  RootVector out(R_.rank());
  for (int i = 0; i < R_.rank(); ++i)
    if (v[i] != 0) out += v[i] * R_.root((*this)(i));
  return out;
}

Coweight WeylElement::act(const Coweight& mu) const {
  if (mu.rank() != R_.rank()) throw DomainError("dimension mismatch in Weyl action");
  Coweight out(R_.rank());
  for (int i = 0; i < R_.rank(); ++i)
    if (mu[i] != 0) out += mu[i] * R_.coroot((*this)(i));
  return out;
}

std::size_t WeylElement::hash() const {
  std::size_t h = perm_.size();
  for (auto r : perm_) h = h * 131u + r;
  return h;
}

bool bruhat_leq(const WeylElement& w, const WeylElement& w2) {
  w.system().require_same(w2.system());
  if (w.is_identity()) return true;
  if (w.length() > w2.length()) return false;
  if (w.length() == w2.length()) return w == w2;
  const RootSystem& R = w.system();
  const int s = w2.reduced_word().front();  // a left descent of w2
  const WeylElement S = WeylElement::simple_reflection(R, s);
  const bool descent = w.inverse()(s) >= R.num_positive();
  return descent ? bruhat_leq(S * w, S * w2) : bruhat_leq(w, S * w2);
}

WeylElement longest_element(const RootSystem& R, std::span<const int> J) {
  WeylElement w = WeylElement::identity(R);
  for (bool grew = true; grew;) {
    grew = false;
    for (int i : J) {
      if (i < 0 || i >= R.rank()) throw DomainError("parabolic index out of range");
      if (R.is_positive(w(i))) {
        w = w * WeylElement::simple_reflection(R, i);
        grew = true;
      }
    }
  }
  return w;
}

WeylElement longest_element(const RootSystem& R) {
  std::vector<int> all(static_cast<std::size_t>(R.rank()));
  std::iota(all.begin(), all.end(), 0);
  return longest_element(R, all);
}

bool is_dominant(const RootSystem& R, const Coweight& mu) {
  for (int i = 0; i < R.rank(); ++i)
    if (R.pair(mu, R.root(i)) < 0) return false;
  return true;
}

std::pair<Coweight, WeylElement> dominant_rep(const RootSystem& R, const Coweight& mu) {
  if (mu.rank() != R.rank()) throw DomainError("dimension mismatch in dominant_rep");
  Coweight lam = mu;
  WeylElement v = WeylElement::identity(R);
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < R.rank(); ++i)
      if (R.pair(lam, R.root(i)) < 0) {
        lam = R.reflect(i, lam);
        v = v * WeylElement::simple_reflection(R, i);
        moved = true;
        break;
      }
  }
  // Reduce to the minimal representative of v·Stab(λ).
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i < R.rank(); ++i)
      if (R.pair(lam, R.root(i)) == 0 && !R.is_positive(v(i))) {
        v = v * WeylElement::simple_reflection(R, i);
        moved = true;
        break;
      }
  }
  return {lam, v};
}

std::size_t WeylGroup::PermHash::operator()(const std::vector<std::uint16_t>& p) const {
  std::size_t h = p.size();
  for (auto r : p) h = h * 131u + r;
  return h;
}

WeylGroup::WeylGroup(RootSystem R, std::size_t max_order) : R_(std::move(R)) {
  std::vector<std::vector<std::uint16_t>> gens;
  for (int i = 0; i < R_.rank(); ++i) gens.push_back(simple_perm(R_, i));
  std::vector<std::vector<std::uint16_t>> found;
  std::unordered_map<std::vector<std::uint16_t>, ElementId, PermHash> seen;
  std::vector<std::uint16_t> e(static_cast<std::size_t>(R_.num_roots()));
  std::iota(e.begin(), e.end(), std::uint16_t{0});
  seen.emplace(e, 0);
  found.push_back(e);
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (const auto& g : gens) {
      std::vector<std::uint16_t> p(e.size());
      const auto& cur = found[k];
      for (std::size_t r = 0; r < p.size(); ++r) p[r] = cur[g[r]];
      if (seen.emplace(p, 0).second) {
        if (found.size() >= max_order)
          throw DomainError("Weyl group of " + R_.label() + " exceeds the enumeration cap of " + std::to_string(max_order));
        found.push_back(std::move(p));
      }
    }
  }
  elements_.reserve(found.size());
  for (auto& p : found) elements_.push_back(WeylElement::from_permutation(R_, std::move(p)));
  std::sort(elements_.begin(), elements_.end(), ShortlexLess{});
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(std::vector<std::uint16_t>(elements_[i].permutation().begin(), elements_[i].permutation().end()),
                   static_cast<ElementId>(i));
  longest_ = static_cast<ElementId>(elements_.size() - 1);

  const auto N = static_cast<std::size_t>(R_.num_positive());
  right_reflect_.resize(elements_.size() * N);
  inverse_.resize(elements_.size());
  std::vector<std::uint16_t> buf(e.size());
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    const auto p = elements_[w].permutation();
    for (std::size_t b = 0; b < N; ++b) {
      for (std::size_t r = 0; r < buf.size(); ++r) buf[r] = p[static_cast<std::size_t>(R_.reflect(static_cast<int>(b), static_cast<int>(r)))];
      right_reflect_[w * N + b] = index_.at(buf);
    }
    for (std::size_t r = 0; r < buf.size(); ++r) buf[p[r]] = static_cast<std::uint16_t>(r);
    inverse_[w] = index_.at(buf);
  }
}

ElementId WeylGroup::id(const WeylElement& w) const {
  R_.require_same(w.system());
  auto it = index_.find(std::vector<std::uint16_t>(w.permutation().begin(), w.permutation().end()));
  if (it == index_.end()) throw DomainError("element not in this Weyl group");
  return it->second;
}

}  // namespace dbruhat
