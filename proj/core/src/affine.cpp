#include "dbruhat/affine.hpp"

#include <cstdlib>

namespace dbruhat {

bool is_positive(const RootSystem& R, const AffineRoot& a) {
  return a.level >= (R.is_positive(a.root) ? 0 : 1);
}

AffineElement::AffineElement(WeylElement w, Coweight mu) : w_(std::move(w)), mu_(mu) {
  if (mu_.rank() != w_.system().rank()) throw DomainError("translation part has the wrong rank");
}

AffineElement AffineElement::identity(const RootSystem& R) { return {WeylElement::identity(R), Coweight(R.rank())}; }

AffineElement AffineElement::translation(const RootSystem& R, const Coweight& mu) { return {WeylElement::identity(R), mu}; }

AffineElement AffineElement::operator*(const AffineElement& o) const {
  return {w_ * o.w_, o.w_.inverse().act(mu_) + o.mu_};
}

AffineElement AffineElement::inverse() const { return {w_.inverse(), -w_.act(mu_)}; }

AffineRoot AffineElement::operator()(const AffineRoot& a) const {
  const RootSystem& R = system();
  return {w_(a.root), a.level - R.pair(mu_, R.root(a.root))};
}

AffineRoot affine_act(const AffineElement& x, const AffineRoot& a) { return x(a); }

AffineElement affine_reflection(const RootSystem& R, const AffineRoot& a) {
  return {WeylElement::reflection(R, a.root), a.level * R.coroot(a.root)};
}

int length_functional(const AffineElement& x, RootIndex gamma) {
  const RootSystem& R = x.system();
  return R.pair(x.mu(), R.root(gamma)) + positivity(R, gamma) - positivity(R, x.w()(gamma));
}

int ell_u(const AffineElement& x, const WeylElement& u) {
  const RootSystem& R = x.system();
  const Coweight v = u.inverse().act(x.w().act(x.mu()));
  const WeylElement winv_u = x.w().inverse() * u;
  return -R.pair(v, R.two_rho()) - u.length() + winv_u.length();
}

int ell_u_sum(const AffineElement& x, const WeylElement& u) {
  const AffineElement xi = x.inverse();
  int s = 0;
  for (int a = 0; a < x.system().num_positive(); ++a) s += length_functional(xi, u(a));
  return s;
}

int affine_length(const AffineElement& x) {
  int s = 0;
  for (int a = 0; a < x.system().num_positive(); ++a) s += std::abs(length_functional(x, a));
  return s;
}

bool is_length_positive(const AffineElement& x, const WeylElement& v) {
  for (int a = 0; a < x.system().num_positive(); ++a)
    if (length_functional(x, v(a)) < 0) return false;
  return true;
}

std::vector<WeylElement> length_positive_set(const WeylGroup& W, const AffineElement& x) {
  W.system().require_same(x.system());
  std::vector<WeylElement> out;
  for (const auto& v : W.elements())
    if (is_length_positive(x, v)) out.push_back(v);
  ensure(!out.empty(), "LP(x) is empty");
  return out;
}

std::optional<WeylElement> eta_shrunken(const WeylGroup& W, const AffineElement& x) {
  auto lp = length_positive_set(W, x);
  if (lp.size() != 1) return std::nullopt;
  const auto& v = lp.front();
  return v.inverse() * x.w() * v;
}

std::optional<int> virtual_dimension(const WeylGroup& W, const AffineElement& x, const Coweight& nu) {
  auto eta = eta_shrunken(W, x);
  if (!eta) return std::nullopt;
  const int twice = affine_length(x) + eta->length() - W.system().pair(nu, W.system().two_rho());
  ensure(twice % 2 == 0, "virtual dimension is not integral");
  return twice / 2;
}

}  // namespace dbruhat
