#pragma once

#include <optional>
#include <vector>

#include "dbruhat/weyl.hpp"

namespace dbruhat {

// Φ⁺(γ): 1 for positive roots, 0 otherwise.
inline int positivity(const RootSystem& R, RootIndex g) { return R.is_positive(g) ? 1 : 0; }

struct AffineRoot {
  RootIndex root = 0;
  int level = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// (α, n) is positive iff n ≥ Φ⁺(−α).
bool is_positive(const RootSystem& R, const AffineRoot& a);
inline AffineRoot negate(const RootSystem& R, const AffineRoot& a) { return {R.negate(a.root), -a.level}; }

// x = w·t^μ.
class AffineElement {
 public:
  AffineElement(WeylElement w, Coweight mu);
  static AffineElement identity(const RootSystem& R);
  static AffineElement translation(const RootSystem& R, const Coweight& mu);

  const WeylElement& w() const { return w_; }
  const Coweight& mu() const { return mu_; }
  const RootSystem& system() const { return w_.system(); }

  // (w t^μ)(w′ t^μ′) = ww′ t^{w′⁻¹μ + μ′}
  AffineElement operator*(const AffineElement& o) const;
  AffineElement inverse() const;
  AffineRoot operator()(const AffineRoot& a) const;

  friend bool operator==(const AffineElement&, const AffineElement&) = default;

 private:
  WeylElement w_;
  Coweight mu_;
};

AffineRoot affine_act(const AffineElement& x, const AffineRoot& a);
// r_{(α,n)} = s_α t^{nα∨}.
AffineElement affine_reflection(const RootSystem& R, const AffineRoot& a);
// ℓ(w t^μ, γ) = ⟨μ,γ⟩ + Φ⁺(γ) − Φ⁺(wγ).
int length_functional(const AffineElement& x, RootIndex gamma);
// ℓ_u(x) by the closed form; ell_u_sum evaluates the defining sum instead.
int ell_u(const AffineElement& x, const WeylElement& u);
int ell_u_sum(const AffineElement& x, const WeylElement& u);
int affine_length(const AffineElement& x);

std::vector<WeylElement> length_positive_set(const WeylGroup& W, const AffineElement& x);
bool is_length_positive(const AffineElement& x, const WeylElement& v);
std::optional<WeylElement> eta_shrunken(const WeylGroup& W, const AffineElement& x);
// d_x(b) with defect 0; nu must be the Newton point of an integral class.
std::optional<int> virtual_dimension(const WeylGroup& W, const AffineElement& x, const Coweight& nu);

}  // namespace dbruhat
