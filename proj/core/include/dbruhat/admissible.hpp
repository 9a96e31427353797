#pragma once

#include <optional>
#include <vector>

#include "dbruhat/affine.hpp"
#include "dbruhat/double_bruhat.hpp"

namespace dbruhat {

struct TypeEntry {
  int index = 1;  // n_h, 1-based position in the order
  int value = 0;  // ν_h
  friend bool operator==(const TypeEntry&, const TypeEntry&) = default;
  friend auto operator<=>(const TypeEntry&, const TypeEntry&) = default;
};

class AdmissibleType {
 public:
  const AffineElement& x() const { return x_; }
  const WeylElement& u() const { return u_; }
  const ReflectionOrder& order() const { return order_; }
  const std::vector<TypeEntry>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  // b_h = (uβ_{n_h}, ν_h).
  std::vector<AffineRoot> roots() const;

  friend bool operator==(const AdmissibleType&, const AdmissibleType&) = default;

 private:
  friend AdmissibleType admissible_from_values(std::vector<TypeEntry>, const WeylElement&, const ReflectionOrder&);
  AdmissibleType(AffineElement x, WeylElement u, ReflectionOrder order, std::vector<TypeEntry> entries)
      : x_(std::move(x)), u_(std::move(u)), order_(std::move(order)), entries_(std::move(entries)) {}
  AffineElement x_;
  WeylElement u_;
  ReflectionOrder order_;
  std::vector<TypeEntry> entries_;
};

// Raised when the sign condition fails; h is 1-based.
class AdmissibilityError : public DomainError {
 public:
  AdmissibilityError(int h, const std::string& what) : DomainError(what), h_(h) {}
  int h() const { return h_; }

 private:
  int h_;
};

// Checks r_{b_N}⋯r_{b_{h+1}}(b_h) < 0 for all h and attaches x = r_{b₁}⋯r_{b_N}.
AdmissibleType admissible_from_values(std::vector<TypeEntry> entries, const WeylElement& u, const ReflectionOrder& order);
// Same check without throwing.
std::optional<AdmissibleType> try_admissible(std::vector<TypeEntry> entries, const WeylElement& u, const ReflectionOrder& order);

// Path w⁻¹u ⇒ u with edges (β_{n_h}, m′_h), m′_h the level of r_{b_N}⋯r_{b_{h+1}}(−b_h).
LabelledPath type_to_path(const AdmissibleType& tau);
AdmissibleType path_to_type(const LabelledPath& p, const ReflectionOrder& order, int n);
std::vector<AdmissibleType> enumerate_admissible_types(const WeylGroup& W, const AffineElement& x, const WeylElement& u,
                                                       const ReflectionOrder& order, int n);
int type_dimension(const AdmissibleType& tau);

struct IntersectionPiece {
  LabelledPath path;
  int dim;
};

struct IntersectionCensus {
  std::vector<IntersectionPiece> pieces;
  std::optional<int> dim;  // empty census has no dimension
  int top_count = 0;
  ReflectionOrder order;
  int bound;
};

IntersectionCensus semi_infinite_intersection(const WeylGroup& W, const WeylElement& u, const WeylElement& v,
                                              const AffineElement& x, const AffineElement& y);

}  // namespace dbruhat
