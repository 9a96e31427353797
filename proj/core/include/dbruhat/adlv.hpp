#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbruhat/affine.hpp"
#include "dbruhat/double_bruhat.hpp"
#include "dbruhat/quantum_bruhat.hpp"

namespace dbruhat {

// Integral σ-conjugacy class [b] with b = t^ν, ν dominant; defect is 0.
class SigmaClass {
 public:
  static SigmaClass make(const RootSystem& R, const Coweight& nu);
  const Coweight& nu() const { return nu_; }
  bool regular() const { return regular_; }
  static constexpr int defect() { return 0; }

 private:
  SigmaClass(Coweight nu, bool regular) : nu_(nu), regular_(regular) {}
  Coweight nu_;
  bool regular_;
};

inline SigmaClass make_sigma_class(const RootSystem& R, const Coweight& nu) { return SigmaClass::make(R, nu); }

// (J, C)-superparabolic test with C given doubled. C = 0 stands for an
// arbitrarily small positive constant, i.e. the strict inequality ⟨μ, v′α⟩ > 0.
std::optional<WeylElement> superparabolic_witness(const WeylGroup& W, const AffineElement& x, const std::vector<int>& J,
                                                  long c_times_2);

// E(u,v) as a sorted list of lengths with repetition.
std::vector<int> e_multiset(const WeylGroup& W, const AffineElement& x, const SigmaClass& b, const WeylElement& u,
                            const WeylElement& v);

enum class Verdict { empty, nonempty_exact, bounds_only };
const char* to_string(Verdict v);

struct Bound {
  bool exact = false;
  std::int64_t value = 0;
};

struct SuperparabolicInfo {
  std::vector<int> J;
  long c_times_2 = 0;
  WeylElement witness;
};

struct EEntry {
  WeylElement u;
  WeylElement v;
  std::vector<int> lengths;
};

struct ADLVReport {
  Verdict verdict = Verdict::bounds_only;
  std::optional<int> e;  // nullopt is −∞
  std::optional<int> d;
  std::optional<Bound> dimension;
  std::optional<Bound> components;
  std::optional<SuperparabolicInfo> superparabolic;
  std::vector<std::vector<int>> passing_J;
  std::vector<EEntry> E;
  std::vector<int> E_union;  // the multiset E of the superparabolic branch
};

ADLVReport adlv_analyze(const WeylGroup& W, const AffineElement& x, const SigmaClass& b);

// ν(b_x) = v⁻¹μ − wt(v⇒wv) when x clears the superregularity gate.
std::optional<Coweight> generic_newton_superregular(const QuantumBruhatGraph& Q, const AffineElement& x);

// Number of ways to write λ as a sum of positive coroots.
std::uint64_t kostant_partition(const RootSystem& R, const Coweight& lambda);

struct HyperspecialReport {
  int expected_dimension = 0;
  std::uint64_t kostant = 0;
  ADLVReport analysis;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

HyperspecialReport hyperspecial_crosscheck(const WeylGroup& W, const Coweight& mu, const SigmaClass& b);

}  // namespace dbruhat
