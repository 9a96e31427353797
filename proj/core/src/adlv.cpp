#include "dbruhat/adlv.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace dbruhat {

SigmaClass SigmaClass::make(const RootSystem& R, const Coweight& nu) {
  if (nu.rank() != R.rank()) throw DomainError("Newton point has the wrong rank");
  bool regular = true;
  for (int i = 0; i < R.rank(); ++i) {
    const int p = R.pair(nu, R.root(i));
    if (p < 0) throw DomainError("Newton point is not dominant; use its dominant representative");
    if (p == 0) regular = false;
  }
  return SigmaClass(nu, regular);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::empty: return "empty";
    case Verdict::nonempty_exact: return "nonempty_exact";
    case Verdict::bounds_only: return "bounds_only";
  }
  return "?";
}

namespace {

bool in_parabolic(const RootVector& a, const std::vector<int>& J) {
  for (int i = 0; i < a.rank(); ++i)
    if (a[i] != 0 && std::find(J.begin(), J.end(), i) == J.end()) return false;
  return true;
}

std::vector<WeylElement> parabolic_subgroup(const WeylGroup& W, const std::vector<int>& J) {
  std::vector<WeylElement> out;
  for (const auto& w : W.elements())
    if (std::all_of(w.reduced_word().begin(), w.reduced_word().end(),
                    [&](int s) { return std::find(J.begin(), J.end(), s) != J.end(); }))
      out.push_back(w);
  return out;
}

bool witnesses(const AffineElement& x, const std::vector<int>& J, long c2, const WeylElement& v,
               const std::vector<WeylElement>& WJ) {
  const RootSystem& R = x.system();
  for (int a = 0; a < R.num_positive(); ++a) {
    if (in_parabolic(R.root(a), J)) {
      if (length_functional(x, v(a)) != 0) return false;
      continue;
    }
    const long rho_pair = R.pair(R.two_rho_check(), R.root(a));  // ⟨2ρ∨, α⟩
    for (const auto& y : WJ) {
      const long p = R.pair(x.mu(), R.root((v * y)(a)));
      if (!(4 * p > c2 * rho_pair)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> subsets_by_size(int rank) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) J.push_back(i);
    out.push_back(J);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::uint64_t count_of(const std::vector<int>& xs, int e) {
  return static_cast<std::uint64_t>(std::count(xs.begin(), xs.end(), e));
}

}  // namespace

std::optional<WeylElement> superparabolic_witness(const WeylGroup& W, const AffineElement& x, const std::vector<int>& J,
                                                  long c_times_2) {
  const RootSystem& R = W.system();
  R.require_same(x.system());
  if (c_times_2 < 0) throw DomainError("superparabolic constant must be nonnegative");
  for (int j : J)
    if (j < 0 || j >= R.rank()) throw DomainError("parabolic index out of range");
  const auto WJ = parabolic_subgroup(W, J);
  for (const auto& v : W.elements()) {
    if (!witnesses(x, J, c_times_2, v, WJ)) continue;
    if (c_times_2 >= 4) {
      std::set<ElementId> coset, lp;
      for (const auto& y : WJ) coset.insert(W.id(v * y));
      for (const auto& z : length_positive_set(W, x)) lp.insert(W.id(z));
      ensure(coset == lp, "LP(x) differs from vW_J for a superparabolic witness");
    }
    return v;
  }
  return std::nullopt;
}

std::vector<int> e_multiset(const WeylGroup& W, const AffineElement& x, const SigmaClass& b, const WeylElement& u,
                            const WeylElement& v) {
  if (!is_length_positive(x, v)) throw DomainError("v is not in LP(x)");
  const Coweight weight = u.inverse().act(x.mu()) - b.nu();
  const WeightMultiset m = wts_multiset(W, u, x.w() * u, x.w() * v, WeightWindow::single(weight));
  std::vector<int> out;
  for (const auto& [len, mult] : m.lengths_at(weight)) out.insert(out.end(), mult, len);
  return out;
}

ADLVReport adlv_analyze(const WeylGroup& W, const AffineElement& x, const SigmaClass& b) {
  const RootSystem& R = W.system();
  R.require_same(x.system());
  ADLVReport rep;
  const auto lp = length_positive_set(W, x);

  // e = max_u min_{v∈LP} max E(u,v), with max ∅ = −∞ encoded as nullopt.
  std::optional<int> e;
  std::int64_t bound_d = 0;  // case (d) count for the final e, filled below
  std::vector<std::vector<std::vector<int>>> table;
  for (const auto& u : W.elements()) {
    std::vector<std::vector<int>> row;
    std::optional<int> row_min;
    bool row_empty = false;
    for (const auto& v : lp) {
      auto lengths = e_multiset(W, x, b, u, v);
      if (lengths.empty()) row_empty = true;
      else row_min = std::min(row_min.value_or(lengths.back()), lengths.back());
      rep.E.push_back({u, v, lengths});
      row.push_back(std::move(lengths));
    }
    if (!row_empty && row_min) e = std::max(e.value_or(*row_min), *row_min);
    table.push_back(std::move(row));
  }
  rep.e = e;
  if (!e) {
    rep.verdict = Verdict::empty;
    return rep;
  }
  const int twice = affine_length(x) + *e - R.pair(b.nu(), R.two_rho());
  ensure(twice % 2 == 0, "d is not integral");
  rep.d = twice / 2;
  for (const auto& row : table) {
    std::uint64_t m = std::numeric_limits<std::uint64_t>::max();
    for (const auto& lengths : row) m = std::min(m, count_of(lengths, *e));
    bound_d += static_cast<std::int64_t>(m);
  }

  const Coweight lambda = dominant_rep(R, x.mu()).first - b.nu();
  const long c2 = 3L * R.pair(lambda, R.two_rho());
  if (c2 >= 0) {
    for (const auto& J : subsets_by_size(R.rank())) {
      auto v = superparabolic_witness(W, x, J, c2);
      if (!v) continue;
      rep.passing_J.push_back(J);
      if (!rep.superparabolic) rep.superparabolic = SuperparabolicInfo{J, c2, *v};
    }
  }

  if (rep.superparabolic) {
    const WeylElement w0J = longest_element(R, rep.superparabolic->J);
    for (const auto& v : lp) {
      auto part = e_multiset(W, x, b, v * w0J, v);
      rep.E_union.insert(rep.E_union.end(), part.begin(), part.end());
    }
    std::sort(rep.E_union.begin(), rep.E_union.end());
    ensure(!rep.E_union.empty() && rep.E_union.back() == *e, "max E differs from e in the superparabolic case");
    rep.verdict = Verdict::nonempty_exact;
    rep.dimension = Bound{true, *rep.d};
    if (b.regular()) {
      const auto exact = static_cast<std::int64_t>(count_of(rep.E_union, *e));
      ensure(exact <= bound_d, "exact component count exceeds the general bound");
      rep.components = Bound{true, exact};
    } else {
      rep.components = Bound{false, bound_d};
    }
  } else {
    rep.verdict = Verdict::bounds_only;
    rep.dimension = Bound{false, *rep.d};
    rep.components = Bound{false, bound_d};
  }
  return rep;
}

std::optional<Coweight> generic_newton_superregular(const QuantumBruhatGraph& Q, const AffineElement& x) {
  const RootSystem& R = Q.group().system();
  const auto [lambda, v] = dominant_rep(R, x.mu());
  const auto [dist, wt] = Q.distance_weight(v, x.w() * v);
  const long c2 = 3L * R.pair(wt, R.two_rho());
  for (int i = 0; i < R.rank(); ++i)
    if (2L * R.pair(lambda, R.root(i)) < c2) return std::nullopt;
  return lambda - wt;
}

std::uint64_t kostant_partition(const RootSystem& R, const Coweight& lambda) {
  if (lambda.rank() != R.rank()) throw DomainError("weight has the wrong rank");
  if (!lambda.nonnegative()) return 0;
  const int n = R.rank();
  std::vector<std::size_t> stride(static_cast<std::size_t>(n));
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    stride[static_cast<std::size_t>(i)] = size;
    size *= static_cast<std::size_t>(lambda[i] + 1);
  }
  if (size > (std::size_t{1} << 26)) throw DomainError("partition table too large");
  std::vector<std::uint64_t> dp(size, 0);
  dp[0] = 1;
  std::vector<int> coord(static_cast<std::size_t>(n));
  for (int a = 0; a < R.num_positive(); ++a) {
    const Coweight& c = R.coroot(a);
    std::ptrdiff_t shift = 0;
    for (int i = 0; i < n; ++i) shift += c[i] * static_cast<std::ptrdiff_t>(stride[static_cast<std::size_t>(i)]);
    std::fill(coord.begin(), coord.end(), 0);
    for (std::size_t idx = 0; idx < size; ++idx) {
      bool fits = true;
      for (int i = 0; i < n; ++i)
        if (coord[static_cast<std::size_t>(i)] < c[i]) fits = false;
      if (fits) dp[idx] += dp[idx - static_cast<std::size_t>(shift)];
      for (int i = 0; i < n; ++i) {
        if (++coord[static_cast<std::size_t>(i)] <= lambda[i]) break;
        coord[static_cast<std::size_t>(i)] = 0;
      }
    }
  }
  return dp[size - 1];
}

HyperspecialReport hyperspecial_crosscheck(const WeylGroup& W, const Coweight& mu, const SigmaClass& b) {
  const RootSystem& R = W.system();
  if (!is_dominant(R, mu)) throw DomainError("mu must be dominant");
  const Coweight diff = mu - b.nu();
  const long c2 = 3L * R.pair(diff, R.two_rho());
  for (int i = 0; i < R.rank(); ++i)
    if (2L * R.pair(mu, R.root(i)) < c2) throw DomainError("superregularity gate fails for this (mu, nu)");
  const WeylElement w0 = longest_element(R);
  HyperspecialReport rep;
  rep.expected_dimension = R.pair(diff, R.two_rho()) / 2 + w0.length();
  rep.kostant = kostant_partition(R, diff);
  rep.analysis = adlv_analyze(W, AffineElement(w0, mu), b);
  const bool nonempty = rep.analysis.verdict != Verdict::empty;
  if (nonempty != (rep.kostant > 0)) rep.mismatches.push_back("non-emptiness disagrees with the partition count");
  if (nonempty) {
    if (!rep.analysis.dimension || rep.analysis.dimension->value != rep.expected_dimension)
      rep.mismatches.push_back("dimension differs from the hyperspecial formula");
    if (!rep.analysis.components || rep.analysis.components->value != static_cast<std::int64_t>(rep.kostant))
      rep.mismatches.push_back("component count differs from the partition count");
    if (rep.analysis.e != R.num_positive()) rep.mismatches.push_back("e differs from the number of positive roots");
  }
  return rep;
}

}  // namespace dbruhat
