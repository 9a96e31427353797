// Acceptance runner. `acceptance` runs every criterion, `acceptance <k>` runs one.
// Each criterion prints a single [PASS]/[FAIL] line; any failure exits 1.

#include <chrono>
#include <cstdlib>
#include <deque>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dbruhat/cli.hpp"
#include "dbruhat/io.hpp"
#include "dbruhat/oracles.hpp"

using namespace dbruhat;

namespace {

using Clock = std::chrono::steady_clock;

// Runtime ceilings, in seconds. Criteria without a stated ceiling get a
// generous one so a runaway computation still fails.
constexpr double kLimit1 = 1.0;
constexpr double kLimit2 = 300.0;
constexpr double kLimit3 = 120.0;
constexpr double kLimit6 = 120.0;
constexpr double kLimit8 = 60.0;
constexpr double kLimitDefault = 600.0;

struct Result {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

WeylElement W_(const RootSystem& R, const std::string& s) { return parse_weyl(R, s); }
Coweight C_(const RootSystem& R, const std::string& s) { return parse_coweight(R, s); }
AffineElement X_(const RootSystem& R, const std::string& s) { return parse_affine(R, s); }

// 1. The GL₃ worked example.
Result criterion1() {
  Result r;
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  const auto w0 = longest_element(R);
  const auto order = ReflectionOrder::from_reduced_word(R, std::vector<int>{0, 1, 0});
  const auto x = X_(R, "s1 s2 s1;1,1");
  const auto types = enumerate_admissible_types(W, x, w0, order, 3);
  std::multiset<int> sizes, dims;
  for (const auto& t : types) {
    sizes.insert(t.size());
    dims.insert(type_dimension(t));
  }
  if (sizes != std::multiset<int>{1, 3, 3}) r.fail("type cardinalities differ from {1,3,3}");
  if (dims != std::multiset<int>{4, 5, 5}) r.fail("type dimensions differ from {4,5,5}");
  const auto census = semi_infinite_intersection(W, w0, w0, AffineElement::identity(R), x);
  std::multiset<int> piece_dims;
  for (const auto& p : census.pieces) piece_dims.insert(p.dim);
  if (piece_dims != std::multiset<int>{4, 5, 5}) r.fail("piece dimensions differ from {4,5,5}");
  if (census.dim != 5) r.fail("intersection dimension is not 5");
  if (census.top_count != 2) r.fail("top-dimensional piece count is not 2");
  r.detail = r.pass ? "3 types {1,3,3}, dims {4,5,5}, dim 5, 2 top pieces" : r.detail;
  return r;
}

// 2. Census invariance across reflection orders with equal prefix products.
Result criterion2() {
  Result r;
  std::uint64_t comparisons = 0;
  for (std::string label : {"A2", "B2", "G2", "A3"}) {
    const RootSystem R = RootSystem::build(label);
    const WeylGroup W(R);
    const auto window = WeightWindow::box(R.two_rho_check());
    const auto orders = enumerate_orders(R);
    for (int n = 0; n <= R.num_positive(); ++n) {
      std::map<ElementId, std::vector<std::size_t>> groups;
      for (std::size_t k = 0; k < orders.size(); ++k) groups[W.id(prefix_product(orders[k], n))].push_back(k);
      for (const auto& [prefix, members] : groups) {
        if (members.size() < 2) continue;
        for (const auto& u : W.elements()) {
          const auto ref = wts_census(W, orders[members.front()], n, u, window);
          for (std::size_t m = 1; m < members.size(); ++m) {
            const auto other = wts_census(W, orders[members[m]], n, u, window);
            for (std::size_t v = 0; v < W.order(); ++v, ++comparisons)
              if (!(ref[v] == other[v]))
                r.fail(label + ": n=" + std::to_string(n) + " u=" + format_weyl(u) + " v=" + format_weyl(W.element(static_cast<ElementId>(v))));
          }
        }
      }
    }
  }
  if (r.pass) r.detail = std::to_string(comparisons) + " multiset comparisons, 0 discrepancies";
  return r;
}

// 3. Emptiness and maximal length of wts(u⇒v⇢v′).
Result criterion3() {
  Result r;
  std::uint64_t triples = 0;
  for (std::string label : {"A2", "B2", "A3"}) {
    const RootSystem R = RootSystem::build(label);
    const WeylGroup W(R);
    const oracle::BruhatClosure bruhat(W);
    const auto window = WeightWindow::box(R.two_rho_check());
    const auto n_el = static_cast<ElementId>(W.order());
    for (ElementId g = 0; g < n_el; ++g) {
      const auto [order, n] = order_with_suffix(W.element(g));
      for (ElementId u = 0; u < n_el; ++u) {
        const auto census = wts_census(W, order, n, W.element(u), window);
        for (ElementId v = 0; v < n_el; ++v, ++triples) {
          const ElementId v2 = W.multiply(v, g);
          const ElementId a = g;  // v⁻¹v′
          const ElementId b = W.multiply(W.inverse(u), v2);
          const auto& m = census[static_cast<std::size_t>(v)];
          const bool nonempty = bruhat.leq(a, b);
          const std::string where = label + ": u=" + format_weyl(W.element(u)) + " v=" + format_weyl(W.element(v)) +
                                    " v'=" + format_weyl(W.element(v2));
          if (m.empty() == nonempty) r.fail(where + " emptiness");
          if (nonempty && m.max_length() != W.length(b) - W.length(a)) r.fail(where + " max length");
        }
      }
    }
  }
  if (r.pass) r.detail = std::to_string(triples) + " triples, exact";
  return r;
}

// 4. Quantum Bruhat graph comparison. Distances and weights come from a
// BFS written here; the multisets come from the path census.
Result criterion4() {
  Result r;
  std::uint64_t entries = 0;
  for (std::string label : {"A2", "B2", "G2"}) {
    const RootSystem R = RootSystem::build(label);
    const WeylGroup W(R);
    const auto window = WeightWindow::box(R.two_rho_check());
    const auto n_el = static_cast<ElementId>(W.order());
    for (ElementId u = 0; u < n_el; ++u) {
      std::vector<int> dist(W.order(), -1);
      std::vector<Coweight> wt(W.order(), Coweight(R.rank()));
      dist[static_cast<std::size_t>(u)] = 0;
      std::deque<ElementId> q{u};
      while (!q.empty()) {
        const ElementId w = q.front();
        q.pop_front();
        for (RootIndex a = 0; a < R.num_positive(); ++a) {
          const ElementId t = W.times_reflection(w, a);
          const int jump = W.length(t) - W.length(w);
          const int down = 1 - R.pair(R.coroot(a), R.two_rho());
          if (jump != 1 && jump != down) continue;
          const Coweight step = jump == 1 ? Coweight(R.rank()) : R.coroot(a);
          auto& dt = dist[static_cast<std::size_t>(t)];
          if (dt == -1) {
            dt = dist[static_cast<std::size_t>(w)] + 1;
            wt[static_cast<std::size_t>(t)] = wt[static_cast<std::size_t>(w)] + step;
            q.push_back(t);
          } else if (dt == dist[static_cast<std::size_t>(w)] + 1 && wt[static_cast<std::size_t>(t)] != wt[static_cast<std::size_t>(w)] + step) {
            r.fail(label + ": shortest paths disagree in weight");
          }
        }
      }
      for (ElementId v = 0; v < n_el; ++v) {
        const auto& d = dist[static_cast<std::size_t>(v)];
        const auto& base = wt[static_cast<std::size_t>(v)];
        const std::string where = label + ": u=" + format_weyl(W.element(u)) + " v=" + format_weyl(W.element(v));
        if (d < 0) {
          r.fail(where + " unreachable");
          continue;
        }
        const auto m = wts_multiset(W, W.element(u), W.element(v), W.element(v), window);
        std::uint64_t at_top = 0;
        for (const auto& [k, mult] : m.entries()) {
          ++entries;
          if (!(k.weight - base).nonnegative()) r.fail(where + " weight below wt(u=>v)");
          const int bound = R.pair(k.weight, R.two_rho()) + W.length(v) - W.length(u);
          if (k.length > bound) r.fail(where + " length above bound");
          if (k.length == bound && (k.weight != base || k.length != d)) r.fail(where + " equality off (wt, d)");
          if (k.weight == base && k.length == d) at_top += mult;
        }
        if (window.contains(base) && at_top != 1) r.fail(where + " multiplicity at (wt, d) is " + std::to_string(at_top));
      }
    }
  }
  if (r.pass) r.detail = std::to_string(entries) + " multiset entries, 0 violations";
  return r;
}

// 5. Path-derived types against brute force over values.
Result criterion5() {
  Result r;
  constexpr int kValueBound = 4;
  constexpr int kTranslationBound = 2;
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  std::uint64_t instances = 0, types = 0;
  for (const auto& order : enumerate_orders(R))
    for (const auto& w : W.elements())
      for (int a = -kTranslationBound; a <= kTranslationBound; ++a)
        for (int b = -kTranslationBound; b <= kTranslationBound; ++b)
          for (const auto& u : W.elements()) {
            ++instances;
            const AffineElement x(w, Coweight{a, b});
            const auto fast = enumerate_admissible_types(W, x, u, order, R.num_positive());
            std::set<std::vector<TypeEntry>> fk, sk;
            for (const auto& t : fast) {
              if (path_to_type(type_to_path(t), order, R.num_positive()) != t) r.fail("round trip fails at x=" + format_affine(x));
              bool inside = true;
              for (const auto& e : t.entries()) inside = inside && std::abs(e.value) <= kValueBound;
              if (inside) fk.insert(t.entries());
            }
            for (const auto& t : oracle::admissible_types_brute(x, u, order, kValueBound)) sk.insert(t.entries());
            types += sk.size();
            if (fk != sk) r.fail("type sets differ at x=" + format_affine(x) + " u=" + format_weyl(u) + " order=" + format_order(order));
          }
  if (r.pass) r.detail = std::to_string(instances) + " (x,u,order) instances, " + std::to_string(types) + " types, exact";
  return r;
}

// 6. Affine length against the Coxeter reduction oracle.
Result criterion6() {
  Result r;
  constexpr int kBound = 3;
  std::uint64_t elements = 0;
  for (std::string label : {"A2", "B2"}) {
    const RootSystem R = RootSystem::build(label);
    const WeylGroup W(R);
    for (const auto& w : W.elements())
      for (int a = -kBound; a <= kBound; ++a)
        for (int b = -kBound; b <= kBound; ++b) {
          ++elements;
          const AffineElement x(w, Coweight{a, b});
          const int len = affine_length(x);
          if (len != oracle::coxeter_length(x)) r.fail(label + ": length of " + format_affine(x));
          const auto lp = length_positive_set(W, x.inverse());
          for (const auto& u : W.elements()) {
            const int lu = ell_u(x, u);
            const bool in_lp = std::find(lp.begin(), lp.end(), u) != lp.end();
            if (std::abs(lu) > len) r.fail(label + ": |ell_u| > ell at " + format_affine(x));
            if ((lu == len) != in_lp) r.fail(label + ": equality vs LP(x^-1) at " + format_affine(x) + " u=" + format_weyl(u));
          }
        }
  }
  if (r.pass) r.detail = std::to_string(elements) + " affine elements, exact";
  return r;
}

// 7. Operator composition against path counts.
Result criterion7() {
  Result r;
  std::uint64_t probes = 0;
  for (std::string label : {"A2", "B2"}) {
    const RootSystem R = RootSystem::build(label);
    const WeylGroup W(R);
    const auto window = WeightWindow::box(R.two_rho_check());
    for (const auto& order : enumerate_orders(R))
      for (int n = 0; n <= R.num_positive(); ++n)
        for (const auto& u : W.elements()) {
          ++probes;
          std::map<YbKey, std::uint64_t> direct;
          const auto census = wts_census(W, order, n, u, window);
          for (ElementId v = 0; v < static_cast<ElementId>(W.order()); ++v)
            for (const auto& [k, m] : census[static_cast<std::size_t>(v)].entries())
              direct[{v, k.weight, k.short_count, k.long_count, k.length}] += m;
          if (yb_compose_oracle(W, order, n, u, window) != direct)
            r.fail(label + ": order=" + format_order(order) + " n=" + std::to_string(n) + " u=" + format_weyl(u));
        }
  }
  if (r.pass) r.detail = std::to_string(probes) + " probes, exact";
  return r;
}

// 8. Superregular cross-check against the Kostant count.
Result criterion8() {
  Result r;
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  const auto w0 = longest_element(R);
  int pairs = 0, failures = 0;
  std::string failed;
  for (const Coweight mu : {Coweight{10, 10}, Coweight{12, 10}})
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; a + b <= 4; ++b) {
        const Coweight lambda{a, b};
        if (R.pair(lambda, R.two_rho()) > 8) continue;
        const Coweight nu = mu - lambda;
        if (!is_dominant(R, nu)) continue;
        ++pairs;
        const auto rep = adlv_analyze(W, AffineElement(w0, mu), make_sigma_class(R, nu));
        const auto expected_dim = R.pair(lambda, R.two_rho()) / 2 + w0.length();
        const auto expected_comp = oracle::partitions(R, lambda);
        const bool ok = rep.verdict == Verdict::nonempty_exact && rep.dimension && rep.dimension->exact &&
                        rep.dimension->value == expected_dim && rep.components && rep.components->exact &&
                        static_cast<std::uint64_t>(rep.components->value) == expected_comp;
        if (!ok) {
          ++failures;
          if (!failed.empty()) failed += " ";
          failed += "(" + format_coweight(mu) + ")/(" + format_coweight(nu) + "):" + to_string(rep.verdict);
        }
        if (mu == Coweight{10, 10} && nu == Coweight{9, 9} && !(rep.d == 5 && rep.components && rep.components->value == 2))
          r.fail("(10,10)/(9,9) does not give d=5 with 2 components");
      }
  if (failures > 0) r.fail(std::to_string(failures) + " of " + std::to_string(pairs) + " pairs not nonempty_exact with matching values: " + failed);
  if (r.pass) r.detail = std::to_string(pairs) + " pairs, exact";
  return r;
}

// 9. Generic Newton point consistency.
Result criterion9() {
  Result r;
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  const auto Q = build_qbg(W);
  const Coweight mu{10, 10};
  for (const auto& w : {WeylElement::identity(R), W_(R, "s1"), longest_element(R)}) {
    const AffineElement x(w, mu);
    const auto nu = generic_newton_superregular(Q, x);
    const std::string where = format_affine(x);
    if (!nu) {
      r.fail(where + " fails the superregularity gate");
      continue;
    }
    const auto v = dominant_rep(R, mu).second;
    const auto rep = adlv_analyze(W, x, make_sigma_class(R, *nu));
    const int expected = affine_length(x) - R.pair(*nu, R.two_rho());
    if (!rep.dimension || rep.dimension->value != expected) r.fail(where + " dimension");
    if (!rep.components || rep.components->value != 1) r.fail(where + " component count");
    if (rep.e != Q.distance_weight(v, w * v).first) r.fail(where + " e differs from the QBG distance");
  }
  if (r.pass) r.detail = "w in {e, s1, w0}, exact";
  return r;
}

// 10. Byte-identical CLI output across runs and thread counts.
Result criterion10() {
  Result r;
  const std::vector<std::vector<std::string>> golden{
      {"rootsys", "--type", "B3"},
      {"orders", "--type", "A3"},
      {"dbg-paths", "--type", "A2", "--from", "e", "--to", "s1 s2 s1", "--weight", "1,1"},
      {"wts", "--type", "A2", "--from", "e", "--to", "s1 s2 s1", "--via", "s1 s2 s1", "--weights", "1,1"},
      {"wts", "--type", "B2", "--from", "e", "--to", "s1 s2 s1 s2", "--weights", "2rho"},
      {"qbg", "--type", "G2"},
      {"qbg", "--type", "A2", "--from", "s1 s2 s1", "--to", "e", "--window", "2rho"},
      {"types", "--type", "A2", "--x", "s1 s2 s1;1,1", "--u", "s1 s2 s1", "--order", "s1 s2 s1", "--n", "3"},
      {"intersect", "--type", "A2", "--u", "s1 s2 s1", "--v", "s1 s2 s1", "--x", "e;0,0", "--y", "s1 s2 s1;1,1"},
      {"adlv", "--type", "A2", "--x", "s1 s2 s1;10,10", "--nu", "9,9"},
      {"adlv", "--type", "B2", "--x", "s1 s2;8,6", "--nu", "3,2"},
      {"verify", "all", "--type", "A2"},
      {"verify", "qbg", "--type", "B2"},
  };
  auto invoke = [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return std::to_string(status) + "\n" + out.str();
  };
  for (const auto& args : golden) {
    const std::string ref = invoke(args);
    for (int k = 1; k < 3; ++k)
      if (invoke(args) != ref) r.fail("run-to-run difference: " + args.front());
    if (args.front() != "verify") continue;
    for (const char* t : {"1", "4", "8"}) {
      auto with = args;
      with.insert(with.end(), {"--threads", t});
      ::setenv("DBRUHAT_THREADS", t, 1);
      if (invoke(with) != ref) r.fail(std::string("thread-count difference at ") + t + ": " + args[1]);
      if (invoke(args) != ref) r.fail(std::string("DBRUHAT_THREADS difference at ") + t + ": " + args[1]);
      ::unsetenv("DBRUHAT_THREADS");
    }
  }
  if (r.pass) r.detail = std::to_string(golden.size()) + " golden commands, 3 runs, threads 1/4/8";
  return r;
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<Result()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c{
      {1, "GL3 worked example", kLimit1, criterion1},
      {2, "reflection-order invariance", kLimit2, criterion2},
      {3, "emptiness and maximal length", kLimit3, criterion3},
      {4, "quantum Bruhat comparison", kLimitDefault, criterion4},
      {5, "types/paths bijection vs brute force", kLimitDefault, criterion5},
      {6, "length identities", kLimit6, criterion6},
      {7, "Yang-Baxter operator oracle", kLimitDefault, criterion7},
      {8, "ADLV superregular cross-check", kLimit8, criterion8},
      {9, "generic-class consistency", kLimitDefault, criterion9},
      {10, "CLI determinism", kLimitDefault, criterion10},
  };
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria().size())) {
      std::cerr << "usage: acceptance [1-" << criteria().size() << "]\n";
      return 2;
    }
  }
  int failures = 0;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    const auto start = Clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit) {
      std::ostringstream s;
      s << "runtime " << secs << " s exceeds " << c.limit << " s";
      r.fail(s.str());
    }
    std::ostringstream line;
    line.precision(3);
    line << (r.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << " (" << std::fixed << secs << " s): " << r.detail;
    std::cout << line.str() << std::endl;
    failures += r.pass ? 0 : 1;
  }
  return failures > 0 ? 1 : 0;
}
