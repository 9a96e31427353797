#include "support.hpp"

#include <algorithm>
#include <functional>

using namespace test;

namespace {

// Kostant count by recursion over the positive coroots, most recent first.
std::uint64_t brute_kostant(const RootSystem& R, const Coweight& lambda, RootIndex start = 0) {
  if (lambda.is_zero()) return 1;
  if (!lambda.nonnegative()) return 0;
  std::uint64_t n = 0;
  for (RootIndex a = start; a < R.num_positive(); ++a) n += brute_kostant(R, lambda - R.coroot(a), a);
  return n;
}

}  // namespace

TEST_CASE("sigma classes") {
  const RootSystem R = RootSystem::build("A2");
  const auto basic = make_sigma_class(R, C_(R, "0,0"));
  CHECK_FALSE(basic.regular());
  CHECK(SigmaClass::defect() == 0);
  CHECK(make_sigma_class(R, C_(R, "9,9")).regular());
  CHECK_FALSE(make_sigma_class(R, C_(R, "9,18")).regular());
  try {
    (void)make_sigma_class(R, C_(R, "-1,0"));
    FAIL("accepted");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("dominant") != std::string::npos);
  }
  CHECK_THROWS_AS(make_sigma_class(R, Coweight{1, 1, 1}), DomainError);
}

TEST_CASE("superparabolic witnesses") {
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  const auto x = X_(R, "s1 s2 s1;10,10");
  CHECK(superparabolic_witness(W, x, {}, 12) == WeylElement::identity(R));
  CHECK(superparabolic_witness(W, AffineElement::identity(R), {0, 1}, 40) == WeylElement::identity(R));
  CHECK_FALSE(superparabolic_witness(W, AffineElement::identity(R), {}, 2).has_value());
  // ⟨μ, α₁+α₂⟩ = 20 sits exactly on C⟨ρ∨,θ⟩ at C = 10, so the strict test fails there.
  CHECK(superparabolic_witness(W, x, {}, 19).has_value());
  CHECK_FALSE(superparabolic_witness(W, x, {}, 20).has_value());
  CHECK_THROWS_AS(superparabolic_witness(W, x, {}, -1), DomainError);
}

TEST_CASE("superparabolic witnesses are monotone along the dominant ray") {
  const RootSystem R = RootSystem::build("B2");
  const WeylGroup W(R);
  for (const auto& w : W.elements())
    for (const Coweight mu : {Coweight{2, 3}, Coweight{-3, 1}, Coweight{4, -2}})
      for (long c2 : {0L, 2L, 6L}) {
        bool seen = false;
        for (int k = 1; k <= 4; ++k) {
          const bool has = superparabolic_witness(W, AffineElement(w, k * mu), {}, c2).has_value();
          CHECK((!seen || has));
          seen = seen || has;
        }
      }
}

TEST_CASE("E multisets") {
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  const auto x = X_(R, "s1 s2 s1;10,10");
  const auto e = WeylElement::identity(R);
  const auto b = make_sigma_class(R, C_(R, "9,9"));
  CHECK(e_multiset(W, x, b, e, e) == std::vector<int>{1, 3, 3});
  CHECK(e_multiset(W, x, make_sigma_class(R, C_(R, "12,12")), e, e).empty());
  CHECK_THROWS_AS(e_multiset(W, x, b, e, W_(R, "s1")), DomainError);
}

TEST_CASE("analyzer examples") {
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  const auto x = X_(R, "s1 s2 s1;10,10");
  {
    const auto r = adlv_analyze(W, x, make_sigma_class(R, C_(R, "9,9")));
    CHECK(r.verdict == Verdict::nonempty_exact);
    CHECK(r.e == 3);
    CHECK(r.d == 5);
    REQUIRE(r.dimension.has_value());
    CHECK(r.dimension->exact);
    CHECK(r.dimension->value == 5);
    REQUIRE(r.components.has_value());
    CHECK(r.components->exact);
    CHECK(r.components->value == 2);
    CHECK(r.E_union == std::vector<int>{1, 3, 3});
    REQUIRE(r.superparabolic.has_value());
    CHECK(r.superparabolic->J.empty());
    CHECK(r.superparabolic->c_times_2 == 12);
  }
  {
    const auto r = adlv_analyze(W, x, make_sigma_class(R, C_(R, "10,10")));
    CHECK(r.verdict == Verdict::nonempty_exact);
    CHECK(r.E_union == std::vector<int>{1, 3});
    CHECK(r.d == 3);
    CHECK(r.components->value == 1);
  }
  {
    const auto r = adlv_analyze(W, x, make_sigma_class(R, C_(R, "30,30")));
    CHECK(r.verdict == Verdict::empty);
    CHECK_FALSE(r.e.has_value());
    CHECK_FALSE(r.d.has_value());
  }
}

TEST_CASE("analyzer consistency across a sweep") {
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  for (const auto& w : W.elements())
    for (const Coweight mu : {Coweight{6, 6}, Coweight{8, 5}, Coweight{-5, 9}})
      for (const Coweight nu : {Coweight{0, 0}, Coweight{5, 5}, Coweight{6, 3}, Coweight{2, 2}}) {
        const AffineElement x(w, mu);
        const auto r = adlv_analyze(W, x, make_sigma_class(R, nu));
        if (!r.e) {
          CHECK(r.verdict == Verdict::empty);
          continue;
        }
        CHECK((affine_length(x) + *r.e - R.pair(nu, R.two_rho())) == 2 * *r.d);
        if (r.verdict == Verdict::nonempty_exact) {
          CHECK(r.dimension->value == *r.d);
          CHECK(*std::max_element(r.E_union.begin(), r.E_union.end()) == *r.e);
        } else {
          CHECK(r.verdict == Verdict::bounds_only);
          CHECK_FALSE(r.dimension->exact);
        }
      }
}

TEST_CASE("generic Newton point") {
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  const auto Q = build_qbg(W);
  CHECK(generic_newton_superregular(Q, X_(R, "s1 s2 s1;10,10")) == C_(R, "10,10"));
  CHECK(generic_newton_superregular(Q, X_(R, "e;10,10")) == C_(R, "10,10"));
  CHECK(generic_newton_superregular(Q, X_(R, "s1;10,10")) == C_(R, "10,10"));
  CHECK_FALSE(generic_newton_superregular(Q, X_(R, "s1;-1,-1")).has_value());
  CHECK(generic_newton_superregular(Q, X_(R, "s1;-5,-5")) == C_(R, "5,4"));
}

TEST_CASE("Kostant partition function") {
  const RootSystem R = RootSystem::build("A2");
  CHECK(kostant_partition(R, C_(R, "0,0")) == 1);
  CHECK(kostant_partition(R, C_(R, "-1,0")) == 0);
  CHECK(kostant_partition(R, C_(R, "1,1")) == 2);
  for (std::string label : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(label);
    const RootSystem S = RootSystem::build(label);
    const auto box = WeightWindow::box(S.two_rho_check());
    for (const auto& lam : box.weights()) CHECK(kostant_partition(S, lam) == brute_kostant(S, lam));
  }
}

TEST_CASE("hyperspecial cross-check") {
  const RootSystem R = RootSystem::build("A2");
  const WeylGroup W(R);
  const auto mu = C_(R, "10,10");
  {
    const auto r = hyperspecial_crosscheck(W, mu, make_sigma_class(R, C_(R, "9,9")));
    CHECK(r.ok());
    CHECK(r.expected_dimension == 5);
    CHECK(r.kostant == 2);
  }
  {
    const auto r = hyperspecial_crosscheck(W, mu, make_sigma_class(R, C_(R, "10,10")));
    CHECK(r.ok());
    CHECK(r.expected_dimension == 3);
    CHECK(r.kostant == 1);
  }
  {
    const auto r = hyperspecial_crosscheck(W, mu, make_sigma_class(R, C_(R, "10,9")));
    CHECK(r.ok());
    CHECK(r.expected_dimension == 4);
    CHECK(r.kostant == 1);
  }
  CHECK_THROWS_AS(hyperspecial_crosscheck(W, C_(R, "2,2"), make_sigma_class(R, C_(R, "1,1"))), DomainError);
}
