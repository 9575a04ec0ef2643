#include <doctest.h>

#include "einsu/einstein.hpp"

#include <cmath>

using namespace einsu;

namespace {

RationalPolynomial poly(std::vector<long> c) {
  std::vector<BigRational> q;
  for (long v : c) q.emplace_back(v);
  return RationalPolynomial(q);
}

// Case 2 roots computed independently (sympy nroots on F3, then back-substitution), frozen.
struct Frozen {
  long k1, k, p;
  double x12, x2, lambda;
};
const Frozen kCase2[] = {
    {3, 2, 3, 0.7460928018727691187, 0.19800838957638770904, 0.41299047739001602734},
    {3, 2, 3, 1.4445713293879893908, 0.33491826084787445198, 0.25439025351279877263},
    {2, 2, 3, 0.8478815155219528247, 0.27039772140079862792, 0.36206493032684621047},
    {2, 2, 3, 1.0, 0.30434782608695652174, 0.32453416149068322981},
    {48, 2, 3, 0.8668370506429736744, 0.029054289361434176269, 0.34014785748301338716},
    {48, 2, 3, 1.3083433076035047485, 0.060697138554770068280, 0.16718222155647645807},
    {48, 2, 3, 6.3823898923711140524, 0.35132193869447147123, 0.032737541308564456439},
    {48, 2, 3, 11.792921700423573256, 0.41807023145740119375, 0.027713074393679325511},
};

std::vector<const EinsteinSolution*> of_case(const SolveResult& r, SolutionCase c) {
  std::vector<const EinsteinSolution*> out;
  for (const auto& s : r.solutions)
    if (s.kind == c) out.push_back(&s);
  return out;
}

}  // namespace

TEST_SUITE("einstein") {
  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_params(1, 2, 3), ParameterError);
    CHECK_THROWS_AS(make_params(3, 1, 3), ParameterError);
    CHECK_THROWS_AS(make_params(3, 2, 2), ParameterError);
    const auto sp = make_params(3, 2, 3);
    CHECK(sp.N() == 7);
    CHECK(sp.to_string() == "(3,2,3)");
    CHECK(sp.partition() == Partition({3, 2, 2}));
  }

  TEST_CASE("system at simple points") {
    const auto sp = make_params(3, 2, 3);
    const BigRational one(1);
    SymmetricMetricT<BigRational> m{one, one, one, one, one, one};
    for (const auto& f : system_f(sp, m)) CHECK(f == 0);
    m.y1 = 2;
    CHECK(system_f(sp, m)[4] == 7);
    const auto [y1, y2] = back_substitute_y<BigRational>(sp, BigRational(2), BigRational(1));
    CHECK(y1 == make_rational(19, 7));
    CHECK(y2 > 0);
  }

  TEST_CASE("Q1, F3 and G3 coefficients") {
    CHECK(q1_coeffs(make_params(3, 2, 3)) == poly({108, -168, 52}));
    const auto f3 = f3_coeffs(make_params(3, 2, 3));
    CHECK(f3.degree() == 16);
    CHECK(f3.coeff(0) == 1443420);
    CHECK(f3.coeff(16) == 31036096);
    const auto sp = make_params(2, 2, 3);
    const auto g3 = g3_coeffs(sp);
    CHECK(g3.degree() == 15);
    CHECK(g3.coeff(0) == -12096);
    CHECK(g3(BigRational(1)) == 1285632);
    CHECK(g3_at_one_factored(sp) == 1285632);
    for (const auto& t : {make_params(2, 2, 3), make_params(3, 3, 3), make_params(2, 2, 4)}) {
      const auto x = RationalPolynomial::x();
      const BigRational k2(t.k * t.k);
      CHECK(RationalPolynomial(k2) * (x - RationalPolynomial(BigRational(1))) * g3_coeffs(t) == f3_coeffs(t));
      CHECK(g3_coeffs(t)(BigRational(1)) == BigRational(g3_at_one_factored(t)));
    }
    CHECK_THROWS_AS(g3_coeffs(make_params(3, 2, 3)), UnsupportedShapeError);
  }

  TEST_CASE("elimination reproduces F3") {
    for (const auto& t : {make_params(3, 2, 3), make_params(4, 3, 3), make_params(2, 2, 3)}) {
      BigRational factor;
      CHECK(proportional(f3_via_elimination(t), f3_coeffs(t), &factor));
      CHECK(factor != 0);
    }
  }

  TEST_CASE("substitution solves four of the five equations") {
    const auto sp = make_params(3, 2, 3);
    const auto x = RationalFunction::x();
    const auto m = case2_metric(sp, x);
    const auto f = system_f(sp, m);
    CHECK(f[0].is_zero());
    CHECK(f[1].is_zero());
    CHECK(f[3].is_zero());
    CHECK(f[4].is_zero());
    CHECK_FALSE(f[2].is_zero());
    const auto f3 = f3_coeffs(sp);
    std::optional<BigRational> first;
    for (long t : {2L, 3L, 7L}) {
      const BigRational xt(t), x2t = xt * xt;
      const BigRational a = BigRational((sp.k * sp.k * (sp.p - 1) + 2)) * x2t + BigRational(sp.k * sp.k1);
      const BigRational d2 = x2_denominator<BigRational>(sp, xt);
      const BigRational ratio = f[2](xt) * a * d2 * d2 * d2 / (x2t * f3(xt));
      if (!first) first = ratio;
      CHECK(ratio == *first);
    }
    CHECK(one_minus_x2(sp, BigRational(2)) == BigRational(1) - x2_of_x12(sp, BigRational(2)));
  }

  TEST_CASE("Einstein constant") {
    const auto sp = make_params(2, 2, 3);
    const BigRational one(1);
    const auto m = case2_metric(sp, one);
    CHECK(m.x2 == make_rational(7, 23));
    for (const auto& f : system_f(sp, m)) CHECK(f == 0);
    const BigRational lam = einstein_constant(sp, one);
    CHECK(lam == m.y1 / 4);
    const auto rc = ricci_components_symmetric<BigRational>(2, 2, 3, m);
    CHECK(rc.rr1 == lam);
    CHECK(rc.rr2 == lam);
    CHECK(rc.r1 == lam);
    CHECK(rc.r2 == lam);
    CHECK(rc.r12 == lam);
    CHECK(rc.r23 == lam);
    CHECK(to_double(lam) == doctest::Approx(0.32453416149068322981).epsilon(1e-15));
  }

  TEST_CASE("large-k1 split point") {
    CHECK(large_k1_beta(make_params(48, 2, 3)) == make_rational(660, 73));
    CHECK(large_k1_beta(make_params(3, 2, 3)) == make_rational(165, 292));
    CHECK(large_k1_beta(make_params(2, 2, 3)) == make_rational(55, 146));
  }

  TEST_CASE("solutions match frozen roots") {
    for (const auto& sp : {make_params(3, 2, 3), make_params(2, 2, 3), make_params(48, 2, 3)}) {
      const SolveResult r = solve(sp);
      CHECK(r.expectation_met);
      std::vector<Frozen> want;
      for (const auto& f : kCase2)
        if (f.k1 == sp.k1) want.push_back(f);
      const auto got = of_case(r, SolutionCase::Case2);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < want.size(); ++i) {
        CHECK(got[i]->x12.to_double() == doctest::Approx(want[i].x12).epsilon(1e-14));
        CHECK(got[i]->x2.to_double() == doctest::Approx(want[i].x2).epsilon(1e-14));
        CHECK(got[i]->lambda.to_double() == doctest::Approx(want[i].lambda).epsilon(1e-14));
        CHECK(got[i]->positivity_certified);
        CHECK(got[i]->x2_below_one);
        CHECK(got[i]->f_residual < 1e-60);
        if (sp.N() <= 8) {
          CHECK(got[i]->oracle_checked);
          CHECK(got[i]->oracle_residual < 1e-12);
        } else {
          CHECK_FALSE(got[i]->oracle_checked);
          CHECK(got[i]->oracle_note.find("52") != std::string::npos);
        }
      }
      CHECK(r.monotonicity.pass);
      CHECK(r.case2_non_isometric);
    }
  }

  TEST_CASE("classification") {
    const SolveResult r = solve(make_params(2, 2, 3));
    const auto c2 = of_case(r, SolutionCase::Case2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0]->classification.label() == "NonNaturallyReductive");
    REQUIRE(c2[1]->exact);
    CHECK(c2[1]->exact->x12 == 1);
    CHECK(c2[1]->classification.label() == "NaturallyReductive(i)");
    const auto bi = of_case(r, SolutionCase::BiInvariant);
    REQUIRE(bi.size() == 1);
    CHECK(*bi[0]->exact_lambda == make_rational(1, 4));
    CHECK(bi[0]->classification.label() == "NaturallyReductive(bi-invariant)");
    const auto c1 = of_case(r, SolutionCase::Case1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0]->x12.to_double() == doctest::Approx(0.806287056639).epsilon(1e-11));
    CHECK(c1[1]->x12.to_double() == doctest::Approx(1.86037961003).epsilon(1e-11));
    for (const auto* s : c1) CHECK(s->classification.label() == "NaturallyReductive(ii)");
  }

  TEST_CASE("Case 1 at (3,2,3) and (48,2,3)") {
    const auto sp = make_params(3, 2, 3);
    CHECK(case1_branch_exact(sp));
    const SolveResult r = solve(sp);
    const auto c1 = of_case(r, SolutionCase::Case1);
    REQUIRE(c1.size() == 2);
    CHECK(c1[0]->x12.to_double() == doctest::Approx(0.885628232269).epsilon(1e-11));
    CHECK(c1[1]->x12.to_double() == doctest::Approx(2.34514099850).epsilon(1e-11));
    CHECK(c1[0]->x1.to_double() == doctest::Approx(0.75));
    const SolveResult rb = solve(make_params(48, 2, 3));
    const auto big = of_case(rb, SolutionCase::Case1);
    REQUIRE(big.size() == 2);
    CHECK(big[0]->x12.to_double() == doctest::Approx(9.59664348133).epsilon(1e-11));
    CHECK(big[1]->x12.to_double() == doctest::Approx(16.2686414928).epsilon(1e-10));
  }

  TEST_CASE("certificates") {
    const auto mono = lambda_monotonicity_certificate(make_params(3, 2, 3));
    CHECK(mono.pass);
    CHECK(mono.grid_size == 100);
    CHECK(mono.numerator_roots_in_range == 0);
    CHECK_FALSE(mono.printed_q_matches);
    CHECK_FALSE(mono.witness);

    const auto rc = large_k1_certificate(make_params(48, 2, 3));
    CHECK(rc.applicable);
    CHECK(rc.pass);
    CHECK(rc.beta == make_rational(660, 73));
    REQUIRE(rc.signs.size() == 5);
    const int want[] = {1, -1, 1, -1, 1};
    for (int i = 0; i < 5; ++i) CHECK(rc.signs[static_cast<std::size_t>(i)].second == want[i]);
    CHECK(rc.signs.back().first == 288);
    CHECK(rc.sturm_count >= 4);
    CHECK_FALSE(large_k1_certificate(make_params(4, 2, 3)).applicable);
  }

  TEST_CASE("missing solutions raise") {
    SolveOptions opts;
    opts.range_hi = make_rational(1, 2);
    const SolveResult r = solve_system(make_params(3, 2, 3), opts);
    CHECK_FALSE(r.expectation_met);
    CHECK_THROWS_AS(solve(make_params(3, 2, 3), opts), TheoremViolation);
  }

  TEST_CASE("precision invariance") {
    SolveOptions lo, hi;
    lo.bits = 64;
    hi.bits = 512;
    const auto a = solve(make_params(3, 2, 3), lo), b = solve(make_params(3, 2, 3), hi);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i) {
      CHECK(a.solutions[i].kind == b.solutions[i].kind);
      CHECK(a.solutions[i].x12.to_double() == doctest::Approx(b.solutions[i].x12.to_double()).epsilon(1e-15));
      CHECK(a.solutions[i].classification.label() == b.solutions[i].classification.label());
    }
  }

  TEST_CASE("Newton exploration finds nothing new") {
    const auto r = solve(make_params(3, 2, 3));
    const auto finds = explore_newton(r, 20, 7);
    CHECK_FALSE(finds.empty());
    for (const auto& f : finds) CHECK(f.matched);
  }

  TEST_CASE("oracle residual") {
    const auto sp = make_params(2, 2, 3);
    CHECK(oracle_einstein_residual(sp, {1, 1, 1, 1, 1, 1}, 0.25) < 1e-13);
    CHECK(oracle_einstein_residual(sp, {1, 1, 1, 1, 1, 1}, 0.3) > 1e-3);
  }
}
