#include <doctest.h>

#include "einsu/errors.hpp"
#include "einsu/mpfloat.hpp"
#include "einsu/polynomial.hpp"
#include "einsu/roots.hpp"

using namespace einsu;

namespace {

RationalPolynomial from_roots(const std::vector<BigRational>& roots) {
  RationalPolynomial p(1);
  for (const auto& r : roots) p *= RationalPolynomial({BigRational(-r), BigRational(1)});
  return p;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == make_rational(1, 2));
    CHECK(parse_rational("-1.25") == make_rational(-5, 4));
    CHECK(parse_rational("7") == 7);
    CHECK(to_string(make_rational(-6, 4)) == "-3/2");
    CHECK(to_string(BigRational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("x"), ParameterError);
    CHECK_THROWS_AS(parse_rational(""), ParameterError);
  }

  TEST_CASE("arithmetic, division and gcd") {
    const RationalPolynomial a = from_roots({1, 2, 2});
    const RationalPolynomial b = from_roots({2, 3});
    CHECK(a.degree() == 3);
    CHECK(a(BigRational(2)) == 0);
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(gcd(a, b) == from_roots({2}));
    CHECK(squarefree(a) == from_roots({1, 2}));
    CHECK_THROWS_AS(divmod(a, RationalPolynomial()), DegenerateError);
    CHECK(RationalPolynomial({0, 0, 3}).low_order() == 2);
    CHECK(RationalPolynomial({0, 0, 3}).strip_low_order() == RationalPolynomial(3));
    CHECK(RationalPolynomial({make_rational(1, 2), make_rational(-3, 4)}).primitive() ==
          RationalPolynomial({-2, 3}));
  }

  TEST_CASE("proportionality") {
    const RationalPolynomial a({1, 2, 3});
    BigRational c;
    CHECK(proportional(a, RationalPolynomial(make_rational(-5, 3)) * a, &c));
    CHECK(c == make_rational(-5, 3));
    CHECK_FALSE(proportional(a, RationalPolynomial({1, 2, 4})));
    CHECK_FALSE(proportional(a, RationalPolynomial()));
  }

  TEST_CASE("interpolation") {
    const RationalPolynomial p({3, -1, 0, make_rational(2, 7)});
    std::vector<InterpolationPoint> pts;
    for (int i = 0; i < 8; ++i) pts.emplace_back(BigRational(i), p(BigRational(i)));
    CHECK(interpolate(pts) == p);
    CHECK(interpolate_checked(pts, 3) == p);
    pts.back().second += 1;
    CHECK_THROWS_AS(interpolate_checked(pts, 3), EliminationMismatchError);
    pts.push_back(pts.front());
    CHECK_THROWS_AS(interpolate(pts), DomainError);
  }

  TEST_CASE("rational functions") {
    const RationalFunction f(from_roots({1, 2}), from_roots({1, 3}));
    CHECK(f.den() == from_roots({3}));
    CHECK(f(BigRational(0)) == make_rational(2, 3));
    CHECK_THROWS_AS(f(BigRational(3)), DomainError);
    const RationalFunction x = RationalFunction::x();
    CHECK((x / x) == RationalFunction(1));
    CHECK((f - f).is_zero());
    const auto [n, d] = rational_function_derivative(RationalPolynomial({0, 0, 1}), RationalPolynomial({1, 1}));
    CHECK(RationalFunction(n, d) == RationalFunction(RationalPolynomial({0, 2, 1}), RationalPolynomial({1, 2, 1})));
  }

  TEST_CASE("multiprecision floats") {
    PrecisionScope scope(128);
    const MpFloat two(2);
    const MpFloat r = sqrt(two);
    CHECK(r.precision() == 128);
    CHECK(r.to_string(20) == "1.4142135623730950488e+00");
    CHECK(abs(r * r - two) < MpFloat::pow2(-120));
    CHECK(MpFloat(make_rational(1, 3)).to_string(5) == "3.3333e-01");
    CHECK(MpFloat(make_rational(3, 4)).to_rational() == make_rational(3, 4));
  }
}

TEST_SUITE("roots") {
  TEST_CASE("Sturm counts") {
    const RationalPolynomial p({-2, 0, 1});
    const SturmSequence s(p);
    CHECK(s.count(0, 2) == 1);
    CHECK(s.count(-2, 2) == 2);
    CHECK(s.variations_at_neg_inf() - s.variations_at_pos_inf() == 2);
    CHECK(count_roots(from_roots({1, 1, 2}), 0, 3) == 2);
    CHECK(cauchy_bound(p) == 3);
  }

  TEST_CASE("isolation returns disjoint intervals and exact rational roots") {
    const RationalPolynomial p = from_roots({1, 2, 3, make_rational(7, 2)}) * RationalPolynomial({-2, 0, 1});
    const auto iv = sturm_isolate(p, BigRational(0), BigRational(5), {BigRational(1)});
    REQUIRE(iv.size() == 5);
    for (std::size_t i = 0; i + 1 < iv.size(); ++i) CHECK(iv[i].hi <= iv[i + 1].lo);
    CHECK(iv[0].exact == BigRational(1));
    CHECK(iv[1].contains(make_rational(1414, 1000)));
    for (const auto& i : iv)
      if (!i.exact) CHECK(i.sign_lo * i.sign_hi < 0);
    CHECK(sturm_isolate(RationalPolynomial({1, 0, 1})).empty());
    CHECK_THROWS_AS(sturm_isolate(RationalPolynomial()), DegenerateError);
  }

  TEST_CASE("refinement to 256 bits") {
    const RationalPolynomial p({-2, 0, 1});
    const auto iv = sturm_isolate(p, BigRational(0), BigRational(2));
    REQUIRE(iv.size() == 1);
    const RefinedRoot r = refine_root(p, iv[0], 256);
    PrecisionScope scope(300);
    const MpFloat want = sqrt(MpFloat(2));
    CHECK(abs(r.value - want) < MpFloat::pow2(-250));
    CHECK(r.bracket.width() < BigRational(1, 1) / BigRational(mpz_class(1) << 250));
    const RefinedRoot e = refine_root(from_roots({make_rational(1, 2)}), {0, 1, -1, 1, std::nullopt});
    CHECK(e.bracket.exact == make_rational(1, 2));
    CHECK_THROWS_AS(refine_root(p, {BigRational(2), BigRational(3), 1, 1, std::nullopt}), RefinementError);
  }

  TEST_CASE("decimal brackets contain the root") {
    const RationalPolynomial p({-2, 0, 1});
    const auto iv = sturm_isolate(p, BigRational(0), BigRational(2));
    const RefinedRoot r = refine_root(p, iv[0], 256);
    const IsolatingInterval d = decimal_bracket(p, iv[0], r.value.to_rational(), r.bracket);
    CHECK(d.sign_lo * d.sign_hi < 0);
    CHECK(d.width() == BigRational(3) / BigRational(mpz_class("10000000000000000000000000")));
    CHECK(d.contains(parse_rational(r.value.to_string(30).substr(0, 31))));
  }
}
