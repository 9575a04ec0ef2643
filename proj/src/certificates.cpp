#include "einsu/einstein.hpp"

#include <cmath>

namespace einsu {

namespace {

RationalPolynomial printed_q(const SystemParams& sp) {
  const BigRational k(sp.k), k1(sp.k1), s(sp.p - 3);
  const BigRational k2 = k * k, k4 = k2 * k2, k6 = k4 * k2, k8 = k4 * k4;
  const auto pw = [](const BigRational& b, int e) {
    BigRational r(1);
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  const BigRational c12 = k8 * pw(s, 6) + 2 * (7 * k2 + 2) * k6 * pw(s, 5) + (83 * k2 + 46) * k6 * pw(s, 4) +
                          8 * (33 * k4 + 28 * k2 - 3) * k4 * pw(s, 3) +
                          8 * (59 * k6 + 71 * k4 - 21 * k2 - 1) * k2 * pw(s, 2) +
                          32 * (14 * k6 + 23 * k4 - 12 * k2 - 1) * k2 * s + 16 * (11 * k8 + 24 * k6 - 18 * k4 - 1);
  const BigRational c10 = 3 * k6 * pw(s, 4) + (29 * k6 + 10 * k4) * pw(s, 3) + (108 * k6 + 72 * k4) * pw(s, 2) +
                          (180 * k6 + 192 * k4 - 36 * k2) * s + 112 * k6 + 184 * k4 - 96 * k2 - 8;
  const BigRational c8 = 15 * k6 * pw(s, 4) + (140 * k6 + 40 * k4) * pw(s, 3) + (498 * k6 + 276 * k4) * pw(s, 2) +
                         (792 * k6 + 672 * k4 - 72 * k2) * s + 472 * k6 + 568 * k4 - 168 * k2 - 8;
  const BigRational c6 =
      5 * k4 * pw(s, 3) + (35 * k4 + 10 * k2) * pw(s, 2) + (83 * k4 + 46 * k2) * s + 66 * k4 + 56 * k2 - 6;
  const BigRational c4 = 15 * k2 * pw(s, 2) + (70 * k2 + 20) * s + 83 * k2 + 46;
  const BigRational c2 = 3 * k2 * s + 7 * k2 + 2;
  const BigRational c0 = k2 * pw(k1, 6);
  std::vector<BigRational> c(13, BigRational(0));
  c[0] = c0;
  c[2] = c2;
  c[4] = c4;
  c[6] = c6;
  c[8] = c8;
  c[10] = c10;
  c[12] = c12;
  return RationalPolynomial(std::move(c));
}

RationalFunction printed_derivative(const SystemParams& sp) {
  const BigRational k(sp.k), k1(sp.k1), p(sp.p), pm(sp.p - 1);
  const RationalPolynomial x = RationalPolynomial::x();
  const RationalPolynomial x2 = x * x;
  const RationalPolynomial A = RationalPolynomial(k * k * pm + 2) * x2 + RationalPolynomial(k * k1);
  const RationalPolynomial B = RationalPolynomial(k * k * pm * p - 2) * x2 * x2 +
                               RationalPolynomial(k * k1 * (2 * p - 1)) * x2 + RationalPolynomial(k1 * k1);
  const RationalPolynomial den = RationalPolynomial(2 * (k * pm + k1)) * x2 * x * A * A * B * B;
  return RationalFunction(RationalPolynomial(-k1) * printed_q(sp), den);
}

int sign_of(const RationalFunction& f, const BigRational& x) { return sgn(f(x)); }

}  // namespace

MonotonicityCertificate lambda_monotonicity_certificate(const SystemParams& sp, int grid_size) {
  if (grid_size < 2) throw ParameterError("grid needs at least two points");
  MonotonicityCertificate c;
  c.params = sp;
  c.grid_size = grid_size;
  const auto [num, den] = einstein_constant_parts(sp);
  const auto [dn, dd] = rational_function_derivative(num, den);
  const RationalFunction d(dn, dd);
  c.derivative_numerator = d.num();
  c.derivative_denominator = d.den();

  const BigRational hi(sp.k1 * sp.k * sp.p);
  const double a = std::log(1e-3), b = std::log(hi.get_d());
  bool ok = true;
  for (int i = 0; i < grid_size; ++i) {
    const BigRational x = i + 1 == grid_size ? hi : from_double(std::exp(a + (b - a) * i / (grid_size - 1)));
    if (sign_of(d, x) >= 0) {
      ok = false;
      c.witness = x;
      break;
    }
  }
  c.pass = ok;
  c.numerator_roots_in_range = d.num().degree() > 0 ? count_roots(d.num(), BigRational(0), hi) : 0;
  c.printed_q_matches = printed_derivative(sp) == d;
  return c;
}

SignCertificate large_k1_certificate(const SystemParams& sp) {
  SignCertificate c;
  c.params = sp;
  c.applicable = sp.k1 >= 8 * sp.k * sp.p;
  c.beta = large_k1_beta(sp);
  c.beta_above_two = c.beta > 2;
  if (!c.applicable) return c;
  const RationalPolynomial f = f3_coeffs(sp);
  const BigRational hi(sp.k1 * sp.k * sp.p);
  for (const BigRational& x : {BigRational(0), BigRational(1), BigRational(2), c.beta, hi})
    c.signs.emplace_back(x, sgn(f(x)));
  int last = 0;
  for (const auto& [x, s] : c.signs) {
    if (s != 0 && last != 0 && s != last) ++c.implied_min_roots;
    if (s != 0) last = s;
  }
  c.sturm_count = count_roots(f, BigRational(0), hi);
  const int expect[5] = {1, -1, 1, -1, 1};
  bool pattern = true;
  for (std::size_t i = 0; i < 5; ++i) pattern = pattern && c.signs[i].second == expect[i];
  c.pass = pattern && c.beta_above_two && c.beta < hi && c.sturm_count >= 4;
  return c;
}

}  // namespace einsu
