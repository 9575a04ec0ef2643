#pragma once

#include "einsu/bigrational.hpp"
#include "einsu/curvature.hpp"
#include "einsu/errors.hpp"
#include "einsu/mpfloat.hpp"
#include "einsu/polynomial.hpp"
#include "einsu/roots.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

namespace einsu {

/// Family SU(k1 + (p-1)k) with blocks (k1, k, ..., k).
struct SystemParams {
  long k1 = 0;
  long k = 0;
  long p = 0;

  long N() const { return k1 + (p - 1) * k; }
  /// "(k1,k,p)".
  std::string to_string() const;
  Partition partition() const;
  bool operator==(const SystemParams&) const = default;
};

/// Validates k1 >= 2, k >= 2, p >= 3; throws ParameterError otherwise.
SystemParams make_params(long k1, long k, long p);

namespace detail {

template <class T>
void guard_nonzero(const T& den, const char* what) {
  if constexpr (std::is_same_v<T, BigRational>) {
    if (den == 0) throw DomainError(std::string("zero denominator in ") + what);
  } else if constexpr (std::is_same_v<T, RationalFunction>) {
    if (den.is_zero()) throw DomainError(std::string("zero denominator in ") + what);
  }
}

std::vector<BigInt> f3_table(const BigInt& k1, const BigInt& k, const BigInt& p);
std::vector<BigInt> g3_table(const BigInt& k1, const BigInt& k, const BigInt& p);

}  // namespace detail

/// The five normalized Einstein equations (x23 = 1; the x23 field is ignored).
template <class T>
std::array<T, 5> system_f(const SystemParams& sp, const SymmetricMetricT<T>& m) {
  const T k1(sp.k1), k(sp.k), p(sp.p), one(1), two(2);
  const T &x1 = m.x1, &x2 = m.x2, &x12 = m.x12, &y1 = m.y1, &y2 = m.y2;
  const T x12s = x12 * x12, x2s = x2 * x2;
  const T kpk = k * p - k + k1;
  std::array<T, 5> f;
  f[0] = -k * k * k1 * (p - one) * (p + one) * x12s + two * (k - one) * (k + one) * k1 * (p - one) * x12s * x2 +
         two * k * k1 * (p - one) * x12 * kpk - k * (k1 - one) * (k1 + one) * (p - one) * x1 -
         (k - one) * (k + one) * k1 * (p - one) * x2 - y1 * kpk - k * k1 * (p - one) * (k * p - two * k + k1) +
         two * k1 * (p - one) * x12s * y2 - k1 * (p - two) * y2;
  f[1] = -x12s * x2s * (k * k * p - two) + k * k * (p + one) * x12s * x2 - k * k * x12s - k * k1 * x2s + k * k1 * x2 -
         two * x12s * x2 * y2;
  f[2] = k * (p - one) * x1 * x1 * x2 - k * (p - two) * x1 * x12s * x2s - k * x1 * x12s - k1 * x1 * x2s +
         k1 * x12s * x2;
  f[3] = -x2 * y1 * kpk + k * (p - two) * x12s * x2s + k * x12s + k1 * x2s;
  f[4] = y1 * kpk - k * (p - one) * x12s * y2 - k1 * y2;
  return f;
}

/// (y1, y2) solving the last two equations for given x12, x2.
template <class T>
std::pair<T, T> back_substitute_y(const SystemParams& sp, const T& x12, const T& x2) {
  const T k1(sp.k1), k(sp.k), p(sp.p), one(1), two(2);
  const T x12s = x12 * x12;
  const T num = k * (p - two) * x12s * x2 * x2 + k * x12s + k1 * x2 * x2;
  const T d1 = x2 * (k * (p - one) + k1);
  const T d2 = x2 * (k * (p - one) * x12s + k1);
  detail::guard_nonzero(d1, "y1");
  detail::guard_nonzero(d2, "y2");
  return {num / d1, num / d2};
}

/// Denominator shared by x2(x12) and 1 - x2(x12).
template <class T>
T x2_denominator(const SystemParams& sp, const T& x12) {
  const T k1(sp.k1), k(sp.k), p(sp.p), one(1), two(2);
  const T x12s = x12 * x12;
  return x12s * x12s * (k * k * (p - one) * p - two) + k * k1 * (two * p - one) * x12s + k1 * k1;
}

/// x2 on the x2 != 1 branch.
template <class T>
T x2_of_x12(const SystemParams& sp, const T& x12) {
  const T k1(sp.k1), k(sp.k), p(sp.p), one(1), two(2);
  const T x12s = x12 * x12;
  const T den = x2_denominator(sp, x12);
  detail::guard_nonzero(den, "x2");
  return x12s * (x12s * (k * k * (p - one) + two) + k * k1) / den;
}

/// 1 - x2 in factored form.
template <class T>
T one_minus_x2(const SystemParams& sp, const T& x12) {
  const T k1(sp.k1), k(sp.k), p(sp.p), one(1), two(2);
  const T x12s = x12 * x12;
  const T den = x2_denominator(sp, x12);
  detail::guard_nonzero(den, "1 - x2");
  return (x12s * (k * (p - one) - two) + k1) * (x12s * (k * (p - one) + two) + k1) / den;
}

/// x1 on the x2 != 1 branch, from the first reduced equation.
template <class T>
T x1_of_x12(const SystemParams& sp, const T& x12, const T& x2) {
  const T k1(sp.k1), k(sp.k), p(sp.p), one(1), two(2);
  const T x12s = x12 * x12;
  const T q = k * (p - one) * x12s + k1;
  const T lead = -(x12s * x12s * (-two * (k * k + one) * k1 + k * p * (two * k * k1 - one) + two * k)) + k * k1 * k1 +
                 k * k1 * x12s * (k * p - k - two * k1);
  const T num = -x2 * x2 * lead - k * k1 * (p + one) * x12s * x2 * q + two * k1 * x12 * x2 * (k * (p - one) + k1) * q -
                k1 * x2 * (k * (p - two) + k1) * q + x12s * (-(x12s * (k - two * k1)) - k1);
  const T den = (k1 * k1 - one) * x2 * q;
  detail::guard_nonzero(den, "x1");
  return num / den;
}

/// Full metric on the x2 != 1 branch (x23 = 1).
template <class T>
SymmetricMetricT<T> case2_metric(const SystemParams& sp, const T& x12) {
  SymmetricMetricT<T> m;
  m.x12 = x12;
  m.x23 = T(1);
  m.x2 = x2_of_x12(sp, x12);
  m.x1 = x1_of_x12(sp, x12, m.x2);
  std::tie(m.y1, m.y2) = back_substitute_y(sp, x12, m.x2);
  return m;
}

/// Metric on the x2 = 1 branch with x1 = k1 / (k (p-1)).
template <class T>
SymmetricMetricT<T> case1_metric(const SystemParams& sp, const T& x12) {
  const T k1(sp.k1), k(sp.k), p(sp.p), one(1);
  SymmetricMetricT<T> m;
  m.x12 = x12;
  m.x23 = one;
  m.x2 = one;
  m.y2 = one;
  m.x1 = k1 / (k * (p - one));
  m.y1 = (k * (p - one) * x12 * x12 + k1) / (k * (p - one) + k1);
  return m;
}

/// Numerator and denominator of the Einstein constant as polynomials in x12.
std::pair<RationalPolynomial, RationalPolynomial> einstein_constant_parts(const SystemParams& sp);

/// Einstein constant of the x2 != 1 family as a rational function of x12.
template <class T>
T einstein_constant(const SystemParams& sp, const T& x12) {
  const T k1(sp.k1), k(sp.k), p(sp.p), one(1), two(2), three(3), four(4), eight(8);
  const T x2 = x12 * x12, x4 = x2 * x2, x6 = x4 * x2;
  const T pm = p - one;
  const T num = (k * pm * x2 + k1) * ((k * k * k * k * pm * pm * (p + two) - eight * k * k + four) * x6 +
                                      three * k * k * k * k1 * pm * (p + one) * x4 + three * k * k * k1 * k1 * p * x2 +
                                      k * k1 * k1 * k1);
  const T den = four * (k * pm + k1) * x2 * ((k * k * pm + two) * x2 + k * k1) *
                ((k * k * pm * p - two) * x4 + k * k1 * (two * p - one) * x2 + k1 * k1);
  detail::guard_nonzero(den, "lambda");
  return num / den;
}

/// Q1(x) = k(p-1)(k k1(p-1)+1) x^2 - 2 k k1 (p-1)(k1 + k(p-1)) x + k1 (k^2(p-1)^2 + k k1 (p-1) + k1^2 - 1).
RationalPolynomial q1_coeffs(const SystemParams& sp);

/// F3 from the coefficient table a_0..a_16; a_0 > 0 and a_16 > 0 are asserted.
RationalPolynomial f3_coeffs(const SystemParams& sp);

/// G3 from the table b_0..b_15 (k1 = k only); k^2 (x-1) G3 = F3, b_0 < 0 and G3(1) > 0 are asserted.
RationalPolynomial g3_coeffs(const SystemParams& sp);

/// 2(k-1)^2(k+1)^2 p^2 (kp-2)(kp+2)(k^4p^3 - 12k^2p - 8k^2 - 8).
BigInt g3_at_one_factored(const SystemParams& sp);

/// F3 rebuilt independently: f3 with x2, x1 substituted, cleared of denominators and
/// interpolated from `samples` exact points. Throws EliminationMismatchError when the
/// samples are inconsistent with the degree bound or the result is not proportional to F3.
RationalPolynomial f3_via_elimination(const SystemParams& sp, int samples = 25);

/// beta = (k^2(p-1)+2)(k^2(p-1)p-2) k1 / (k(p-1)(k^4(p-1)^2(p+2) - 8k^2 + 4)).
BigRational large_k1_beta(const SystemParams& sp);

enum class SolutionCase { BiInvariant, Case1, Case2 };
std::string to_string(SolutionCase c);

/// Natural reductivity of a solution: (i) x12 = x23, (ii) y2 = x2 = x23.
struct Classification {
  bool criterion_i = false;
  bool criterion_ii = false;
  bool bi_invariant = false;
  bool naturally_reductive() const { return criterion_i || criterion_ii; }
  /// "NaturallyReductive(i)", "NaturallyReductive(ii)", "NaturallyReductive(bi-invariant)"
  /// or "NonNaturallyReductive".
  std::string label() const;
};

struct EinsteinSolution {
  SystemParams params;
  SolutionCase kind = SolutionCase::Case2;
  std::string polynomial;  // "F3", "Q1" or "none"
  IsolatingInterval interval;
  MpFloat x12, x1, x2, y1, y2, lambda;
  std::optional<SymmetricMetricT<BigRational>> exact;  // when x12 is rational
  std::optional<BigRational> exact_lambda;
  bool positivity_certified = false;
  bool x2_below_one = false;  // exact, Case 2 only
  double f_residual = 0.0;    // max |f_i| at the refined metric
  bool oracle_checked = false;
  double oracle_residual = 0.0;  // |Ric - lambda g|_inf / |g|_inf
  std::string oracle_note;
  Classification classification;
};

Classification classify(const EinsteinSolution& s);

struct SolveOptions {
  int bits = 256;
  std::optional<BigRational> range_hi;  // default k1 k p
  bool oracle = true;
  int oracle_max_n = 8;
};

struct MonotonicityCertificate {
  SystemParams params;
  int grid_size = 0;
  bool pass = false;
  std::optional<BigRational> witness;  // first grid point with nonnegative derivative
  int numerator_roots_in_range = 0;    // Sturm count of the derivative numerator on (0, k1 k p]
  bool printed_q_matches = false;
  RationalPolynomial derivative_numerator;
  RationalPolynomial derivative_denominator;
};

/// Exact sign of d(lambda)/dx12 on a log-spaced grid in (0, k1 k p], plus a Sturm count.
MonotonicityCertificate lambda_monotonicity_certificate(const SystemParams& sp, int grid_size = 100);

struct SignCertificate {
  SystemParams params;
  bool applicable = false;  // k1 >= 8 k p
  std::vector<std::pair<BigRational, int>> signs;
  BigRational beta;
  bool beta_above_two = false;
  int implied_min_roots = 0;
  int sturm_count = 0;
  bool pass = false;
};

/// Exact F3 signs at 0, 1, 2, beta, k1 k p.
SignCertificate large_k1_certificate(const SystemParams& sp);

struct SolveResult {
  SystemParams params;
  std::vector<EinsteinSolution> solutions;
  RationalPolynomial f3;
  RationalPolynomial q1;
  BigRational range_hi;
  int f3_roots_in_range = 0;
  int f3_roots_beyond_range = 0;
  int f3_roots_nonpositive = 0;  // roots whose back-substituted metric is not positive
  std::string expectation;
  bool expectation_met = true;
  std::string expectation_detail;
  MonotonicityCertificate monotonicity;
  bool case2_non_isometric = false;
};

/// All solutions of the normalized system reachable from the two cases, certified.
SolveResult solve_system(const SystemParams& sp, const SolveOptions& opts = {});

/// solve_system, throwing TheoremViolation if the guaranteed solutions are missing.
SolveResult solve(const SystemParams& sp, const SolveOptions& opts = {});

/// Checks that every f_i vanishes modulo Q1 on the x2 = 1, x1 = k1/(k(p-1)) branch.
bool case1_branch_exact(const SystemParams& sp);

/// Damped Newton on the five equations from seeded random starts. Each converged point is
/// matched against the certified solutions; unmatched finds are returned for inspection.
struct ExploreFind {
  SymmetricMetric metric;
  double residual = 0.0;
  bool matched = false;
};
std::vector<ExploreFind> explore_newton(const SolveResult& certified, int starts, std::uint64_t seed = 42);

/// |Ric - lambda g|_inf / |g|_inf from the Koszul oracle, in the -B orthonormal basis.
double oracle_einstein_residual(const SystemParams& sp, const SymmetricMetric& m, double lambda);

}  // namespace einsu
