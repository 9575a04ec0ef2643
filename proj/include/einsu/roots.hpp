#pragma once

#include "einsu/mpfloat.hpp"
#include "einsu/polynomial.hpp"

#include <optional>
#include <vector>

namespace einsu {

/// (lo, hi) holding exactly one simple root of a polynomial, with exact endpoint signs.
/// `exact` is set when the root itself is rational and was hit during isolation.
struct IsolatingInterval {
  BigRational lo;
  BigRational hi;
  int sign_lo = 0;
  int sign_hi = 0;
  std::optional<BigRational> exact;

  bool contains(const BigRational& x) const { return lo < x && x < hi; }
  BigRational width() const { return hi - lo; }
};

/// Sturm chain p, p', -rem(...), each term rescaled by a positive constant.
class SturmSequence {
 public:
  explicit SturmSequence(const RationalPolynomial& p);

  const std::vector<RationalPolynomial>& chain() const { return chain_; }
  /// Sign changes at x, zeros dropped.
  int variations(const BigRational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  /// Distinct real roots in (a, b].
  int count(const BigRational& a, const BigRational& b) const;

 private:
  std::vector<RationalPolynomial> chain_;
};

/// 1 + max |a_i / a_n|; every real root lies strictly inside (-bound, bound).
BigRational cauchy_bound(const RationalPolynomial& p);

/// Disjoint isolating intervals, in increasing order, for the distinct real roots of p in
/// (lo, hi]. Missing bounds default to the Cauchy bound. The range is also cut at every
/// split point inside it, so a root sitting exactly on a split point comes back exact.
/// Throws DegenerateError on p = 0.
std::vector<IsolatingInterval> sturm_isolate(const RationalPolynomial& p,
                                             std::optional<BigRational> lo = std::nullopt,
                                             std::optional<BigRational> hi = std::nullopt,
                                             const std::vector<BigRational>& split_points = {});

/// Distinct real roots of p in (lo, hi].
int count_roots(const RationalPolynomial& p, const BigRational& lo, const BigRational& hi);

struct RefinedRoot {
  MpFloat value;
  IsolatingInterval bracket;  // width below 2^(1 - bits) unless the root is exact
};

/// Safeguarded Newton in MPFR with exact re-bracketing after every step.
/// Throws RefinementError with the best bracket if the iteration budget runs out or the
/// final residual bound fails.
RefinedRoot refine_root(const RationalPolynomial& p, const IsolatingInterval& interval, int bits = 256);

/// Interval with endpoints on the grid 10^-digits around `approx`, certified to hold the
/// single root of p inside `isolation`. Falls back to `fallback` when no grid interval qualifies.
IsolatingInterval decimal_bracket(const RationalPolynomial& p, const IsolatingInterval& isolation,
                                  const BigRational& approx, const IsolatingInterval& fallback, int digits = 25);

}  // namespace einsu
