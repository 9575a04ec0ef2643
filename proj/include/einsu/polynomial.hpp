#pragma once

#include "einsu/bigrational.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace einsu {

/// Univariate polynomial with exact rational coefficients, lowest degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial is empty.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs);
  RationalPolynomial(std::initializer_list<BigRational> coeffs)
      : RationalPolynomial(std::vector<BigRational>(coeffs)) {}
  /// Constant polynomial.
  RationalPolynomial(const BigRational& c);  // NOLINT(google-explicit-constructor)
  RationalPolynomial(long c) : RationalPolynomial(BigRational(c)) {}  // NOLINT

  static RationalPolynomial x() { return RationalPolynomial({BigRational(0), BigRational(1)}); }
  static RationalPolynomial monomial(const BigRational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigRational>& coeffs() const { return c_; }
  /// Coefficient of x^i, zero past the degree.
  BigRational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }
  const BigRational& leading() const { return c_.back(); }

  BigRational operator()(const BigRational& x) const;

  /// Horner evaluation in any field that accepts rational coefficients through `convert`.
  template <class T, class Convert>
  T evaluate(const T& x, Convert convert) const {
    if (c_.empty()) return convert(BigRational(0));
    T acc = convert(c_.back());
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + convert(c_[i]);
    return acc;
  }

  RationalPolynomial derivative() const;
  /// Divided by its leading coefficient.
  RationalPolynomial monic() const;
  /// Scaled so that coefficients are coprime integers with positive leading term.
  RationalPolynomial primitive() const;
  /// Multiplicity of x = 0 as a root.
  std::size_t low_order() const;
  /// Divided by x^low_order().
  RationalPolynomial strip_low_order() const;
  /// Largest |coefficient|.
  BigRational max_abs_coeff() const;

  RationalPolynomial operator-() const;
  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const RationalPolynomial& o);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const RationalPolynomial& b) { return a *= b; }
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Quotient and remainder of Euclidean division; throws DegenerateError on b = 0.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);
RationalPolynomial operator/(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial operator%(const RationalPolynomial& a, const RationalPolynomial& b);

/// Monic greatest common divisor (zero only if both inputs are zero).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// p / gcd(p, p'); throws DegenerateError for the zero polynomial.
RationalPolynomial squarefree(const RationalPolynomial& p);

/// True when b = c * a for some nonzero rational c; writes c on success.
bool proportional(const RationalPolynomial& a, const RationalPolynomial& b, BigRational* factor = nullptr);

using InterpolationPoint = std::pair<BigRational, BigRational>;

/// Unique polynomial of degree < points.size() through all points (Newton form).
/// Throws DomainError on repeated abscissae.
RationalPolynomial interpolate(const std::vector<InterpolationPoint>& points);

/// Interpolates on the first max_degree + 1 points and requires the rest to lie on
/// the result. Throws EliminationMismatchError otherwise.
RationalPolynomial interpolate_checked(const std::vector<InterpolationPoint>& points, int max_degree);

/// a(x) / b(x) with b nonzero; kept reduced with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(RationalPolynomial num, RationalPolynomial den);
  RationalFunction(const RationalPolynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}         // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}                       // NOLINT

  static RationalFunction x() { return RationalFunction(RationalPolynomial::x()); }

  const RationalPolynomial& num() const { return num_; }
  const RationalPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws DomainError at a pole.
  BigRational operator()(const BigRational& x) const;

  RationalFunction operator-() const { return {-num_, den_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  RationalPolynomial num_;
  RationalPolynomial den_;
};

/// (n/d)' = (n'd - nd') / d^2, returned unreduced as a (numerator, denominator) pair.
std::pair<RationalPolynomial, RationalPolynomial> rational_function_derivative(const RationalPolynomial& num,
                                                                               const RationalPolynomial& den);

}  // namespace einsu
