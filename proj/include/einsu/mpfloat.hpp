#pragma once

#include "einsu/bigrational.hpp"

#include <mpfr.h>

#include <string>

namespace einsu {

/// Owning MPFR value. Results of binary operations take the larger operand precision;
/// conversions from integers and rationals use the thread's working precision.
class MpFloat {
 public:
  MpFloat();
  /// Zero with an explicit bit precision.
  struct Bits {
    mpfr_prec_t value;
  };
  explicit MpFloat(Bits bits);
  MpFloat(long v);                  // NOLINT(google-explicit-constructor)
  MpFloat(const BigRational& q);    // NOLINT(google-explicit-constructor)
  MpFloat(const BigRational& q, mpfr_prec_t bits);
  MpFloat(const MpFloat& o);
  MpFloat(MpFloat&& o) noexcept;
  MpFloat& operator=(const MpFloat& o);
  MpFloat& operator=(MpFloat&& o) noexcept;
  ~MpFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  /// Exact rational value (every finite MPFR number is dyadic).
  BigRational to_rational() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 30) const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  MpFloat operator-() const;
  friend MpFloat operator+(const MpFloat& a, const MpFloat& b);
  friend MpFloat operator-(const MpFloat& a, const MpFloat& b);
  friend MpFloat operator*(const MpFloat& a, const MpFloat& b);
  friend MpFloat operator/(const MpFloat& a, const MpFloat& b);
  friend bool operator<(const MpFloat& a, const MpFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const MpFloat& a, const MpFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator==(const MpFloat& a, const MpFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

  friend MpFloat abs(const MpFloat& a);
  friend MpFloat sqrt(const MpFloat& a);
  /// 2^e at the working precision.
  static MpFloat pow2(long e);

 private:
  mpfr_t v_;
};

/// Working precision used by MpFloat conversions on the current thread.
mpfr_prec_t working_precision();

/// Sets the thread's working precision for its lifetime and restores it afterwards.
class PrecisionScope {
 public:
  explicit PrecisionScope(mpfr_prec_t bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  mpfr_prec_t saved_;
};

}  // namespace einsu
