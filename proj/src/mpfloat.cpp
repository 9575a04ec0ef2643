#include "einsu/mpfloat.hpp"

#include <algorithm>
#include <vector>

namespace einsu {

namespace {
thread_local mpfr_prec_t g_working_precision = 256;
}

mpfr_prec_t working_precision() { return g_working_precision; }

PrecisionScope::PrecisionScope(mpfr_prec_t bits) : saved_(g_working_precision) { g_working_precision = bits; }
PrecisionScope::~PrecisionScope() { g_working_precision = saved_; }

MpFloat::MpFloat() : MpFloat(Bits{g_working_precision}) {}

MpFloat::MpFloat(Bits bits) {
  mpfr_init2(v_, bits.value);
  mpfr_set_zero(v_, 1);
}

MpFloat::MpFloat(long v) : MpFloat(Bits{g_working_precision}) { mpfr_set_si(v_, v, MPFR_RNDN); }

MpFloat::MpFloat(const BigRational& q) : MpFloat(q, g_working_precision) {}

MpFloat::MpFloat(const BigRational& q, mpfr_prec_t bits) : MpFloat(Bits{bits}) { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

MpFloat::MpFloat(const MpFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

MpFloat::MpFloat(MpFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

MpFloat& MpFloat::operator=(const MpFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

MpFloat& MpFloat::operator=(MpFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

MpFloat::~MpFloat() { mpfr_clear(v_); }

BigRational MpFloat::to_rational() const {
  BigRational q;
  mpfr_get_q(q.get_mpq_t(), v_);
  return q;
}

std::string MpFloat::to_string(int digits) const {
  const int n = mpfr_snprintf(nullptr, 0, "%.*Re", digits - 1, v_);
  std::vector<char> buf(static_cast<std::size_t>(n) + 1);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits - 1, v_);
  return std::string(buf.data());
}

namespace {
mpfr_prec_t joint(const MpFloat& a, const MpFloat& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

MpFloat MpFloat::operator-() const {
  MpFloat r(MpFloat::Bits{precision()});
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

MpFloat operator+(const MpFloat& a, const MpFloat& b) {
  MpFloat r(MpFloat::Bits{joint(a, b)});
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

MpFloat operator-(const MpFloat& a, const MpFloat& b) {
  MpFloat r(MpFloat::Bits{joint(a, b)});
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

MpFloat operator*(const MpFloat& a, const MpFloat& b) {
  MpFloat r(MpFloat::Bits{joint(a, b)});
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

MpFloat operator/(const MpFloat& a, const MpFloat& b) {
  MpFloat r(MpFloat::Bits{joint(a, b)});
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

MpFloat abs(const MpFloat& a) {
  MpFloat r(MpFloat::Bits{a.precision()});
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

MpFloat sqrt(const MpFloat& a) {
  MpFloat r(MpFloat::Bits{a.precision()});
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

MpFloat MpFloat::pow2(long e) {
  MpFloat r(MpFloat::Bits{g_working_precision});
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

}  // namespace einsu
