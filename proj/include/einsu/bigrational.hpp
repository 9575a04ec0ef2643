#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace einsu {

using BigInt = mpz_class;
/// Canonical rational: positive denominator, reduced. GMP keeps both invariants
/// after every arithmetic operation.
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

/// "num/den", or "num" for integers.
inline std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// Parses "a", "a/b", or a finite decimal "1.25".
BigRational parse_rational(std::string_view text);

inline int sign(const BigRational& q) { return sgn(q); }

inline double to_double(const BigRational& q) { return q.get_d(); }

/// Exact rational value of a finite double.
inline BigRational from_double(double x) { return BigRational(x); }

}  // namespace einsu
