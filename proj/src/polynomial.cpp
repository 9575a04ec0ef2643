#include "einsu/polynomial.hpp"

#include "einsu/errors.hpp"

#include <algorithm>
#include <set>

namespace einsu {

BigRational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParameterError("empty rational literal");
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t scale = s.size() - dot - 1;
    BigInt den = 1;
    for (std::size_t i = 0; i < scale; ++i) den *= 10;
    BigInt num;
    if (num.set_str(digits, 10) != 0) throw ParameterError("bad decimal literal: " + s);
    BigRational q(num, den);
    q.canonicalize();
    return q;
  }
  BigRational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ParameterError("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPolynomial::RationalPolynomial(const BigRational& c) {
  if (c != 0) c_.push_back(c);
}

RationalPolynomial RationalPolynomial::monomial(const BigRational& c, std::size_t degree) {
  std::vector<BigRational> v(degree + 1, BigRational(0));
  v[degree] = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigRational RationalPolynomial::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<BigRational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (c_.empty()) return {};
  RationalPolynomial out = *this;
  const BigRational lc = c_.back();
  for (auto& c : out.c_) c /= lc;
  return out;
}

RationalPolynomial RationalPolynomial::primitive() const {
  if (c_.empty()) return {};
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& c : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& c : c_) {
    BigInt v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
  }
  BigRational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (c_.back() < 0) scale = -scale;
  RationalPolynomial out = *this;
  for (auto& c : out.c_) c *= scale;
  return out;
}

std::size_t RationalPolynomial::low_order() const {
  std::size_t i = 0;
  while (i < c_.size() && c_[i] == 0) ++i;
  return i;
}

RationalPolynomial RationalPolynomial::strip_low_order() const {
  const std::size_t k = low_order();
  if (k == 0 || c_.empty()) return *this;
  return RationalPolynomial(std::vector<BigRational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

BigRational RationalPolynomial::max_abs_coeff() const {
  BigRational m = 0;
  for (const auto& c : c_) m = std::max(m, BigRational(abs(c)));
  return m;
}

RationalPolynomial RationalPolynomial::operator-() const {
  RationalPolynomial out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const RationalPolynomial& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<BigRational> r(c_.size() + o.c_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw DegenerateError("polynomial division by zero");
  if (a.degree() < b.degree()) return {RationalPolynomial(), a};
  std::vector<BigRational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<BigRational> quot(rem.size() - db, BigRational(0));
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    const BigRational f = rem[i] / bc[db];
    quot[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * bc[j];
  }
  rem.resize(db);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial operator/(const RationalPolynomial& a, const RationalPolynomial& b) { return divmod(a, b).first; }
RationalPolynomial operator%(const RationalPolynomial& a, const RationalPolynomial& b) { return divmod(a, b).second; }

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial u = a.primitive(), v = b.primitive();
  while (!v.is_zero()) {
    RationalPolynomial r = (u % v).primitive();
    u = std::move(v);
    v = std::move(r);
  }
  return u.monic();
}

RationalPolynomial squarefree(const RationalPolynomial& p) {
  if (p.is_zero()) throw DegenerateError("square-free part of the zero polynomial");
  if (p.degree() == 0) return p;
  return p / gcd(p, p.derivative());
}

bool proportional(const RationalPolynomial& a, const RationalPolynomial& b, BigRational* factor) {
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree()) return false;
  const BigRational c = b.leading() / a.leading();
  for (int i = 0; i <= a.degree(); ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (a.coeff(u) * c != b.coeff(u)) return false;
  }
  if (factor) *factor = c;
  return true;
}

RationalPolynomial interpolate(const std::vector<InterpolationPoint>& points) {
  const std::size_t n = points.size();
  std::set<BigRational> seen;
  for (const auto& pt : points)
    if (!seen.insert(pt.first).second) throw DomainError("interpolation abscissae must be distinct");
  // Divided differences in place.
  std::vector<BigRational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - j].first);
      if (i == j) break;
    }
  RationalPolynomial result;
  for (std::size_t i = n; i-- > 0;) {
    result *= RationalPolynomial({-points[i].first, BigRational(1)});
    result += RationalPolynomial(dd[i]);
  }
  return result;
}

RationalPolynomial interpolate_checked(const std::vector<InterpolationPoint>& points, int max_degree) {
  const auto need = static_cast<std::size_t>(max_degree + 1);
  if (points.size() < need) throw ParameterError("not enough interpolation points for the degree bound");
  std::vector<InterpolationPoint> head(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(need));
  RationalPolynomial p = interpolate(head);
  for (std::size_t i = need; i < points.size(); ++i) {
    if (p(points[i].first) != points[i].second)
      throw EliminationMismatchError("interpolated polynomial misses consistency point " + to_string(points[i].first));
  }
  return p;
}

RationalFunction::RationalFunction(RationalPolynomial num, RationalPolynomial den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = RationalPolynomial();
    den_ = RationalPolynomial(1);
    return;
  }
  const RationalPolynomial g = gcd(num, den);
  num = num / g;
  den = den / g;
  const BigRational lc = den.leading();
  num_ = num * RationalPolynomial(BigRational(1) / lc);
  den_ = den.monic();
}

BigRational RationalFunction::operator()(const BigRational& x) const {
  const BigRational d = den_(x);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::pair<RationalPolynomial, RationalPolynomial> rational_function_derivative(const RationalPolynomial& num,
                                                                               const RationalPolynomial& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  return {num.derivative() * den - num * den.derivative(), den * den};
}

}  // namespace einsu
