#include "einsu/roots.hpp"

#include "einsu/errors.hpp"

#include <algorithm>

namespace einsu {

namespace {

int sign_at(const RationalPolynomial& p, const BigRational& x) { return sgn(p(x)); }

BigRational midpoint(const BigRational& a, const BigRational& b) { return (a + b) / 2; }

BigRational pow2_rational(long e) {
  BigRational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

}  // namespace

SturmSequence::SturmSequence(const RationalPolynomial& p) {
  if (p.is_zero()) throw DegenerateError("Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (true) {
    RationalPolynomial r = chain_[chain_.size() - 2] % chain_.back();
    if (r.is_zero()) break;
    RationalPolynomial q = r.primitive();
    if (sgn(q.leading()) != sgn(r.leading())) q = -q;
    chain_.push_back(-q);
  }
}

namespace {
int count_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}
}  // namespace

int SturmSequence::variations(const BigRational& x) const {
  std::vector<int> s;
  s.reserve(chain_.size());
  for (const auto& q : chain_) s.push_back(sign_at(q, x));
  return count_changes(s);
}

int SturmSequence::variations_at_pos_inf() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(sgn(q.leading()));
  return count_changes(s);
}

int SturmSequence::variations_at_neg_inf() const {
  std::vector<int> s;
  for (const auto& q : chain_) s.push_back(q.degree() % 2 == 0 ? sgn(q.leading()) : -sgn(q.leading()));
  return count_changes(s);
}

int SturmSequence::count(const BigRational& a, const BigRational& b) const {
  if (!(a < b)) return 0;
  return variations(a) - variations(b);
}

BigRational cauchy_bound(const RationalPolynomial& p) {
  if (p.is_zero()) throw DegenerateError("root bound of the zero polynomial");
  BigRational m = 0;
  const BigRational lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, BigRational(abs(p.coeff(static_cast<std::size_t>(i))) / lc));
  return m + 1;
}

namespace {

class Isolator {
 public:
  explicit Isolator(const RationalPolynomial& sf) : sf_(sf), sturm_(sf) {}

  void run(const BigRational& a, const BigRational& b, int c) {
    if (c <= 0) return;
    if (c == 1) {
      finish(a, b);
      return;
    }
    const BigRational m = midpoint(a, b);
    const int left = sturm_.count(a, m);
    run(a, m, left);
    run(m, b, c - left);
  }

  std::vector<IsolatingInterval> out;
  const SturmSequence& sturm() const { return sturm_; }

 private:
  void finish(BigRational a, BigRational b) {
    if (sign_at(sf_, b) == 0) {
      exact(b, b - a);
      return;
    }
    while (sign_at(sf_, a) == 0) {
      const BigRational m = midpoint(a, b);
      if (sign_at(sf_, m) == 0) {
        exact(m, m - a);
        return;
      }
      if (sturm_.count(m, b) == 1)
        a = m;
      else
        b = m;
    }
    out.push_back({a, b, sign_at(sf_, a), sign_at(sf_, b), std::nullopt});
  }

  void exact(const BigRational& r, BigRational w) {
    while (true) {
      const BigRational lo = r - w, hi = r + w;
      const int slo = sign_at(sf_, lo), shi = sign_at(sf_, hi);
      if (slo != 0 && shi != 0 && sturm_.count(lo, hi) == 1) {
        out.push_back({lo, hi, slo, shi, r});
        return;
      }
      w /= 2;
    }
  }

  const RationalPolynomial& sf_;
  SturmSequence sturm_;
};

}  // namespace

std::vector<IsolatingInterval> sturm_isolate(const RationalPolynomial& p, std::optional<BigRational> lo,
                                             std::optional<BigRational> hi,
                                             const std::vector<BigRational>& split_points) {
  if (p.is_zero()) throw DegenerateError("cannot isolate roots of the zero polynomial");
  if (p.degree() == 0) return {};
  const RationalPolynomial sf = squarefree(p).primitive();
  const BigRational bound = cauchy_bound(sf);
  const BigRational a = lo ? *lo : BigRational(-bound);
  const BigRational b = hi ? *hi : bound;
  if (!(a < b)) throw ParameterError("isolation range must satisfy lo < hi");

  std::vector<BigRational> cuts{a};
  for (const auto& s : split_points)
    if (a < s && s < b) cuts.push_back(s);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  Isolator iso(sf);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    iso.run(cuts[i], cuts[i + 1], iso.sturm().count(cuts[i], cuts[i + 1]));
  std::vector<IsolatingInterval> out = std::move(iso.out);

  // An exact root's symmetric interval may reach past a neighbour's endpoint.
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!out[i].exact) continue;
    const BigRational& r = *out[i].exact;
    BigRational w = out[i].hi - r;
    const auto clear = [&] {
      return (i == 0 || out[i - 1].hi <= r - w) && (i + 1 == out.size() || r + w <= out[i + 1].lo);
    };
    while (!clear()) w /= 2;
    out[i].lo = r - w;
    out[i].hi = r + w;
    out[i].sign_lo = sign_at(sf, out[i].lo);
    out[i].sign_hi = sign_at(sf, out[i].hi);
  }
  return out;
}

int count_roots(const RationalPolynomial& p, const BigRational& lo, const BigRational& hi) {
  if (p.is_zero()) throw DegenerateError("cannot count roots of the zero polynomial");
  if (p.degree() == 0) return 0;
  return SturmSequence(squarefree(p)).count(lo, hi);
}

RefinedRoot refine_root(const RationalPolynomial& p, const IsolatingInterval& interval, int bits) {
  if (bits < 2) throw ParameterError("refinement precision must be at least 2 bits");
  if (interval.exact) return {MpFloat(*interval.exact, bits), interval};

  const RationalPolynomial sf = squarefree(p);
  const RationalPolynomial dsf = sf.derivative();
  BigRational lo = interval.lo, hi = interval.hi;
  const int slo = sign_at(sf, lo), shi = sign_at(sf, hi);
  if (slo == 0 || shi == 0 || slo == shi)
    throw RefinementError("interval [" + to_string(lo) + ", " + to_string(hi) + "] does not bracket a sign change");

  PrecisionScope scope(bits + 64);
  const auto conv = [](const BigRational& q) { return MpFloat(q); };
  const BigRational target = pow2_rational(1 - bits);
  std::optional<BigRational> hit;

  // Moves the bracket endpoint on the same side as q; returns false if q is a root.
  const auto absorb = [&](const BigRational& q) {
    const int s = sign_at(sf, q);
    if (s == 0) {
      hit = q;
      return false;
    }
    if (s == slo)
      lo = q;
    else
      hi = q;
    return true;
  };

  MpFloat x(midpoint(lo, hi));
  const int budget = 4 * bits + 200;
  int it = 0;
  for (; it < budget && hi - lo >= target; ++it) {
    const BigRational before = hi - lo;
    const MpFloat fx = sf.evaluate(x, conv);
    const MpFloat dfx = dsf.evaluate(x, conv);
    bool newton = false;
    if (!dfx.is_zero()) {
      const MpFloat xn = x - fx / dfx;
      const BigRational q = xn.to_rational();
      if (lo < q && q < hi) {
        newton = true;
        if (!absorb(q)) break;
        BigRational step = abs(BigRational((xn - x).to_rational()));
        if (step == 0) step = target / 4;
        const BigRational probe = sign_at(sf, q) == slo ? BigRational(q + step) : BigRational(q - step);
        if (lo < probe && probe < hi && !absorb(probe)) break;
        x = xn;
      }
    }
    if (!newton || hi - lo > before / 2) {
      const BigRational m = midpoint(lo, hi);
      if (!absorb(m)) break;
      if (!newton) x = MpFloat(midpoint(lo, hi));
    }
    if (!(lo < x.to_rational() && x.to_rational() < hi)) x = MpFloat(midpoint(lo, hi));
  }

  if (hit) {
    IsolatingInterval iv = interval;
    iv.exact = *hit;
    return {MpFloat(*hit, bits), iv};
  }
  IsolatingInterval best{lo, hi, slo, shi, std::nullopt};
  if (hi - lo >= target)
    throw RefinementError("precision budget exhausted; best bracket [" + to_string(lo) + ", " + to_string(hi) + "]");

  const BigRational mid = midpoint(lo, hi);
  MpFloat value(mid, bits);
  const BigRational xv = value.to_rational();
  BigRational scale = std::max(BigRational(1), BigRational(abs(xv)));
  BigRational growth = 1;
  for (int i = 0; i < p.degree(); ++i) growth *= scale;
  const BigRational bound = pow2_rational(-bits / 2) * p.max_abs_coeff() * growth;
  if (abs(p(xv)) > bound)
    throw RefinementError("residual bound failed at refined root; bracket [" + to_string(lo) + ", " + to_string(hi) +
                          "]");
  return {value, best};
}

IsolatingInterval decimal_bracket(const RationalPolynomial& p, const IsolatingInterval& isolation,
                                  const BigRational& approx, const IsolatingInterval& fallback, int digits) {
  if (isolation.exact) return isolation;
  const RationalPolynomial sf = squarefree(p);
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const BigRational step(BigInt(1), scale);
  BigInt n;
  const BigRational scaled = approx * scale;
  mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  const BigRational lo = BigRational(n - 1) * step, hi = BigRational(n + 2) * step;
  const int slo = sign_at(sf, lo), shi = sign_at(sf, hi);
  if (isolation.lo <= lo && hi <= isolation.hi && slo != 0 && shi != 0 && slo != shi) return {lo, hi, slo, shi, std::nullopt};
  return fallback;
}

}  // namespace einsu
