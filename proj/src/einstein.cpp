#include "einsu/einstein.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

namespace einsu {

SystemParams make_params(long k1, long k, long p) {
  if (k1 < 2) throw ParameterError("k1 must be at least 2");
  if (k < 2) throw ParameterError("k must be at least 2");
  if (p < 3) throw ParameterError("p must be at least 3");
  return {k1, k, p};
}

std::string SystemParams::to_string() const {
  return "(" + std::to_string(k1) + "," + std::to_string(k) + "," + std::to_string(p) + ")";
}

Partition SystemParams::partition() const {
  std::vector<int> parts{static_cast<int>(k1)};
  for (long i = 1; i < p; ++i) parts.push_back(static_cast<int>(k));
  return Partition(std::move(parts));
}

std::pair<RationalPolynomial, RationalPolynomial> einstein_constant_parts(const SystemParams& sp) {
  const RationalFunction l = einstein_constant(sp, RationalFunction::x());
  return {l.num(), l.den()};
}

RationalPolynomial q1_coeffs(const SystemParams& sp) {
  const BigRational k1(sp.k1), k(sp.k), pm(sp.p - 1);
  return RationalPolynomial({k1 * (k * k * pm * pm + k * k1 * pm + k1 * k1 - 1), -2 * k * k1 * pm * (k1 + k * pm),
                             k * pm * (k * k1 * pm + 1)});
}

namespace {

RationalPolynomial from_table(const std::vector<BigInt>& t) {
  std::vector<BigRational> c;
  c.reserve(t.size());
  for (const auto& z : t) c.emplace_back(z);
  return RationalPolynomial(std::move(c));
}

}  // namespace

RationalPolynomial f3_coeffs(const SystemParams& sp) {
  const auto t = detail::f3_table(BigInt(sp.k1), BigInt(sp.k), BigInt(sp.p));
  if (sgn(t.front()) <= 0) throw TheoremViolation("F3(0) = a_0 is not positive at " + sp.to_string());
  if (sgn(t.back()) <= 0) throw TheoremViolation("leading coefficient a_16 is not positive at " + sp.to_string());
  return from_table(t);
}

RationalPolynomial g3_coeffs(const SystemParams& sp) {
  if (sp.k1 != sp.k) throw UnsupportedShapeError("G3 is defined only for k1 = k");
  const auto t = detail::g3_table(BigInt(sp.k1), BigInt(sp.k), BigInt(sp.p));
  RationalPolynomial g = from_table(t);
  if (sgn(t.front()) >= 0) throw TheoremViolation("b_0 is not negative at " + sp.to_string());
  if (sgn(g(BigRational(1))) <= 0) throw TheoremViolation("G3(1) is not positive at " + sp.to_string());
  const RationalPolynomial lhs = RationalPolynomial({BigRational(-sp.k * sp.k), BigRational(sp.k * sp.k)}) * g;
  if (!(lhs == f3_coeffs(sp))) throw TheoremViolation("k^2 (x-1) G3 differs from F3 at " + sp.to_string());
  return g;
}

BigInt g3_at_one_factored(const SystemParams& sp) {
  const BigInt k(sp.k), p(sp.p);
  const BigInt k2 = k * k;
  return 2 * (k - 1) * (k - 1) * (k + 1) * (k + 1) * p * p * (k * p - 2) * (k * p + 2) *
         (k2 * k2 * p * p * p - 12 * k2 * p - 8 * k2 - 8);
}

RationalPolynomial f3_via_elimination(const SystemParams& sp, int samples) {
  if (samples < 20) throw ParameterError("elimination needs at least 20 samples");
  const BigRational k1(sp.k1), k(sp.k), pm(sp.p - 1);
  std::vector<InterpolationPoint> pts;
  for (int i = 1; i <= samples; ++i) {
    const BigRational t(i);
    const auto m = case2_metric(sp, t);
    const BigRational f = system_f(sp, m)[2];
    const BigRational d2 = x2_denominator(sp, t);
    pts.emplace_back(t, f * ((k * k * pm + 2) * t * t + k * k1) * d2 * d2 * d2);
  }
  const RationalPolynomial num = interpolate_checked(pts, 18).strip_low_order();
  if (!proportional(f3_coeffs(sp), num))
    throw EliminationMismatchError("eliminated f3 is not proportional to F3 at " + sp.to_string());
  return num;
}

BigRational large_k1_beta(const SystemParams& sp) {
  const BigRational k1(sp.k1), k(sp.k), p(sp.p), pm(sp.p - 1);
  const BigRational k2 = k * k;
  return (k2 * pm + 2) * (k2 * pm * p - 2) * k1 / (k * pm * (k2 * k2 * pm * pm * (p + 2) - 8 * k2 + 4));
}

std::string to_string(SolutionCase c) {
  switch (c) {
    case SolutionCase::BiInvariant:
      return "BiInvariant";
    case SolutionCase::Case1:
      return "Case1";
    case SolutionCase::Case2:
      return "Case2";
  }
  return "?";
}

std::string Classification::label() const {
  if (bi_invariant) return "NaturallyReductive(bi-invariant)";
  if (criterion_i && criterion_ii) return "NaturallyReductive(i,ii)";
  if (criterion_i) return "NaturallyReductive(i)";
  if (criterion_ii) return "NaturallyReductive(ii)";
  return "NonNaturallyReductive";
}

Classification classify(const EinsteinSolution& s) {
  Classification c;
  if (s.kind == SolutionCase::BiInvariant) {
    c.criterion_i = c.criterion_ii = c.bi_invariant = true;
    return c;
  }
  const BigRational one(1);
  const bool x12_is_one = s.exact && s.exact->x12 == one && (s.interval.contains(one) || s.interval.exact == one);
  c.criterion_i = x12_is_one;
  if (s.kind == SolutionCase::Case1) {
    c.criterion_ii = true;
  } else if (s.exact) {
    c.criterion_ii = s.exact->x2 == one && s.exact->y2 == one;
  }
  return c;
}

namespace {

struct PositivityForms {
  RationalFunction x1, x2, y1, y2, one_minus_x2;
};

PositivityForms positivity_forms(const SystemParams& sp) {
  const RationalFunction X = RationalFunction::x();
  const auto m = case2_metric(sp, X);
  return {m.x1, m.x2, m.y1, m.y2, one_minus_x2(sp, X)};
}

// f has no zero or pole in [lo, hi] and is positive there.
bool positive_on(const RationalFunction& f, const BigRational& lo, const BigRational& hi) {
  const auto clear = [&](const RationalPolynomial& q) {
    if (q.is_zero()) return false;
    if (q.degree() == 0) return true;
    return sgn(q(lo)) != 0 && count_roots(q, lo, hi) == 0;
  };
  return clear(f.num()) && clear(f.den()) && sgn(f((lo + hi) / 2)) > 0;
}

double max_abs(const std::array<MpFloat, 5>& f) {
  double m = 0.0;
  for (const auto& v : f) m = std::max(m, std::abs(v.to_double()));
  return m;
}

SymmetricMetric to_double(const SymmetricMetricT<MpFloat>& m) {
  return {m.y1.to_double(), m.y2.to_double(), m.x1.to_double(), m.x2.to_double(), m.x12.to_double(), m.x23.to_double()};
}

SymmetricMetricT<MpFloat> to_mp(const SymmetricMetricT<BigRational>& m) {
  return {MpFloat(m.y1), MpFloat(m.y2), MpFloat(m.x1), MpFloat(m.x2), MpFloat(m.x12), MpFloat(m.x23)};
}

std::string brief(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void fill_values(EinsteinSolution& s, const SymmetricMetricT<MpFloat>& m, const SolveOptions& opts) {
  s.x12 = m.x12;
  s.x1 = m.x1;
  s.x2 = m.x2;
  s.y1 = m.y1;
  s.y2 = m.y2;
  s.f_residual = max_abs(system_f(s.params, m));
  if (!opts.oracle) {
    s.oracle_note = "skipped: disabled";
  } else if (s.params.N() > opts.oracle_max_n) {
    s.oracle_note = "skipped: N = " + std::to_string(s.params.N()) + " exceeds oracle cap " +
                    std::to_string(opts.oracle_max_n);
  } else {
    s.oracle_residual = oracle_einstein_residual(s.params, to_double(m), s.lambda.to_double());
    s.oracle_checked = true;
  }
  const double bound = std::pow(10.0, -0.5 * opts.bits * std::log10(2.0));
  if (!(s.f_residual <= bound))
    throw NumericalConsistencyError("residual " + brief(s.f_residual) + " above " + brief(bound) + " at x12 = " +
                                    s.x12.to_string(20));
  if (s.oracle_checked && !(s.oracle_residual <= 1e-8))
    throw NumericalConsistencyError("oracle residual " + brief(s.oracle_residual) + " at x12 = " + s.x12.to_string(20));
}

bool positive(const SymmetricMetricT<BigRational>& m) {
  return sgn(m.x1) > 0 && sgn(m.x2) > 0 && sgn(m.y1) > 0 && sgn(m.y2) > 0 && sgn(m.x12) > 0 && sgn(m.x23) > 0;
}

}  // namespace

SolveResult solve_system(const SystemParams& sp, const SolveOptions& opts) {
  if (opts.bits < 64) throw ParameterError("precision must be at least 64 bits");
  make_params(sp.k1, sp.k, sp.p);
  PrecisionScope scope(opts.bits);
  SolveResult res;
  res.params = sp;
  res.q1 = q1_coeffs(sp);
  res.f3 = f3_coeffs(sp);
  res.range_hi = opts.range_hi.value_or(BigRational(sp.k1 * sp.k * sp.p));
  const BigRational zero(0), one(1);

  {
    EinsteinSolution s;
    s.params = sp;
    s.kind = SolutionCase::BiInvariant;
    s.polynomial = "none";
    s.interval = {one, one, 0, 0, one};
    s.exact = SymmetricMetricT<BigRational>{one, one, one, one, one, one};
    s.exact_lambda = BigRational(1, 4);
    s.lambda = MpFloat(*s.exact_lambda);
    s.positivity_certified = true;
    fill_values(s, to_mp(*s.exact), opts);
    s.classification = classify(s);
    res.solutions.push_back(std::move(s));
  }

  for (const auto& iv : sturm_isolate(res.q1, zero, cauchy_bound(res.q1), {one})) {
    EinsteinSolution s;
    s.params = sp;
    s.kind = SolutionCase::Case1;
    s.polynomial = "Q1";
    const RefinedRoot r = refine_root(res.q1, iv, opts.bits);
    s.interval = r.bracket.exact ? r.bracket : decimal_bracket(res.q1, iv, r.value.to_rational(), r.bracket);
    SymmetricMetricT<MpFloat> m = case1_metric(sp, r.value);
    if (r.bracket.exact) {
      s.exact = case1_metric(sp, *r.bracket.exact);
      s.exact_lambda = s.exact->y1 / (4 * s.exact->x12 * s.exact->x12);
      m = to_mp(*s.exact);
      s.lambda = MpFloat(*s.exact_lambda);
    } else {
      s.lambda = m.y1 / (MpFloat(4) * m.x12 * m.x12);
    }
    s.positivity_certified = sgn(r.bracket.lo) >= 0;
    fill_values(s, m, opts);
    s.classification = classify(s);
    res.solutions.push_back(std::move(s));
  }

  const auto intervals = sturm_isolate(res.f3, zero, res.range_hi, {one});
  res.f3_roots_in_range = static_cast<int>(intervals.size());
  const BigRational bound = cauchy_bound(res.f3);
  res.f3_roots_beyond_range = res.range_hi < bound ? count_roots(res.f3, res.range_hi, bound) : 0;
  std::optional<PositivityForms> forms;
  for (const auto& iv : intervals) {
    EinsteinSolution s;
    s.params = sp;
    s.kind = SolutionCase::Case2;
    s.polynomial = "F3";
    const RefinedRoot r = refine_root(res.f3, iv, opts.bits);
    s.interval = r.bracket.exact ? r.bracket : decimal_bracket(res.f3, iv, r.value.to_rational(), r.bracket);
    SymmetricMetricT<MpFloat> m;
    if (r.bracket.exact) {
      const BigRational& x = *r.bracket.exact;
      s.exact = case2_metric(sp, x);
      s.exact_lambda = einstein_constant(sp, x);
      s.positivity_certified = positive(*s.exact);
      s.x2_below_one = s.exact->x2 < one;
      m = to_mp(*s.exact);
      s.lambda = MpFloat(*s.exact_lambda);
    } else {
      if (!forms) forms = positivity_forms(sp);
      const BigRational &lo = r.bracket.lo, &hi = r.bracket.hi;
      s.positivity_certified = positive_on(forms->x1, lo, hi) && positive_on(forms->x2, lo, hi) &&
                               positive_on(forms->y1, lo, hi) && positive_on(forms->y2, lo, hi);
      s.x2_below_one = positive_on(forms->one_minus_x2, lo, hi);
      m = case2_metric(sp, r.value);
      s.lambda = einstein_constant(sp, r.value);
    }
    if (!s.positivity_certified) {
      ++res.f3_roots_nonpositive;
      continue;
    }
    fill_values(s, m, opts);
    s.classification = classify(s);
    res.solutions.push_back(std::move(s));
  }

  std::vector<const EinsteinSolution*> case2;
  for (const auto& s : res.solutions)
    if (s.kind == SolutionCase::Case2) case2.push_back(&s);
  const auto below_one = std::count_if(case2.begin(), case2.end(), [&](const EinsteinSolution* s) {
    return s->interval.hi <= one && !(s->interval.exact == one) && !s->classification.naturally_reductive();
  });
  const auto above_one = std::count_if(case2.begin(), case2.end(), [&](const EinsteinSolution* s) {
    return s->interval.lo >= one && !(s->interval.exact == one) && !s->classification.naturally_reductive();
  });
  const bool has_one = std::any_of(case2.begin(), case2.end(),
                                   [&](const EinsteinSolution* s) { return s->classification.criterion_i; });

  std::vector<std::string> notes;
  if (sp.k1 > sp.k) {
    res.expectation = "at least two non-naturally-reductive Case 2 solutions in (0,1) and (1," +
                      to_string(res.range_hi) + ")";
    res.expectation_met = below_one >= 1 && above_one >= 1;
  } else if (sp.k1 == sp.k) {
    res.expectation = "Case 2 root x12 = 1 and at least one non-naturally-reductive root in (0,1)";
    res.expectation_met = has_one && below_one >= 1;
  } else {
    res.expectation = "none";
    res.expectation_met = true;
  }
  if (sp.k1 >= 8 * sp.k * sp.p) {
    res.expectation += "; at least four Case 2 solutions";
    res.expectation_met = res.expectation_met && case2.size() >= 4;
  }
  for (const auto* s : case2)
    if (!s->x2_below_one) res.expectation_met = false, notes.push_back("x2 < 1 not certified");
  if (res.f3_roots_nonpositive > 0)
    notes.push_back(std::to_string(res.f3_roots_nonpositive) + " F3 root(s) with non-positive metric");
  notes.push_back(std::to_string(case2.size()) + " Case 2 solution(s): " + std::to_string(below_one) +
                  " below 1, " + std::to_string(above_one) + " above 1" + (has_one ? ", exact root 1" : ""));
  for (std::size_t i = 0; i < notes.size(); ++i) res.expectation_detail += (i ? "; " : "") + notes[i];

  res.monotonicity = lambda_monotonicity_certificate(sp);
  bool distinct = true;
  const MpFloat tol = MpFloat::pow2(-opts.bits / 2);
  for (std::size_t i = 0; i < case2.size(); ++i)
    for (std::size_t j = i + 1; j < case2.size(); ++j)
      if (!(abs(case2[i]->lambda - case2[j]->lambda) > tol)) distinct = false;
  res.case2_non_isometric = case2.size() >= 2 && res.monotonicity.pass && distinct;
  return res;
}

SolveResult solve(const SystemParams& sp, const SolveOptions& opts) {
  SolveResult r = solve_system(sp, opts);
  if (!r.expectation_met)
    throw TheoremViolation("expected solutions missing at " + sp.to_string() + ": " + r.expectation_detail);
  return r;
}

bool case1_branch_exact(const SystemParams& sp) {
  const RationalPolynomial q = q1_coeffs(sp);
  const auto f = system_f(sp, case1_metric(sp, RationalFunction::x()));
  for (const auto& fi : f)
    if (!(fi.num() % q).is_zero()) return false;
  return true;
}

double oracle_einstein_residual(const SystemParams& sp, const SymmetricMetric& m, double lambda) {
  const Decomposition dec = build_decomposition(sp.partition());
  const GeneralMetric g = to_general_metric(dec.partition(), m);
  const Eigen::MatrixXd ric = ricci_oracle(dec, g);
  const auto d = static_cast<Eigen::Index>(dec.dim());
  std::vector<double> x(static_cast<std::size_t>(d));
  for (Eigen::Index a = 0; a < d; ++a)
    x[static_cast<std::size_t>(a)] = g.at(dec.modules()[dec.owner(static_cast<std::size_t>(a))].index);
  double worst = 0.0;
  for (Eigen::Index a = 0; a < d; ++a)
    for (Eigen::Index b = 0; b < d; ++b) {
      const double xa = x[static_cast<std::size_t>(a)], xb = x[static_cast<std::size_t>(b)];
      const double v = std::sqrt(xa * xb) * ric(a, b) - (a == b ? lambda * xa : 0.0);
      worst = std::max(worst, std::abs(v));
    }
  return worst / g.max_coeff();
}

namespace {

using Vec5 = Eigen::Matrix<double, 5, 1>;

SymmetricMetric from_log(const Vec5& z) {
  return {std::exp(z(0)), std::exp(z(1)), std::exp(z(2)), std::exp(z(3)), std::exp(z(4)), 1.0};
}

Vec5 residual(const SystemParams& sp, const Vec5& z) {
  const auto f = system_f(sp, from_log(z));
  Vec5 r;
  for (int i = 0; i < 5; ++i) r(i) = f[static_cast<std::size_t>(i)];
  return r;
}

}  // namespace

std::vector<ExploreFind> explore_newton(const SolveResult& certified, int starts, std::uint64_t seed) {
  const SystemParams& sp = certified.params;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(std::log(0.05), std::log(20.0));
  std::vector<ExploreFind> finds;
  const double scale = static_cast<double>(sp.N() * sp.N() * sp.N());
  for (int s = 0; s < starts; ++s) {
    Vec5 z;
    for (int i = 0; i < 5; ++i) z(i) = u(rng);
    Vec5 r = residual(sp, z);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      if (r.norm() < 1e-12 * scale) {
        converged = true;
        break;
      }
      Eigen::Matrix<double, 5, 5> J;
      for (int j = 0; j < 5; ++j) {
        Vec5 zp = z;
        const double h = 1e-7 * std::max(1.0, std::abs(z(j)));
        zp(j) += h;
        J.col(j) = (residual(sp, zp) - r) / h;
      }
      const Vec5 step = J.colPivHouseholderQr().solve(-r);
      if (!step.allFinite()) break;
      double t = 1.0;
      bool moved = false;
      for (int k = 0; k < 30; ++k, t /= 2) {
        const Vec5 zn = z + t * step;
        if (zn.cwiseAbs().maxCoeff() > 12.0) continue;
        const Vec5 rn = residual(sp, zn);
        if (rn.allFinite() && rn.norm() < r.norm()) {
          z = zn;
          r = rn;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    if (!converged) continue;
    const SymmetricMetric m = from_log(z);
    const auto same = [](double a, double b) { return std::abs(a - b) <= 1e-4 * std::max(1.0, std::abs(b)); };
    bool dup = false;
    for (const auto& f : finds)
      if (same(m.x12, f.metric.x12) && same(m.x1, f.metric.x1) && same(m.x2, f.metric.x2)) dup = true;
    if (dup) continue;
    ExploreFind f{m, r.cwiseAbs().maxCoeff(), false};
    for (const auto& c : certified.solutions)
      if (same(m.x12, c.x12.to_double()) && same(m.x1, c.x1.to_double()) && same(m.x2, c.x2.to_double()) &&
          same(m.y1, c.y1.to_double()) && same(m.y2, c.y2.to_double()))
        f.matched = true;
    finds.push_back(f);
  }
  std::sort(finds.begin(), finds.end(), [](const ExploreFind& a, const ExploreFind& b) {
    return a.metric.x12 < b.metric.x12;
  });
  return finds;
}

}  // namespace einsu
