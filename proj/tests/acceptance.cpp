// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "einsu/cli.hpp"
#include "einsu/einstein.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace einsu;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

const std::vector<std::vector<int>> kPartitions = {{2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}};
const std::vector<SystemParams> kElimTriples = {make_params(3, 2, 3), make_params(4, 2, 3), make_params(5, 3, 3),
                                                make_params(3, 2, 4), make_params(4, 3, 4)};

std::vector<const EinsteinSolution*> of_case(const SolveResult& r, SolutionCase c) {
  std::vector<const EinsteinSolution*> out;
  for (const auto& s : r.solutions)
    if (s.kind == c) out.push_back(&s);
  return out;
}

const VerifyCheck* find_check(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<VerifyReport> g_reports;
double g_verify_seconds = 0.0;

const std::vector<VerifyReport>& reports() {
  if (g_reports.empty()) {
    const auto t0 = Clock::now();
    for (const auto& p : kPartitions) g_reports.push_back(run_verification(Partition(p), 20, 42));
    g_verify_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  }
  return g_reports;
}

Outcome criterion1() {
  Outcome o;
  double worst_rel = 0.0, worst_off = 0.0;
  for (const auto& r : reports()) {
    for (const char* name : {"ricci_closed_form_vs_oracle", "oracle_off_block", "oracle_block_scalar"}) {
      const VerifyCheck* c = find_check(r, name);
      o.require(c && c->pass && c->checked > 0, r.partition.to_string() + " " + name);
    }
    if (const VerifyCheck* c = find_check(r, "ricci_closed_form_vs_oracle")) {
      o.require(c->tolerance <= 1e-9, "tolerance");
      worst_rel = std::max(worst_rel, c->max_error);
    }
    if (const VerifyCheck* c = find_check(r, "oracle_off_block")) {
      o.require(c->tolerance <= 1e-10, "tolerance");
      worst_off = std::max(worst_off, c->max_error);
    }
  }
  o.require(g_verify_seconds <= 60.0, "runtime");
  o.note("20 metrics x 3 partitions, max rel err " + sci(worst_rel) + ", max off-block " + sci(worst_off) + ", " +
         sci(g_verify_seconds, 2) + " s");
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = 0.0;
  for (const auto& r : reports()) {
    for (const char* name : {"triples_closed_vs_brute", "center_sums_closed_vs_brute", "tail_sum_resolution"}) {
      const VerifyCheck* c = find_check(r, name);
      o.require(c && c->pass && c->checked > 0, r.partition.to_string() + " " + name);
      if (c) worst = std::max(worst, c->max_error);
    }
    o.require(!r.tail_sum.empty(), "tail sum recorded for " + r.partition.to_string());
  }
  o.note("max error " + sci(worst));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const SolveResult r = solve_system(make_params(3, 2, 3));
  const auto c2 = of_case(r, SolutionCase::Case2);
  o.require(c2.size() >= 2, "two Case 2 solutions");
  bool below = false, above = false;
  for (const auto* s : c2) {
    below = below || (s->interval.lo >= 0 && s->interval.hi <= 1);
    above = above || (s->interval.lo >= 1 && s->interval.hi <= 18);
    o.require(s->positivity_certified, "positivity");
    o.require(s->x2_below_one, "x2 < 1");
    o.require(s->classification.label() == "NonNaturallyReductive", "classification");
    o.require(s->oracle_checked && s->oracle_residual <= 1e-8, "oracle residual");
    o.note("x12 = " + s->x12.to_string(12) + " oracle " + sci(s->oracle_residual));
  }
  o.require(below && above, "intervals in (0,1) and (1,18)");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const SystemParams sp = make_params(2, 2, 3);
  const auto x = RationalPolynomial::x();
  o.require(RationalPolynomial(BigRational(4)) * (x - RationalPolynomial(BigRational(1))) * g3_coeffs(sp) ==
                f3_coeffs(sp),
            "F3 = k^2 (x-1) G3");
  const SolveResult r = solve_system(sp);
  bool one = false, gamma = false;
  for (const auto* s : of_case(r, SolutionCase::Case2)) {
    o.require(s->oracle_checked && s->oracle_residual <= 1e-8, "oracle residual");
    if (s->interval.exact && *s->interval.exact == 1)
      one = s->classification.naturally_reductive();
    else if (s->interval.hi <= 1)
      gamma = s->classification.label() == "NonNaturallyReductive";
  }
  o.require(one, "x12 = 1 naturally reductive");
  o.require(gamma, "gamma in (0,1) not naturally reductive");
  o.note("G3(1) = " + to_string(g3_at_one_factored(sp)));
  return o;
}

Outcome criterion5() {
  Outcome o;
  const SystemParams sp = make_params(48, 2, 3);
  const SignCertificate c = large_k1_certificate(sp);
  o.require(c.applicable && c.pass, "sign certificate");
  o.require(c.beta == make_rational(660, 73), "beta = 660/73");
  o.require(c.sturm_count >= 4, "Sturm count");
  const SolveResult r = solve_system(sp);
  const auto c2 = of_case(r, SolutionCase::Case2);
  o.require(c2.size() == 4, "four Case 2 solutions");
  for (const auto* s : c2) {
    o.require(s->positivity_certified, "positivity");
    o.require(s->f_residual < 1e-60, "residual");
    o.require(!s->oracle_checked && !s->oracle_note.empty(), "oracle flagged as skipped");
  }
  o.note("Sturm count " + std::to_string(c.sturm_count) + ", oracle skipped (N = 52)");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const SystemParams sp = make_params(3, 2, 3);
  o.require(q1_coeffs(sp) == RationalPolynomial({BigRational(108), BigRational(-168), BigRational(52)}),
            "Q1 = 52x^2 - 168x + 108");
  o.require(case1_branch_exact(sp), "system vanishes modulo Q1");
  const SolveResult r = solve_system(sp);
  const auto c1 = of_case(r, SolutionCase::Case1);
  o.require(c1.size() == 2, "two Case 1 roots");
  for (const auto* s : c1) {
    o.require(s->x12.sign() > 0, "positive root");
    o.require(s->classification.label() == "NaturallyReductive(ii)", "classification");
  }
  const auto bi = of_case(r, SolutionCase::BiInvariant);
  o.require(bi.size() == 1 && bi[0]->exact_lambda && *bi[0]->exact_lambda == make_rational(1, 4), "lambda = 1/4");
  for (const auto* s : c1) o.note("x12 = " + s->x12.to_string(12));
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (const auto& sp : kElimTriples) {
    try {
      o.require(proportional(f3_via_elimination(sp), f3_coeffs(sp)), sp.to_string());
    } catch (const Error& e) {
      o.require(false, sp.to_string() + " " + e.what());
    }
  }
  o.note("5 triples proportional");
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (const auto& sp : kElimTriples) {
    const MonotonicityCertificate c = lambda_monotonicity_certificate(sp, 100);
    o.require(c.pass && c.grid_size == 100, "monotonicity " + sp.to_string());
  }
  const SolveResult r = solve_system(make_params(3, 2, 3));
  o.require(r.case2_non_isometric, "(3,2,3) Case 2 metrics non-isometric");
  const auto c2 = of_case(r, SolutionCase::Case2);
  if (c2.size() >= 2) o.note("lambda " + c2[0]->lambda.to_string(10) + " vs " + c2[1]->lambda.to_string(10));
  return o;
}

Outcome criterion9() {
  Outcome o;
  double worst = 0.0;
  std::vector<std::vector<int>> parts = kPartitions;
  parts.push_back({2, 3, 1});
  parts.push_back({4, 2, 2});
  for (const auto& p : parts) {
    const Decomposition dec = build_decomposition(Partition(p));
    const Eigen::MatrixXd ric = ricci_oracle(dec, GeneralMetric::uniform(dec));
    const auto n = static_cast<Eigen::Index>(dec.dim());
    worst = std::max(worst, (ric - 0.25 * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff());
  }
  o.require(worst <= 1e-12, "oracle at the all-ones metric");
  const BigRational one(1), quarter = make_rational(1, 4);
  for (const auto& sp : kElimTriples) {
    const auto rc = ricci_components_symmetric<BigRational>(sp.k1, sp.k, sp.p, {one, one, one, one, one, one});
    for (const auto& v : {rc.rr1, rc.rr2, rc.r1, rc.r2, rc.r12, rc.r23}) o.require(v == quarter, sp.to_string());
  }
  o.note("max oracle deviation " + sci(worst) + ", closed forms exactly 1/4");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                          criterion6, criterion7, criterion8, criterion9};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::printf("criterion %zu: %s (%.2f s) %s\n", i + 1, o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
