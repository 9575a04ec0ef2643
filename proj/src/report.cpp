#include "einsu/report.hpp"

#include <cstdio>

namespace einsu {

std::string sci(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

namespace {

Json value_json(const MpFloat& v, const std::optional<BigRational>& exact) {
  Json j;
  j["exact"] = exact ? Json(to_string(*exact)) : Json(nullptr);
  j["decimal"] = v.to_string(30);
  return j;
}

std::optional<BigRational> field(const EinsteinSolution& s, BigRational SymmetricMetricT<BigRational>::*m) {
  if (!s.exact) return std::nullopt;
  return (*s.exact).*m;
}

std::vector<std::string> certificates_for(const EinsteinSolution& s, const SolveResult& r) {
  std::vector<std::string> c;
  if (s.kind == SolutionCase::Case2) {
    c.push_back("sturm-isolation:F3");
    c.push_back(std::string("monotonicity:") + (r.monotonicity.pass ? "PASS" : "FAIL"));
    if (s.params.k1 >= 8 * s.params.k * s.params.p) c.push_back("large_k1");
  } else if (s.kind == SolutionCase::Case1) {
    c.push_back("sturm-isolation:Q1");
  }
  return c;
}

}  // namespace

Json params_json(const SystemParams& sp) {
  Json j;
  j["k1"] = sp.k1;
  j["k"] = sp.k;
  j["p"] = sp.p;
  j["N"] = sp.N();
  return j;
}

Json polynomial_json(const RationalPolynomial& p) {
  Json j;
  j["degree"] = p.degree();
  Json c = Json::array();
  for (const auto& a : p.coeffs()) c.push_back(to_string(a));
  j["coefficients"] = c;
  return j;
}

Json solution_json(const EinsteinSolution& s, const SolveResult& context) {
  Json j;
  j["params"] = params_json(s.params);
  j["case"] = to_string(s.kind);
  j["polynomial"] = s.polynomial;
  Json x12;
  x12["interval"] = Json::array({to_string(s.interval.lo), to_string(s.interval.hi)});
  x12["exact"] = s.interval.exact ? Json(to_string(*s.interval.exact)) : Json(nullptr);
  x12["decimal"] = s.x12.to_string(30);
  j["x12"] = x12;
  j["x1"] = value_json(s.x1, field(s, &SymmetricMetricT<BigRational>::x1));
  j["x2"] = value_json(s.x2, field(s, &SymmetricMetricT<BigRational>::x2));
  j["y1"] = value_json(s.y1, field(s, &SymmetricMetricT<BigRational>::y1));
  j["y2"] = value_json(s.y2, field(s, &SymmetricMetricT<BigRational>::y2));
  j["x23"] = "1";
  j["lambda"] = value_json(s.lambda, s.exact_lambda);
  j["positivity_certified"] = s.positivity_certified;
  if (s.kind == SolutionCase::Case2) j["x2_below_one"] = s.x2_below_one;
  Json res;
  res["f_max"] = sci(s.f_residual);
  res["oracle"] = s.oracle_checked ? Json(sci(s.oracle_residual)) : Json(nullptr);
  if (!s.oracle_note.empty()) res["oracle_note"] = s.oracle_note;
  j["residuals"] = res;
  j["classification"] = s.classification.label();
  j["certificates"] = certificates_for(s, context);
  return j;
}

Json monotonicity_json(const MonotonicityCertificate& c, bool tables) {
  Json j;
  j["params"] = params_json(c.params);
  j["grid_size"] = c.grid_size;
  j["grid"] = "log-spaced on [1/1000, k1*k*p]";
  j["status"] = c.pass ? "PASS" : "FAIL";
  j["witness"] = c.witness ? Json(to_string(*c.witness)) : Json(nullptr);
  j["derivative_numerator_degree"] = c.derivative_numerator.degree();
  j["derivative_numerator_roots_in_range"] = c.numerator_roots_in_range;
  j["printed_q_matches"] = c.printed_q_matches;
  if (tables) {
    j["derivative_numerator"] = polynomial_json(c.derivative_numerator);
    j["derivative_denominator"] = polynomial_json(c.derivative_denominator);
  }
  return j;
}

Json sign_certificate_json(const SignCertificate& c) {
  Json j;
  j["params"] = params_json(c.params);
  j["applicable"] = c.applicable;
  j["beta"] = to_string(c.beta);
  j["beta_above_two"] = c.beta_above_two;
  if (!c.applicable) {
    j["status"] = "not-applicable";
    j["reason"] = "k1 < 8*k*p";
    return j;
  }
  Json signs = Json::array();
  for (const auto& [x, s] : c.signs) signs.push_back(Json{{"x", to_string(x)}, {"sign", s}});
  j["signs"] = signs;
  j["implied_min_roots"] = c.implied_min_roots;
  j["sturm_count"] = c.sturm_count;
  j["status"] = c.pass ? "PASS" : "FAIL";
  return j;
}

Json solve_json(const SolveResult& r, int precision_bits, bool tables) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "solve";
  j["params"] = params_json(r.params);
  j["precision_bits"] = precision_bits;
  j["range"] = Json::array({"0", to_string(r.range_hi)});
  Json e;
  e["statement"] = r.expectation;
  e["met"] = r.expectation_met;
  e["detail"] = r.expectation_detail;
  j["expectation"] = e;
  j["f3_roots_in_range"] = r.f3_roots_in_range;
  j["f3_roots_beyond_range"] = r.f3_roots_beyond_range;
  j["f3_roots_nonpositive"] = r.f3_roots_nonpositive;
  j["monotonicity"] = monotonicity_json(r.monotonicity);
  j["case2_non_isometric"] = r.case2_non_isometric;
  if (tables) {
    j["f3"] = polynomial_json(r.f3);
    j["q1"] = polynomial_json(r.q1);
    if (r.params.k1 == r.params.k) j["g3"] = polynomial_json(g3_coeffs(r.params));
  }
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(solution_json(s, r));
  j["solutions"] = sols;
  return j;
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_cell(cells[i]);
    out += "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string to_markdown(const Table& t) {
  std::string out;
  const auto line = [&](const std::vector<std::string>& cells) {
    out += "|";
    for (const auto& c : cells) out += " " + md_cell(c) + " |";
    out += "\n";
  };
  line(t.header);
  out += "|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out += " --- |";
  out += "\n";
  for (const auto& r : t.rows) line(r);
  return out;
}

Json table_rows_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json o;
    for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = i < r.size() ? r[i] : "";
    rows.push_back(o);
  }
  return rows;
}

std::vector<std::string> solution_header() {
  return {"k1", "k", "p", "N", "case", "polynomial", "x12_lo", "x12_hi", "x12", "x1", "x2", "y1", "y2", "lambda",
          "lambda_exact", "f_residual", "oracle_residual", "positivity_certified", "x2_below_one", "classification"};
}

std::vector<std::string> solution_row(const EinsteinSolution& s) {
  const auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return {std::to_string(s.params.k1),
          std::to_string(s.params.k),
          std::to_string(s.params.p),
          std::to_string(s.params.N()),
          to_string(s.kind),
          s.polynomial,
          to_string(s.interval.lo),
          to_string(s.interval.hi),
          s.x12.to_string(30),
          s.x1.to_string(30),
          s.x2.to_string(30),
          s.y1.to_string(30),
          s.y2.to_string(30),
          s.lambda.to_string(30),
          s.exact_lambda ? to_string(*s.exact_lambda) : "",
          sci(s.f_residual),
          s.oracle_checked ? sci(s.oracle_residual) : "skipped",
          b(s.positivity_certified),
          s.kind == SolutionCase::Case2 ? b(s.x2_below_one) : "",
          s.classification.label()};
}

Table solve_table(const SolveResult& r) {
  Table t{solution_header(), {}};
  for (const auto& s : r.solutions) t.rows.push_back(solution_row(s));
  return t;
}

std::vector<std::string> sweep_header() {
  return {"k1",           "k",
          "p",            "N",
          "case1_count",  "case2_count",
          "case2_x12",    "case2_lambda",
          "case2_labels", "f3_roots_beyond_range",
          "expectation",  "expectation_met",
          "monotonicity", "case2_non_isometric"};
}

std::vector<std::string> sweep_row(const SolveResult& r) {
  int c1 = 0, c2 = 0;
  std::string xs, ls, labels;
  for (const auto& s : r.solutions) {
    if (s.kind == SolutionCase::Case1) ++c1;
    if (s.kind != SolutionCase::Case2) continue;
    ++c2;
    const std::string sep = c2 > 1 ? ";" : "";
    xs += sep + s.x12.to_string(15);
    ls += sep + s.lambda.to_string(15);
    labels += sep + s.classification.label();
  }
  return {std::to_string(r.params.k1),
          std::to_string(r.params.k),
          std::to_string(r.params.p),
          std::to_string(r.params.N()),
          std::to_string(c1),
          std::to_string(c2),
          xs,
          ls,
          labels,
          std::to_string(r.f3_roots_beyond_range),
          r.expectation,
          r.expectation_met ? "true" : "false",
          r.monotonicity.pass ? "PASS" : "FAIL",
          r.case2_non_isometric ? "true" : "false"};
}

}  // namespace einsu
