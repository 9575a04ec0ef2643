#pragma once

#include "einsu/einstein.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace einsu {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "einsu/1";

/// Short scientific rendering used for residuals and tolerances.
std::string sci(double v, int digits = 3);

Json params_json(const SystemParams& sp);
Json polynomial_json(const RationalPolynomial& p);
Json solution_json(const EinsteinSolution& s, const SolveResult& context);
Json monotonicity_json(const MonotonicityCertificate& c, bool tables = false);
Json sign_certificate_json(const SignCertificate& c);
/// Full solve report; `tables` adds the F3, Q1 and G3 coefficient lists.
Json solve_json(const SolveResult& r, int precision_bits, bool tables = false);

/// A header plus string rows, rendered as CSV or a Markdown table.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t);
std::string to_markdown(const Table& t);
/// Rows as JSON objects keyed by the header, values kept as the same strings.
Json table_rows_json(const Table& t);

std::vector<std::string> solution_header();
std::vector<std::string> solution_row(const EinsteinSolution& s);
Table solve_table(const SolveResult& r);

std::vector<std::string> sweep_header();
std::vector<std::string> sweep_row(const SolveResult& r);

}  // namespace einsu
