#include "einsu/cli.hpp"

#include "einsu/curvature.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace einsu {

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const long v = std::stol(text, &used);
      if (used != text.size()) throw ParameterError("bad range '" + text + "'");
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    std::size_t ua = 0, ub = 0;
    const IntRange r{std::stol(a, &ua), std::stol(b, &ub)};
    if (ua != a.size() || ub != b.size()) throw ParameterError("bad range '" + text + "'");
    if (r.lo > r.hi) throw ParameterError("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw ParameterError("bad range '" + text + "'");
  }
}

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

namespace {

double rel_error(double got, double want) {
  const double d = std::abs(got - want);
  return std::abs(want) < 1e-6 ? d : d / std::abs(want);
}

VerifyCheck from_check_report(std::string name, const CheckReport& r, double tol) {
  VerifyCheck c{std::move(name), static_cast<long>(r.checked), r.max_error, tol, r.ok(), ""};
  if (!r.ok()) c.note = r.violations.front();
  return c;
}

double value_of(const RicciComponents& rc, const ModuleIndex& m) {
  switch (m.kind) {
    case ModuleIndex::Kind::Center:
      return m.a == 1 ? rc.rr1 : rc.rr2;
    case ModuleIndex::Kind::Simple:
      return m.a == 1 ? rc.r1 : rc.r2;
    case ModuleIndex::Kind::OffDiag:
      return m.a == 1 ? rc.r12 : rc.r23;
  }
  return 0.0;
}

}  // namespace

VerifyReport run_verification(const Partition& part, int trials, std::uint64_t seed) {
  VerifyReport rep{part, trials, seed, {}, {}};
  const Decomposition dec = build_decomposition(part);
  const StructureTensor A(dec);
  const auto mods = module_list(part);
  const int p = part.p();

  rep.checks.push_back(from_check_report("center_action", check_center_action(dec), 1e-12));
  rep.checks.push_back(from_check_report("bracket_relations", check_bracket_relations(dec, 3, seed), 1e-11));

  {
    VerifyCheck c{"triples_closed_vs_brute", 0, 0.0, 1e-10, true, ""};
    for (std::size_t i = 0; i < mods.size(); ++i)
      for (std::size_t j = i; j < mods.size(); ++j)
        for (std::size_t l = j; l < mods.size(); ++l) {
          const double brute = triple_brute(dec, A, mods[i], mods[j], mods[l]);
          const double closed = to_double(triple_closed(part, mods[i], mods[j], mods[l]));
          c.max_error = std::max(c.max_error, std::abs(brute - closed));
          ++c.checked;
        }
    c.pass = c.max_error <= c.tolerance;
    rep.checks.push_back(c);
  }

  const bool symmetric_family = p >= 3 && part.equal_tail() && part.k(1) >= 2 && part.k(2) >= 2;
  if (p >= 3 && part.equal_tail()) {
    const CenterSums cs = triple_sums_closed(part);
    const auto c = [](int i) { return ModuleIndex::center(i); };
    const auto m = [](int r, int s) { return ModuleIndex::offdiag(r, s); };
    double first_row_tail = 0.0, tail_module = 0.0, first_row_fixed = 0.0, tail_fixed = 0.0;
    for (int i = 2; i < p; ++i) first_row_tail += triple_brute(dec, A, m(1, 2), c(i), m(1, 2));
    for (int i = 1; i < p; ++i) tail_module += triple_brute(dec, A, m(2, 3), c(i), m(2, 3));
    for (int s = 2; s <= p; ++s) first_row_fixed += triple_brute(dec, A, m(1, s), c(2), m(1, s));
    for (int r = 2; r <= p; ++r)
      for (int s = r + 1; s <= p; ++s) tail_fixed += triple_brute(dec, A, m(r, s), c(2), m(r, s));
    const double first_row_c1 = triple_brute(dec, A, m(1, 2), c(1), m(1, 2));
    VerifyCheck v{"center_sums_closed_vs_brute", 5, 0.0, 1e-10, true, ""};
    for (const auto& [brute, closed] : {std::pair{first_row_tail, cs.first_row_tail}, {first_row_c1, cs.first_row_c1},
                                        {tail_module, cs.tail_module}, {first_row_fixed, cs.first_row_fixed},
                                        {tail_fixed, cs.tail_fixed}})
      v.max_error = std::max(v.max_error, std::abs(brute - to_double(closed)));
    v.pass = v.max_error <= v.tolerance;
    rep.checks.push_back(v);

    rep.tail_sum = resolve_tail_sum(dec, A);
    VerifyCheck t{"tail_sum_resolution", static_cast<long>(rep.tail_sum.size()), 0.0, 1e-10, true, ""};
    for (const auto& r : rep.tail_sum) {
      t.max_error = std::max(t.max_error, std::abs(r.brute - to_double(r.candidate_p_minus_1)));
      t.pass = t.pass && r.matches_p_minus_1;
    }
    t.note = "sum over 2<=r<s of [m_rs; c_t m_rs] equals (p-1)k/N";
    rep.checks.push_back(t);
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(std::log(0.25), std::log(4.0));
  const auto draw = [&] { return std::exp(logu(rng)); };

  if (symmetric_family) {
    VerifyCheck closed{"ricci_closed_form_vs_oracle", 0, 0.0, 1e-9, true, ""};
    VerifyCheck off{"oracle_off_block", 0, 0.0, 1e-10, true, ""};
    VerifyCheck scalar{"oracle_block_scalar", 0, 0.0, 1e-10, true, ""};
    for (int t = 0; t < trials; ++t) {
      SymmetricMetric sm;
      sm.y1 = draw();
      sm.y2 = draw();
      sm.x1 = draw();
      sm.x2 = draw();
      sm.x12 = draw();
      sm.x23 = draw();
      const Eigen::MatrixXd ric = ricci_oracle(dec, A, to_general_metric(part, sm));
      const RicciComponents rc = ricci_components_symmetric<double>(part.k(1), part.k(2), p, sm);
      for (const auto& [m, v] : oracle_module_diagonal(dec, ric)) {
        closed.max_error = std::max(closed.max_error, rel_error(v, value_of(rc, m)));
        ++closed.checked;
      }
      const OracleShape sh = oracle_shape(dec, ric);
      off.max_error = std::max(off.max_error, sh.off_block);
      scalar.max_error = std::max(scalar.max_error, sh.non_scalar);
      ++off.checked;
      ++scalar.checked;
    }
    for (auto* c : {&closed, &off, &scalar}) {
      c->pass = c->max_error <= c->tolerance;
      rep.checks.push_back(*c);
    }
  }

  {
    TripleTable table;
    const ExactTripleTable exact = closed_table(part);
    for (const auto& [key, v] : exact.entries()) table.set(key[0], key[1], key[2], to_double(v));
    VerifyCheck diag{"ricci_general_vs_oracle", 0, 0.0, 1e-9, true, ""};
    VerifyCheck center{"center_offdiag_vs_oracle", 0, 0.0, 1e-10, true, ""};
    for (int t = 0; t < trials; ++t) {
      std::map<ModuleIndex, double> coeffs;
      for (const auto& m : mods) coeffs[m] = draw();
      const GeneralMetric g(coeffs);
      const Eigen::MatrixXd ric = ricci_oracle(dec, A, g);
      const auto ps = ricci_diagonal_ps<double>(part, table, coeffs);
      for (const auto& [m, v] : oracle_module_diagonal(dec, ric)) {
        diag.max_error = std::max(diag.max_error, rel_error(v, ps.at(m)));
        ++diag.checked;
      }
      for (int i = 1; i < p; ++i)
        for (int j = 1; j < p; ++j) {
          if (i == j) continue;
          const auto oi = dec.modules()[dec.position(ModuleIndex::center(i))].offset;
          const auto oj = dec.modules()[dec.position(ModuleIndex::center(j))].offset;
          const double want = center_offdiag_in_oracle_basis(dec, g, i, j);
          center.max_error = std::max(center.max_error, std::abs(ric(static_cast<Eigen::Index>(oi),
                                                                      static_cast<Eigen::Index>(oj)) - want));
          ++center.checked;
        }
    }
    for (auto* c : {&diag, &center}) {
      c->pass = c->max_error <= c->tolerance;
      rep.checks.push_back(*c);
    }
  }
  return rep;
}

Json verify_json(const VerifyReport& r) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = "verify";
  j["partition"] = r.partition.to_string();
  j["N"] = r.partition.N();
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json o;
    o["name"] = c.name;
    o["checked"] = c.checked;
    o["max_error"] = sci(c.max_error);
    o["tolerance"] = sci(c.tolerance, 0);
    o["status"] = c.pass ? "PASS" : "FAIL";
    if (!c.note.empty()) o["note"] = c.note;
    checks.push_back(o);
  }
  j["checks"] = checks;
  if (!r.tail_sum.empty()) {
    Json ts = Json::array();
    for (const auto& t : r.tail_sum)
      ts.push_back(Json{{"t", t.t},
                        {"brute", sci(t.brute, 15)},
                        {"candidate_p_minus_1", to_string(t.candidate_p_minus_1)},
                        {"candidate_p_minus_2", to_string(t.candidate_p_minus_2)},
                        {"matches_p_minus_1", t.matches_p_minus_1},
                        {"matches_p_minus_2", t.matches_p_minus_2}});
    j["tail_sum"] = ts;
  }
  j["status"] = r.pass() ? "PASS" : "FAIL";
  return j;
}

Table verify_table(const VerifyReport& r) {
  Table t{{"check", "checked", "max_error", "tolerance", "status"}, {}};
  for (const auto& c : r.checks)
    t.rows.push_back({c.name, std::to_string(c.checked), sci(c.max_error), sci(c.tolerance, 0), c.pass ? "PASS" : "FAIL"});
  return t;
}

namespace {

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary | std::ios::trunc);
  if (!f) throw ParameterError("cannot write " + cfg.output);
  f << text;
}

std::string render(const RunConfig& cfg, const Json& j, const Table& t, const std::string& title) {
  if (cfg.format == "json") return j.dump(2) + "\n";
  if (cfg.format == "csv") return to_csv(t);
  return "# " + title + "\n\n" + to_markdown(t);
}

void check_common(const RunConfig& cfg) {
  if (cfg.precision_bits < 64) throw ParameterError("precision must be at least 64 bits");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "md")
    throw ParameterError("format must be json, csv or md");
}

Json explore_json(const std::vector<ExploreFind>& finds, int starts, std::uint64_t seed) {
  Json j;
  j["starts"] = starts;
  j["seed"] = seed;
  Json arr = Json::array();
  for (const auto& f : finds)
    arr.push_back(Json{{"x12", sci(f.metric.x12, 12)},
                       {"x1", sci(f.metric.x1, 12)},
                       {"x2", sci(f.metric.x2, 12)},
                       {"y1", sci(f.metric.y1, 12)},
                       {"y2", sci(f.metric.y2, 12)},
                       {"residual", sci(f.residual)},
                       {"matched_certified", f.matched}});
  j["finds"] = arr;
  return j;
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_common(cfg);
  const SystemParams sp = make_params(cfg.k1, cfg.k, cfg.p);
  SolveOptions opts;
  opts.bits = cfg.precision_bits;
  const SolveResult r = solve_system(sp, opts);
  Json j = solve_json(r, cfg.precision_bits, cfg.tables);
  if (cfg.explore > 0) j["explore"] = explore_json(explore_newton(r, cfg.explore, cfg.seed), cfg.explore, cfg.seed);
  emit(cfg, render(cfg, j, solve_table(r), "solve " + sp.to_string()), out);
  if (!r.expectation_met) {
    err << "expectation not met for " << sp.to_string() << ": " << r.expectation_detail << "\n";
    return kExitExpectation;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_common(cfg);
  if (cfg.partition.size() < 2) throw ParameterError("verify needs a partition with at least two blocks");
  if (cfg.trials < 1) throw ParameterError("trials must be positive");
  const Partition part(cfg.partition);
  if (part.N() > cfg.max_n)
    throw ParameterError("partition " + part.to_string() + " has N = " + std::to_string(part.N()) +
                         " above the cap " + std::to_string(cfg.max_n));
  const VerifyReport r = run_verification(part, cfg.trials, cfg.seed);
  emit(cfg, render(cfg, verify_json(r), verify_table(r), "verify " + part.to_string()), out);
  if (!r.pass()) {
    err << "verification failed for " << part.to_string() << "\n";
    return kExitExpectation;
  }
  return kExitOk;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_common(cfg);
  const SystemParams sp = make_params(cfg.k1, cfg.k, cfg.p);
  const MonotonicityCertificate mono = lambda_monotonicity_certificate(sp, 100);
  const SignCertificate sign = large_k1_certificate(sp);
  const bool pass = mono.pass && (!sign.applicable || sign.pass);
  Json j;
  j["schema"] = kSchema;
  j["command"] = "certify";
  j["params"] = params_json(sp);
  j["monotonicity"] = monotonicity_json(mono, cfg.tables);
  j["large_k1"] = sign_certificate_json(sign);
  j["status"] = pass ? "PASS" : "FAIL";
  Table t{{"section", "key", "value"}, {}};
  t.rows.push_back({"monotonicity", "status", mono.pass ? "PASS" : "FAIL"});
  t.rows.push_back({"monotonicity", "grid_size", std::to_string(mono.grid_size)});
  t.rows.push_back({"monotonicity", "witness", mono.witness ? to_string(*mono.witness) : ""});
  t.rows.push_back({"monotonicity", "derivative_numerator_roots_in_range", std::to_string(mono.numerator_roots_in_range)});
  t.rows.push_back({"monotonicity", "printed_q_matches", mono.printed_q_matches ? "true" : "false"});
  t.rows.push_back({"large_k1", "status", sign.applicable ? (sign.pass ? "PASS" : "FAIL") : "not-applicable"});
  t.rows.push_back({"large_k1", "beta", to_string(sign.beta)});
  for (const auto& [x, s] : sign.signs) t.rows.push_back({"large_k1", "sign_at_" + to_string(x), std::to_string(s)});
  if (sign.applicable) t.rows.push_back({"large_k1", "sturm_count", std::to_string(sign.sturm_count)});
  emit(cfg, render(cfg, j, t, "certify " + sp.to_string()), out);
  if (!pass) {
    err << "certificate failed for " << sp.to_string() << "\n";
    return kExitExpectation;
  }
  return kExitOk;
}

namespace {

using RowKey = std::tuple<long, long, long>;

std::vector<std::string> parse_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

// Rows already present in an earlier sweep output written with the same settings.
std::map<RowKey, std::vector<std::string>> load_sweep(const RunConfig& cfg) {
  std::map<RowKey, std::vector<std::string>> rows;
  if (cfg.output.empty() || !std::filesystem::exists(cfg.output)) return rows;
  std::ifstream f(cfg.output, std::ios::binary);
  const auto header = sweep_header();
  const auto add = [&](const std::vector<std::string>& r) {
    if (r.size() != header.size()) return;
    try {
      rows[{std::stol(r[0]), std::stol(r[1]), std::stol(r[2])}] = r;
    } catch (const std::logic_error&) {
    }
  };
  if (cfg.format == "json") {
    const Json j = Json::parse(f, nullptr, false);
    if (j.is_discarded() || !j.contains("precision_bits") || j["precision_bits"] != cfg.precision_bits) return rows;
    for (const auto& o : j.value("rows", Json::array())) {
      std::vector<std::string> r;
      for (const auto& h : header) {
        if (!o.contains(h) || !o[h].is_string()) return {};
        r.push_back(o[h].get<std::string>());
      }
      add(r);
    }
  } else if (cfg.format == "csv") {
    std::string line;
    if (!std::getline(f, line) || parse_csv_line(line) != header) return rows;
    while (std::getline(f, line))
      if (!line.empty()) add(parse_csv_line(line));
  }
  return rows;
}

}  // namespace

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_common(cfg);
  std::vector<SystemParams> triples;
  for (long k1 = cfg.k1_range.lo; k1 <= cfg.k1_range.hi; ++k1)
    for (long k = cfg.k_range.lo; k <= cfg.k_range.hi; ++k)
      for (long p = cfg.p_range.lo; p <= cfg.p_range.hi; ++p) triples.push_back(make_params(k1, k, p));

  auto done = load_sweep(cfg);
  Table t{sweep_header(), {}};
  const auto render_all = [&] {
    Table partial{t.header, {}};
    for (const auto& sp : triples) {
      auto it = done.find({sp.k1, sp.k, sp.p});
      if (it != done.end()) partial.rows.push_back(it->second);
    }
    Json j;
    j["schema"] = kSchema;
    j["command"] = "sweep";
    j["precision_bits"] = cfg.precision_bits;
    j["rows"] = table_rows_json(partial);
    return std::pair{render(cfg, j, partial, "sweep"), partial};
  };

  int resumed = 0;
  SolveOptions opts;
  opts.bits = cfg.precision_bits;
  for (const auto& sp : triples) {
    if (done.count({sp.k1, sp.k, sp.p})) {
      ++resumed;
      continue;
    }
    done[{sp.k1, sp.k, sp.p}] = sweep_row(solve_system(sp, opts));
    if (!cfg.output.empty()) emit(cfg, render_all().first, out);
  }
  auto [text, table] = render_all();
  emit(cfg, text, out);
  if (resumed > 0) err << "resumed " << resumed << " row(s) from " << cfg.output << "\n";
  bool ok = true;
  for (const auto& r : table.rows) ok = ok && r[11] == "true";
  if (!ok) {
    err << "expectation not met for at least one triple\n";
    return kExitExpectation;
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Einstein metrics on SU(N) over generalized flag manifolds"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string partition, k1r, kr, pr;

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision_bits, "MPFR precision in bits (>= 64)");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--format", cfg.format, "json, csv or md");
    sub->add_option("-o,--output", cfg.output, "output file (stdout if omitted)");
  };
  const auto triple = [&](CLI::App* sub) {
    sub->add_option("--k1", cfg.k1, "size of the first block")->required();
    sub->add_option("--k", cfg.k, "size of the remaining blocks")->required();
    sub->add_option("--p", cfg.p, "number of blocks")->required();
  };

  auto* solve = app.add_subcommand("solve", "certified Einstein metrics for one (k1, k, p)");
  triple(solve);
  common(solve);
  solve->add_option("--explore", cfg.explore, "damped Newton restarts to cross-check the certified set");
  solve->add_flag("--tables", cfg.tables, "include exact coefficient tables");

  auto* verify = app.add_subcommand("verify", "structure-constant and curvature oracle suite");
  verify->add_option("--partition", partition, "block sizes, e.g. 2,2,2")->required();
  verify->add_option("--trials", cfg.trials, "random metrics per check");
  verify->add_option("--max-n", cfg.max_n, "largest N accepted");
  common(verify);

  auto* certify = app.add_subcommand("certify", "monotonicity and sign certificates");
  triple(certify);
  common(certify);
  certify->add_flag("--tables", cfg.tables, "include the exact derivative");

  auto* sweep = app.add_subcommand("sweep", "solve over ranges of (k1, k, p)");
  sweep->add_option("--k1", k1r, "range a..b")->required();
  sweep->add_option("--k", kr, "range a..b")->required();
  sweep->add_option("--p", pr, "range a..b")->required();
  common(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (const char* env = std::getenv("EINSU_PRECISION")) {
      try {
        cfg.precision_bits = std::stoi(env);
      } catch (const std::logic_error&) {
        throw ParameterError(std::string("EINSU_PRECISION is not an integer: ") + env);
      }
    }
    if (*solve) return cmd_solve(cfg, out, err);
    if (*certify) return cmd_certify(cfg, out, err);
    if (*verify) {
      std::stringstream ss(partition);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          cfg.partition.push_back(std::stoi(item));
        } catch (const std::logic_error&) {
          throw ParameterError("bad partition '" + partition + "'");
        }
      }
      return cmd_verify(cfg, out, err);
    }
    cfg.k1_range = parse_range(k1r);
    cfg.k_range = parse_range(kr);
    cfg.p_range = parse_range(pr);
    return cmd_sweep(cfg, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedShapeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TheoremViolation& e) {
    err << "expectation failure: " << e.what() << "\n";
    return kExitExpectation;
  } catch (const EliminationMismatchError& e) {
    err << "expectation failure: " << e.what() << "\n";
    return kExitExpectation;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace einsu
