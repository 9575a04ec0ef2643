#include "einsu/cli.hpp"
#include "einsu/einstein.hpp"
#include "einsu/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace einsu;

namespace {

std::vector<std::string> coefficients(const RationalPolynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

std::string solve_text(long k1, long k, long p, int bits) {
  SolveOptions opts;
  opts.bits = bits;
  return solve_json(solve_system(make_params(k1, k, p), opts), bits).dump();
}

std::string certify_text(long k1, long k, long p) {
  const SystemParams sp = make_params(k1, k, p);
  Json j;
  j["monotonicity"] = monotonicity_json(lambda_monotonicity_certificate(sp, 100));
  j["large_k1"] = sign_certificate_json(large_k1_certificate(sp));
  return j.dump();
}

std::string verify_text(const std::vector<int>& parts, int trials, std::uint64_t seed) {
  return verify_json(run_verification(Partition(parts), trials, seed)).dump();
}

SymmetricMetric metric(const std::vector<double>& v) {
  if (v.size() != 6) throw ParameterError("metric needs (y1, y2, x1, x2, x12, x23)");
  return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

}  // namespace

PYBIND11_MODULE(_einsu, m) {
  m.doc() = "Einstein metrics on SU(k1 + (p-1)k)";

  auto base = py::register_exception<Error>(m, "EinsuError");
  py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
  py::register_exception<TheoremViolation>(m, "TheoremViolation", base.ptr());

  m.def("solve_json", &solve_text, py::arg("k1"), py::arg("k"), py::arg("p"), py::arg("bits") = 256);
  m.def("certify_json", &certify_text, py::arg("k1"), py::arg("k"), py::arg("p"));
  m.def("verify_json", &verify_text, py::arg("partition"), py::arg("trials") = 20, py::arg("seed") = 42);
  m.def("f3_coefficients", [](long k1, long k, long p) { return coefficients(f3_coeffs(make_params(k1, k, p))); });
  m.def("g3_coefficients", [](long k1, long k, long p) { return coefficients(g3_coeffs(make_params(k1, k, p))); });
  m.def("q1_coefficients", [](long k1, long k, long p) { return coefficients(q1_coeffs(make_params(k1, k, p))); });
  m.def("large_k1_beta", [](long k1, long k, long p) { return to_string(large_k1_beta(make_params(k1, k, p))); });
  m.def("einstein_constant",
        [](long k1, long k, long p, double x12) { return einstein_constant(make_params(k1, k, p), x12); });
  m.def("system_f", [](long k1, long k, long p, const std::vector<double>& g) {
    const auto f = system_f(make_params(k1, k, p), metric(g));
    return std::vector<double>(f.begin(), f.end());
  });
  m.def("ricci_components", [](long k1, long k, long p, const std::vector<double>& g) {
    const auto r = ricci_components_symmetric<double>(k1, k, p, metric(g));
    return std::vector<double>{r.rr1, r.rr2, r.r1, r.r2, r.r12, r.r23};
  });
  m.def("oracle_residual", [](long k1, long k, long p, const std::vector<double>& g, double lambda) {
    return oracle_einstein_residual(make_params(k1, k, p), metric(g), lambda);
  });
}
