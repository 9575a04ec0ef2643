#include "einsu/curvature.hpp"

#include <cmath>

namespace einsu {

GeneralMetric::GeneralMetric(std::map<ModuleIndex, double> coeffs) : c_(std::move(coeffs)) {
  for (const auto& [m, v] : c_)
    if (!(v > 0.0)) throw DomainError("metric coefficient on " + m.to_string() + " must be positive");
}

GeneralMetric GeneralMetric::uniform(const Decomposition& dec, double value) {
  std::map<ModuleIndex, double> c;
  for (const auto& m : dec.modules()) c[m.index] = value;
  return GeneralMetric(std::move(c));
}

double GeneralMetric::at(const ModuleIndex& m) const {
  auto it = c_.find(m);
  if (it == c_.end()) throw DomainError("metric has no coefficient for " + m.to_string());
  return it->second;
}

void GeneralMetric::set(const ModuleIndex& m, double value) {
  if (!(value > 0.0)) throw DomainError("metric coefficient on " + m.to_string() + " must be positive");
  c_[m] = value;
}

double GeneralMetric::max_coeff() const {
  double m = 0.0;
  for (const auto& [k, v] : c_) m = std::max(m, v);
  return m;
}

GeneralMetric to_general_metric(const Partition& part, const SymmetricMetric& m) {
  if (part.p() < 3 || !part.equal_tail()) throw UnsupportedShapeError("six-parameter family needs p >= 3 and k_2 = ... = k_p");
  std::map<ModuleIndex, double> c;
  for (const auto& mod : module_list(part)) {
    double v = 0.0;
    switch (mod.kind) {
      case ModuleIndex::Kind::Center:
        v = mod.a == 1 ? m.y1 : m.y2;
        break;
      case ModuleIndex::Kind::Simple:
        v = mod.a == 1 ? m.x1 : m.x2;
        break;
      case ModuleIndex::Kind::OffDiag:
        v = mod.a == 1 ? m.x12 : m.x23;
        break;
    }
    c[mod] = v;
  }
  return GeneralMetric(std::move(c));
}

std::map<ModuleIndex, double> coefficient_map(const GeneralMetric& g) { return g.coeffs(); }

Eigen::MatrixXd ricci_oracle(const Decomposition& dec, const StructureTensor& A, const GeneralMetric& g) {
  const std::size_t d = dec.dim();
  const auto n = static_cast<Eigen::Index>(d);
  std::vector<double> sq(d);
  for (std::size_t a = 0; a < d; ++a) sq[a] = std::sqrt(g.at(dec.modules()[dec.owner(a)].index));

  const auto at = [d](std::size_t a, std::size_t b, std::size_t c) { return (a * d + b) * d + c; };
  std::vector<double> C(d * d * d), G(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) C[at(a, b, c)] = A(a, b, c) * sq[c] / (sq[a] * sq[b]);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) G[at(a, b, c)] = 0.5 * (C[at(a, b, c)] - C[at(b, c, a)] + C[at(c, a, b)]);

  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  for (std::size_t e = 0; e < d; ++e)
    for (std::size_t a = 0; a < d; ++a) u(static_cast<Eigen::Index>(e)) += G[at(a, e, a)];

  // Flattened operands so the two double sums become matrix products.
  Eigen::MatrixXd m1(n, n * n), m2(n, n * n), m3(n, n * n), m4(n, n * n);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t e = 0; e < d; ++e) {
        const auto row = static_cast<Eigen::Index>(x), col = static_cast<Eigen::Index>(a * d + e);
        m1(row, col) = G[at(a, x, e)];
        m2(row, col) = G[at(x, e, a)];
        m3(row, col) = C[at(a, x, e)];
        m4(row, col) = G[at(e, x, a)];
      }
  Eigen::MatrixXd ric = -(m2 * m1.transpose()) - m3 * m4.transpose();
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t x = 0; x < d; ++x) {
      double t = 0.0;
      for (std::size_t e = 0; e < d; ++e) t += G[at(b, x, e)] * u(static_cast<Eigen::Index>(e));
      ric(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(x)) += t;
    }
  return ric;
}

Eigen::MatrixXd ricci_oracle(const Decomposition& dec, const GeneralMetric& g) {
  return ricci_oracle(dec, StructureTensor(dec), g);
}

OracleShape oracle_shape(const Decomposition& dec, const Eigen::MatrixXd& ric) {
  OracleShape s;
  const auto diag = oracle_module_diagonal(dec, ric);
  for (Eigen::Index a = 0; a < ric.rows(); ++a)
    for (Eigen::Index b = 0; b < ric.cols(); ++b) {
      const auto oa = dec.owner(static_cast<std::size_t>(a)), ob = dec.owner(static_cast<std::size_t>(b));
      if (oa != ob) {
        s.off_block = std::max(s.off_block, std::abs(ric(a, b)));
      } else {
        const double expect = a == b ? diag.at(dec.modules()[oa].index) : 0.0;
        s.non_scalar = std::max(s.non_scalar, std::abs(ric(a, b) - expect));
      }
    }
  return s;
}

std::map<ModuleIndex, double> oracle_module_diagonal(const Decomposition& dec, const Eigen::MatrixXd& ric) {
  std::map<ModuleIndex, double> out;
  for (const auto& m : dec.modules()) {
    double sum = 0.0;
    for (std::size_t i = m.offset; i < m.offset + m.dim; ++i)
      sum += ric(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i));
    out[m.index] = sum / static_cast<double>(m.dim);
  }
  return out;
}

double ricci_center_offdiag(const Decomposition& dec, const GeneralMetric& g, int i, int j) {
  const Partition& part = dec.partition();
  const int p = part.p();
  if (i == j) throw IndexError("off-diagonal center entry needs i != j");
  if (i < 1 || j < 1 || i > p - 1 || j > p - 1) throw IndexError("center index out of range");
  const auto centers = center_basis(part);
  const SuElement& hi = centers[static_cast<std::size_t>(i - 1)].h;
  const SuElement& hj = centers[static_cast<std::size_t>(j - 1)].h;
  double sum = 0.0;
  for (int r = 1; r <= p; ++r)
    for (int s = r + 1; s <= p; ++s) {
      const auto m = ModuleIndex::offdiag(r, s);
      const auto basis = dec.basis_of(m);
      const std::size_t half = basis.size() / 2;
      double inner = 0.0;
      for (std::size_t t = 0; t < half; ++t) {
        const SuElement& x = basis[t];
        const SuElement& y = basis[t + half];
        inner += minus_killing(y, bracket(hi, x)) * minus_killing(y, bracket(hj, x)) +
                 minus_killing(x, bracket(hi, y)) * minus_killing(x, bracket(hj, y));
      }
      const double x = g.at(m);
      sum += inner / (x * x);
    }
  const double yi = g.at(ModuleIndex::center(i)), yj = g.at(ModuleIndex::center(j));
  return yi * yj / 4.0 * sum;
}

double center_offdiag_in_oracle_basis(const Decomposition& dec, const GeneralMetric& g, int i, int j) {
  const auto centers = center_basis(dec.partition());
  const double ai = centers[static_cast<std::size_t>(i - 1)].a, aj = centers[static_cast<std::size_t>(j - 1)].a;
  const double yi = g.at(ModuleIndex::center(i)), yj = g.at(ModuleIndex::center(j));
  return ai * aj / std::sqrt(yi * yj) * ricci_center_offdiag(dec, g, i, j);
}

bool equal_row_condition(const Partition& part, const GeneralMetric& g, double tol) {
  for (int i = 1; i < part.p(); ++i) {
    const double first = g.at(ModuleIndex::offdiag(i, i + 1));
    for (int s = i + 2; s <= part.p(); ++s)
      if (std::abs(g.at(ModuleIndex::offdiag(i, s)) - first) > tol * std::max(1.0, std::abs(first))) return false;
  }
  return true;
}

}  // namespace einsu
