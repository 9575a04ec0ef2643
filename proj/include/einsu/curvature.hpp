#pragma once

#include "einsu/errors.hpp"
#include "einsu/liealg.hpp"
#include "einsu/structconst.hpp"

#include <Eigen/Dense>

#include <map>

namespace einsu {

/// Left-invariant metric sum_m g_m (-B)|_m, one positive coefficient per module.
class GeneralMetric {
 public:
  GeneralMetric() = default;
  explicit GeneralMetric(std::map<ModuleIndex, double> coeffs);
  /// Same coefficient on every module of dec.
  static GeneralMetric uniform(const Decomposition& dec, double value = 1.0);

  double at(const ModuleIndex& m) const;
  void set(const ModuleIndex& m, double value);
  const std::map<ModuleIndex, double>& coeffs() const { return c_; }
  double max_coeff() const;

 private:
  std::map<ModuleIndex, double> c_;
};

/// The six-parameter family: y1 on c_1, y2 on c_j (j >= 2), x1 on m_1, x2 on m_i (i >= 2),
/// x12 on m_1s and x23 on m_rs (2 <= r < s).
template <class T>
struct SymmetricMetricT {
  T y1, y2, x1, x2, x12, x23;
};

template <class T>
struct RicciComponentsT {
  T rr1, rr2, r1, r2, r12, r23;
};

using SymmetricMetric = SymmetricMetricT<double>;
using RicciComponents = RicciComponentsT<double>;

/// Expands a six-parameter metric over a partition (k1, k, ..., k).
GeneralMetric to_general_metric(const Partition& partition, const SymmetricMetric& m);

/// Ricci form in the g-orthonormal basis e_i / sqrt(g_i), from the Koszul formula.
Eigen::MatrixXd ricci_oracle(const Decomposition& dec, const StructureTensor& A, const GeneralMetric& g);
Eigen::MatrixXd ricci_oracle(const Decomposition& dec, const GeneralMetric& g);

/// Largest |entry| of the oracle matrix outside the diagonal module blocks, and the largest
/// deviation of a diagonal block from a multiple of the identity.
struct OracleShape {
  double off_block = 0.0;
  double non_scalar = 0.0;
};
OracleShape oracle_shape(const Decomposition& dec, const Eigen::MatrixXd& ric);

/// Mean of the oracle diagonal over each module.
std::map<ModuleIndex, double> oracle_module_diagonal(const Decomposition& dec, const Eigen::MatrixXd& ric);

/// r_k = 1/(2x_k) + 1/(4d_k) sum x_k/(x_i x_j) [k;ij] - 1/(2d_k) sum x_j/(x_k x_i) [j;ki].
template <class T>
std::map<ModuleIndex, T> ricci_diagonal_ps(const Partition& partition, const BasicTripleTable<T>& triples,
                                           const std::map<ModuleIndex, T>& g) {
  const auto mods = module_list(partition);
  for (const auto& m : mods)
    if (!g.count(m)) throw DomainError("metric has no coefficient for " + m.to_string());
  std::map<ModuleIndex, T> out;
  for (const auto& k : mods) {
    const T xk = g.at(k);
    const T dk(static_cast<long>(module_dimension(partition, k)));
    T plus(0), minus(0);
    for (const auto& i : mods)
      for (const auto& j : mods) {
        const T xi = g.at(i), xj = g.at(j);
        const T kij = triples.at(k, i, j);
        plus = plus + xk / (xj * xi) * kij;
        minus = minus + xj / (xk * xi) * triples.at(j, k, i);
      }
    out[k] = T(1) / (T(2) * xk) + plus / (T(4) * dk) - minus / (T(2) * dk);
  }
  return out;
}

/// Metric coefficients as a map usable by ricci_diagonal_ps.
std::map<ModuleIndex, double> coefficient_map(const GeneralMetric& g);

/// r(H_i, H_j) for the unnormalized center elements, from the center action on the Weyl basis.
double ricci_center_offdiag(const Decomposition& dec, const GeneralMetric& g, int i, int j);

/// The same entry as it appears in ricci_oracle: a_i a_j / sqrt(y_i y_j) r(H_i, H_j).
double center_offdiag_in_oracle_basis(const Decomposition& dec, const GeneralMetric& g, int i, int j);

/// x_{i,i+1} = ... = x_{i,p} for every i, to relative tolerance tol.
bool equal_row_condition(const Partition& partition, const GeneralMetric& g, double tol = 1e-12);

/// Closed-form Ricci components of the six-parameter family; exact for exact T.
template <class T>
RicciComponentsT<T> ricci_components_symmetric(long k1, long k, long p, const SymmetricMetricT<T>& m) {
  if (k1 < 2 || k < 2 || p < 3) throw ParameterError("closed forms need k1 >= 2, k >= 2, p >= 3");
  const T K1(k1), K(k), P(p), N(k1 + (p - 1) * k), one(1), two(2), four(4);
  const T x12s = m.x12 * m.x12, x23s = m.x23 * m.x23;
  const T fourN = four * N;
  RicciComponentsT<T> r;
  r.rr1 = m.y1 / (four * x12s);
  r.rr2 = K1 * m.y2 / (fourN * x12s) + K * (P - one) * m.y2 / (fourN * x23s);
  r.r1 = K1 / (fourN * m.x1) + K * (P - one) * m.x1 / (fourN * x12s);
  r.r2 = K / (fourN * m.x2) + K1 * m.x2 / (fourN * x12s) + K * (P - two) * m.x2 / (fourN * x23s);
  r.r12 = one / (two * m.x12) - K * (P - two) * m.x23 / (fourN * x12s) -
          ((K1 * K1 - one) / K1 * m.x1 / x12s + (K * K - one) / K * m.x2 / x12s) / fourN -
          (m.y1 / x12s + (P - two) * K1 / N * m.y2 / x12s) / (four * K * K1 * (P - one));
  r.r23 = one / (two * m.x23) + K1 / fourN * (m.x23 / x12s - two / m.x23) - (P - T(3)) * K / (fourN * m.x23) -
          (K * K - one) / (two * K * N) * m.x2 / x23s - m.y2 / (two * K * N * x23s);
  return r;
}

}  // namespace einsu
