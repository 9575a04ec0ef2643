#include <doctest.h>

#include "einsu/curvature.hpp"
#include "einsu/errors.hpp"

#include <cmath>
#include <random>

using namespace einsu;

namespace {

double component(const RicciComponents& rc, const ModuleIndex& m) {
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

TEST_SUITE("curvature") {
  TEST_CASE("bi-invariant metric has Ric = 1/4 (-B)") {
    for (const auto& parts : std::vector<std::vector<int>>{{2, 2, 2}, {3, 2, 2}, {2, 3, 2}}) {
      const Decomposition dec = build_decomposition(Partition(parts));
      const Eigen::MatrixXd ric = ricci_oracle(dec, GeneralMetric::uniform(dec));
      const auto n = static_cast<Eigen::Index>(dec.dim());
      CHECK((ric - 0.25 * Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
    }
    const SymmetricMetricT<BigRational> one{1, 1, 1, 1, 1, 1};
    const auto rc = ricci_components_symmetric<BigRational>(3, 2, 3, one);
    for (const auto& v : {rc.rr1, rc.rr2, rc.r1, rc.r2, rc.r12, rc.r23}) CHECK(v == make_rational(1, 4));
  }

  TEST_CASE("closed-form components match the oracle") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    for (const auto& parts : std::vector<std::vector<int>>{{2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}}) {
      const Partition part(parts);
      const Decomposition dec = build_decomposition(part);
      const StructureTensor A(dec);
      for (int t = 0; t < 3; ++t) {
        const SymmetricMetric m{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
        const Eigen::MatrixXd ric = ricci_oracle(dec, A, to_general_metric(part, m));
        const auto rc = ricci_components_symmetric<double>(part.k(1), part.k(2), part.p(), m);
        for (const auto& [mod, v] : oracle_module_diagonal(dec, ric))
          CHECK(v == doctest::Approx(component(rc, mod)).epsilon(1e-10));
        const OracleShape sh = oracle_shape(dec, ric);
        CHECK(sh.off_block < 1e-10);
        CHECK(sh.non_scalar < 1e-10);
      }
    }
  }

  TEST_CASE("Park-Sakane formula with exact triples matches the oracle for general metrics") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    const Partition part({2, 3, 2});
    const Decomposition dec = build_decomposition(part);
    TripleTable table;
    const ExactTripleTable exact = closed_table(part);
    for (const auto& [key, v] : exact.entries()) table.set(key[0], key[1], key[2], to_double(v));
    std::map<ModuleIndex, double> g;
    for (const auto& m : module_list(part)) g[m] = u(rng);
    const Eigen::MatrixXd ric = ricci_oracle(dec, GeneralMetric(g));
    const auto ps = ricci_diagonal_ps<double>(part, table, g);
    for (const auto& [m, v] : oracle_module_diagonal(dec, ric)) CHECK(v == doctest::Approx(ps.at(m)).epsilon(1e-10));
  }

  TEST_CASE("center off-diagonal entries follow the center action") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.3, 3.0);
    const Partition part({2, 2, 2, 2});
    const Decomposition dec = build_decomposition(part);
    std::map<ModuleIndex, double> g;
    for (const auto& m : module_list(part)) g[m] = u(rng);
    const GeneralMetric metric(g);
    CHECK_FALSE(equal_row_condition(part, metric));
    const Eigen::MatrixXd ric = ricci_oracle(dec, metric);
    double largest = 0.0;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        const auto oi = static_cast<Eigen::Index>(dec.module(ModuleIndex::center(i)).offset);
        const auto oj = static_cast<Eigen::Index>(dec.module(ModuleIndex::center(j)).offset);
        const double want = center_offdiag_in_oracle_basis(dec, metric, i, j);
        CHECK(ric(oi, oj) == doctest::Approx(want).epsilon(1e-10));
        largest = std::max(largest, std::abs(want));
      }
    CHECK(largest > 1e-3);
    CHECK_THROWS_AS(ricci_center_offdiag(dec, metric, 1, 1), IndexError);
    CHECK_THROWS_AS(ricci_center_offdiag(dec, metric, 1, 4), IndexError);
  }

  TEST_CASE("equal rows make the center block diagonal") {
    const Partition part({3, 2, 2});
    const Decomposition dec = build_decomposition(part);
    const GeneralMetric g = to_general_metric(part, {0.7, 1.3, 0.4, 2.0, 0.9, 1.1});
    CHECK(equal_row_condition(part, g));
    CHECK(std::abs(ricci_center_offdiag(dec, g, 1, 2)) < 1e-12);
  }

  TEST_CASE("metric validation") {
    CHECK_THROWS_AS(GeneralMetric({{ModuleIndex::center(1), -1.0}}), DomainError);
    GeneralMetric g({{ModuleIndex::center(1), 1.0}});
    CHECK_THROWS_AS(g.at(ModuleIndex::simple(1)), DomainError);
    CHECK_THROWS_AS(g.set(ModuleIndex::center(1), 0.0), DomainError);
    CHECK_THROWS_AS(to_general_metric(Partition({2, 2}), {1, 1, 1, 1, 1, 1}), UnsupportedShapeError);
    CHECK_THROWS_AS(ricci_components_symmetric<double>(2, 2, 2, {1, 1, 1, 1, 1, 1}), ParameterError);
  }
}
