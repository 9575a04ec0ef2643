#include <doctest.h>

#include "einsu/errors.hpp"
#include "einsu/liealg.hpp"

#include <cmath>
#include <random>

using namespace einsu;

namespace {

SuElement random_element(const Decomposition& dec, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  SuElement x = SuElement::zero(dec.N());
  for (std::size_t i = 0; i < dec.dim(); ++i) x += n(rng) * dec.basis(i);
  return x;
}

}  // namespace

TEST_SUITE("liealg") {
  TEST_CASE("partition bookkeeping") {
    const Partition p({3, 2, 2});
    CHECK(p.p() == 3);
    CHECK(p.N() == 7);
    CHECK(p.K(0) == 0);
    CHECK(p.K(2) == 5);
    CHECK(p.offset(3) == 5);
    CHECK(p.equal_tail());
    CHECK_FALSE(Partition({2, 3, 2}).equal_tail());
    CHECK(p.to_string() == "3,2,2");
    CHECK_THROWS_AS(Partition({4}), DegenerateError);
    CHECK_THROWS_AS(Partition({2, 0}), ParameterError);
  }

  TEST_CASE("su(N) element invariants") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 0) = cplx(0, 1);
    m(1, 1) = cplx(0, -1);
    CHECK_NOTHROW(SuElement::from_matrix(m));
    m(1, 1) = cplx(0, 1);
    CHECK_THROWS_AS(SuElement::from_matrix(m), DomainError);
    CMatrix h = CMatrix::Zero(2, 2);
    h(0, 1) = 1.0;
    h(1, 0) = 1.0;
    CHECK_THROWS_AS(SuElement::from_matrix(h), DomainError);
    CHECK_THROWS_AS(bracket(SuElement::zero(2), SuElement::zero(3)), DimensionError);
  }

  TEST_CASE("dimensions and module list") {
    for (const auto& parts : std::vector<std::vector<int>>{{2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}, {1, 2, 3}}) {
      const Partition part(parts);
      const Decomposition dec = build_decomposition(part);
      CHECK(dec.dim() == static_cast<std::size_t>(part.N() * part.N() - 1));
      std::size_t total = 0;
      for (const auto& m : dec.modules()) {
        CHECK(m.dim == module_dimension(part, m.index));
        total += m.dim;
      }
      CHECK(total == dec.dim());
    }
    const Decomposition dec = build_decomposition(Partition({1, 2, 3}));
    CHECK_FALSE(dec.has(ModuleIndex::simple(1)));
    CHECK(dec.module(ModuleIndex::offdiag(2, 3)).dim == 12);
    CHECK_THROWS_AS(dec.module(ModuleIndex::simple(1)), IndexError);
    CHECK_THROWS_AS(ModuleIndex::offdiag(2, 2), IndexError);
    CHECK(ModuleIndex::offdiag(3, 1) == ModuleIndex::offdiag(1, 3));
  }

  TEST_CASE("basis is -B orthonormal") {
    const Decomposition dec = build_decomposition(Partition({3, 2, 2}));
    double worst = 0.0;
    for (std::size_t i = 0; i < dec.dim(); ++i)
      for (std::size_t j = 0; j < dec.dim(); ++j)
        worst = std::max(worst, std::abs(minus_killing(dec.basis(i), dec.basis(j)) - (i == j ? 1.0 : 0.0)));
    CHECK(worst < 1e-12);
  }

  TEST_CASE("center normalizers") {
    const Partition part({3, 2, 2, 1});
    const auto centers = center_basis(part);
    REQUIRE(centers.size() == 3);
    const double N = part.N();
    for (int j = 1; j <= 3; ++j) {
      const auto& c = centers[static_cast<std::size_t>(j - 1)];
      const double expect = std::sqrt(part.k(j) * (N - part.K(j)) / (2.0 * N * (N - part.K(j - 1))));
      CHECK(c.a == doctest::Approx(expect).epsilon(1e-14));
      CHECK(c.a * c.a * minus_killing(c.h, c.h) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }

  TEST_CASE("Jacobi identity and antisymmetry") {
    const Decomposition dec = build_decomposition(Partition({2, 2, 2}));
    std::mt19937_64 rng(42);
    for (int t = 0; t < 5; ++t) {
      const SuElement x = random_element(dec, rng), y = random_element(dec, rng), z = random_element(dec, rng);
      const SuElement jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
      CHECK(jac.max_abs() < 1e-12);
      CHECK((bracket(x, y) + bracket(y, x)).max_abs() < 1e-13);
    }
  }

  TEST_CASE("coordinates and projection reconstruct elements") {
    const Decomposition dec = build_decomposition(Partition({2, 1, 3}));
    std::mt19937_64 rng(7);
    const SuElement x = random_element(dec, rng);
    SuElement sum = SuElement::zero(dec.N());
    for (const auto& m : dec.modules()) sum += project(x, dec, m.index);
    CHECK((sum - x).max_abs() < 1e-12);
    const Eigen::VectorXd c = dec.coordinates(x);
    SuElement back = SuElement::zero(dec.N());
    for (std::size_t i = 0; i < dec.dim(); ++i) back += c(static_cast<Eigen::Index>(i)) * dec.basis(i);
    CHECK((back - x).max_abs() < 1e-12);
  }
}
