#include <doctest.h>

#include "einsu/errors.hpp"
#include "einsu/structconst.hpp"

#include <json.hpp>

#include <cmath>

using namespace einsu;

namespace {

const std::vector<std::vector<int>> kPartitions{{2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}};

}  // namespace

TEST_SUITE("structconst") {
  TEST_CASE("closed forms equal brute force on every module triple") {
    for (const auto& parts : kPartitions) {
      const Partition part(parts);
      const Decomposition dec = build_decomposition(part);
      const StructureTensor A(dec);
      const auto mods = module_list(part);
      double worst = 0.0;
      for (const auto& a : mods)
        for (const auto& b : mods)
          for (const auto& c : mods)
            worst = std::max(worst, std::abs(triple_brute(dec, A, a, b, c) - to_double(triple_closed(part, a, b, c))));
      CHECK_MESSAGE(worst < 1e-10, part.to_string());
    }
  }

  TEST_CASE("structure tensor is totally antisymmetric") {
    const Decomposition dec = build_decomposition(Partition({2, 2, 2}));
    const StructureTensor A(dec);
    double worst = 0.0;
    for (std::size_t a = 0; a < dec.dim(); a += 3)
      for (std::size_t b = 0; b < dec.dim(); b += 2)
        for (std::size_t c = 0; c < dec.dim(); ++c) {
          worst = std::max(worst, std::abs(A(a, b, c) + A(b, a, c)));
          worst = std::max(worst, std::abs(A(a, b, c) - A(b, c, a)));
        }
    CHECK(worst < 1e-13);
  }

  TEST_CASE("generic closed forms") {
    const Partition part({3, 2, 2});
    // k_r k_s k_t / N, k_j (k_i^2 - 1) / N, k_i (k_i^2 - 1) / N with N = 7.
    CHECK(triple_generic_closed(part, GenericKind::RST, {1, 2, 3}) == make_rational(12, 7));
    CHECK(triple_generic_closed(part, GenericKind::SimpleOffDiag, {1, 2}) == make_rational(16, 7));
    CHECK(triple_generic_closed(part, GenericKind::SimpleSimple, {1}) == make_rational(24, 7));
    CHECK(triple_closed(part, ModuleIndex::offdiag(1, 2), ModuleIndex::offdiag(1, 3), ModuleIndex::offdiag(2, 3)) ==
          make_rational(12, 7));
    CHECK(triple_closed(part, ModuleIndex::simple(1), ModuleIndex::simple(2), ModuleIndex::offdiag(1, 2)) == 0);
    CHECK_THROWS_AS(triple_generic_closed(part, GenericKind::RST, {1, 1, 2}), IndexError);
    CHECK_THROWS_AS(triple_center_closed(part, 3, 1, 2), IndexError);
  }

  TEST_CASE("triple constants are symmetric in all slots") {
    const Partition part({3, 2, 2});
    const Decomposition dec = build_decomposition(part);
    const StructureTensor A(dec);
    const auto c = ModuleIndex::center(1), m = ModuleIndex::offdiag(1, 2);
    const double v = triple_brute(dec, A, m, c, m);
    CHECK(triple_brute(dec, A, c, m, m) == doctest::Approx(v).epsilon(1e-13));
    CHECK(triple_brute(dec, A, m, m, c) == doctest::Approx(v).epsilon(1e-13));
  }

  TEST_CASE("center sums on (2,2,2)") {
    const CenterSums s = triple_sums_closed(Partition({2, 2, 2}));
    CHECK(s.first_row_tail == make_rational(1, 6));
    CHECK(s.first_row_c1 == make_rational(1, 2));
    CHECK(s.tail_module == make_rational(2, 3));
    CHECK(s.first_row_fixed == make_rational(1, 3));
    CHECK(s.tail_fixed == make_rational(2, 3));
    CHECK_THROWS_AS(triple_sums_closed(Partition({2, 2, 3})), UnsupportedShapeError);
  }

  TEST_CASE("tail sum resolves to (p-1)k/N") {
    for (const auto& parts : kPartitions) {
      const Partition part(parts);
      const Decomposition dec = build_decomposition(part);
      const auto res = resolve_tail_sum(dec, StructureTensor(dec));
      REQUIRE_FALSE(res.empty());
      for (const auto& r : res) {
        CHECK(r.matches_p_minus_1);
        CHECK_FALSE(r.matches_p_minus_2);
      }
    }
  }

  TEST_CASE("center action coefficients") {
    const Partition part({3, 2, 2});
    CHECK(center_action_coefficient(part, 1, 1, 2) == make_rational(1, 3) + make_rational(1, 4));
    CHECK(center_action_coefficient(part, 2, 1, 2) == make_rational(-1, 2));
    CHECK(center_action_coefficient(part, 2, 1, 3) == make_rational(1, 2));
    CHECK(center_action_coefficient(part, 2, 2, 3) == make_rational(1, 2) + make_rational(1, 2));
    CHECK(center_action_coefficient(part, 1, 2, 3) == 0);
    for (const auto& parts : kPartitions) {
      const CheckReport r = check_center_action(build_decomposition(Partition(parts)));
      CHECK(r.ok());
      CHECK(r.checked > 0);
    }
  }

  TEST_CASE("bracket relations") {
    for (const auto& parts : kPartitions) {
      const CheckReport r = check_bracket_relations(build_decomposition(Partition(parts)));
      CHECK(r.ok());
    }
    const auto s = bracket_support(Partition({2, 2, 2, 2}), ModuleIndex::offdiag(1, 2), ModuleIndex::offdiag(3, 4));
    CHECK(s.empty());
  }

  TEST_CASE("brute table and json dump") {
    const Partition part({2, 2, 2});
    const Decomposition dec = build_decomposition(part);
    const TripleTable brute = brute_table(dec);
    const ExactTripleTable closed = closed_table(part);
    for (const auto& [key, v] : closed.entries())
      CHECK(brute.at(key[0], key[1], key[2]) == doctest::Approx(to_double(v)).epsilon(1e-12));
    const auto j = nlohmann::json::parse(triple_table_json(part, brute, closed));
    CHECK(j["schema"] == "einsu/1");
    TripleTable partial(false);
    CHECK_THROWS_AS(partial.at(ModuleIndex::center(1), ModuleIndex::center(1), ModuleIndex::center(1)),
                    IncompleteTableError);
  }
}
