#pragma once

#include "einsu/bigrational.hpp"
#include "einsu/errors.hpp"
#include "einsu/liealg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace einsu {

/// A_{abc} = -B([e_a, e_b], e_c) over the global basis of a decomposition, stored densely.
class StructureTensor {
 public:
  explicit StructureTensor(const Decomposition& dec);

  std::size_t dim() const { return d_; }
  double operator()(std::size_t a, std::size_t b, std::size_t c) const { return v_[(a * d_ + b) * d_ + c]; }

 private:
  std::size_t d_;
  std::vector<double> v_;
};

/// Module triple in canonical (sorted) order; [k;ij] is symmetric in all three slots.
using TripleKey = std::array<ModuleIndex, 3>;

inline TripleKey make_triple_key(ModuleIndex a, ModuleIndex b, ModuleIndex c) {
  TripleKey key{a, b, c};
  std::sort(key.begin(), key.end());
  return key;
}

/// Triple constants [c; a b] keyed by module triples. A complete table answers zero for
/// triples it does not store; an incomplete one throws IncompleteTableError.
template <class T>
class BasicTripleTable {
 public:
  BasicTripleTable() = default;
  explicit BasicTripleTable(bool complete) : complete_(complete) {}

  void set(const ModuleIndex& c, const ModuleIndex& a, const ModuleIndex& b, T value) {
    v_[make_triple_key(c, a, b)] = std::move(value);
  }
  T at(const ModuleIndex& c, const ModuleIndex& a, const ModuleIndex& b) const {
    auto it = v_.find(make_triple_key(c, a, b));
    if (it != v_.end()) return it->second;
    if (!complete_)
      throw IncompleteTableError("no triple entry for [" + c.to_string() + "; " + a.to_string() + " " +
                                 b.to_string() + "]");
    return T(0);
  }
  bool complete() const { return complete_; }
  const std::map<TripleKey, T>& entries() const { return v_; }

 private:
  std::map<TripleKey, T> v_;
  bool complete_ = true;
};

using TripleTable = BasicTripleTable<double>;
using ExactTripleTable = BasicTripleTable<BigRational>;

/// Every module of the decomposition of `partition`, in basis order.
std::vector<ModuleIndex> module_list(const Partition& partition);

/// [c; a b] = sum over the three module bases of A^2.
double triple_brute(const Decomposition& dec, const StructureTensor& A, const ModuleIndex& c,
                    const ModuleIndex& a, const ModuleIndex& b);
double triple_brute(const Decomposition& dec, const ModuleIndex& c, const ModuleIndex& a, const ModuleIndex& b);

/// All triples by brute force; entries below 1e-13 are dropped.
TripleTable brute_table(const Decomposition& dec, const StructureTensor& A);
TripleTable brute_table(const Decomposition& dec);

/// [m_rs; c_i m_rs], case by case.
BigRational triple_center_closed(const Partition& partition, int i, int r, int s);

enum class GenericKind { RST, SimpleOffDiag, SimpleSimple };

/// RST: indices {r, s, t} distinct, value [m_rs; m_rt m_st].
/// SimpleOffDiag: indices {i, j}, value [m_ij; m_i m_ij].
/// SimpleSimple: indices {i}, value [m_i; m_i m_i].
BigRational triple_generic_closed(const Partition& partition, GenericKind kind, const std::vector<int>& indices);

/// Any module triple from the closed forms; zero where the bracket relations vanish.
BigRational triple_closed(const Partition& partition, const ModuleIndex& c, const ModuleIndex& a,
                          const ModuleIndex& b);
ExactTripleTable closed_table(const Partition& partition);

/// Aggregate center sums for k_2 = ... = k_p = k.
struct CenterSums {
  BigRational first_row_tail;    // sum_{i>=2} [m_1s; c_i m_1s]
  BigRational first_row_c1;      // [m_1s; c_1 m_1s]
  BigRational tail_module;       // sum_i [m_rs; c_i m_rs], 2 <= r < s
  BigRational first_row_fixed;   // sum_{s>=2} [m_1s; c_t m_1s], t >= 2
  BigRational tail_fixed;        // sum_{2<=r<s} [m_rs; c_t m_rs], t >= 2
};
CenterSums triple_sums_closed(const Partition& partition);

/// Which closed form for sum_{2<=r<s} [m_rs; c_t m_rs] the brute-force sum supports.
struct TailSumResolution {
  int t = 0;
  double brute = 0.0;
  BigRational candidate_p_minus_1;  // (p-1) k / N
  BigRational candidate_p_minus_2;  // (p-2) k / N
  bool matches_p_minus_1 = false;
  bool matches_p_minus_2 = false;
};
std::vector<TailSumResolution> resolve_tail_sum(const Decomposition& dec, const StructureTensor& A);

/// Coefficient c with [H_j, X^{rs}] = c Y^{rs} and [H_j, Y^{rs}] = -c X^{rs}.
BigRational center_action_coefficient(const Partition& partition, int j, int r, int s);

struct CheckReport {
  std::size_t checked = 0;
  double max_error = 0.0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

CheckReport check_center_action(const Decomposition& dec, double tol = 1e-12);

/// Modules on which [a, b] may have a nonzero component.
std::vector<ModuleIndex> bracket_support(const Partition& partition, const ModuleIndex& a, const ModuleIndex& b);

CheckReport check_bracket_relations(const Decomposition& dec, int samples = 3, std::uint64_t seed = 42,
                                    double tol = 1e-11);

/// JSON report with brute values and, where available, exact closed forms as "num/den".
std::string triple_table_json(const Partition& partition, const TripleTable& brute, const ExactTripleTable& closed);

}  // namespace einsu
