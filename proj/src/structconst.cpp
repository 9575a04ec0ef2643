#include "einsu/structconst.hpp"

#include <json.hpp>

#include <cmath>
#include <random>
#include <set>

namespace einsu {

StructureTensor::StructureTensor(const Decomposition& dec) : d_(dec.dim()), v_(d_ * d_ * d_, 0.0) {
  for (std::size_t a = 0; a < d_; ++a) {
    for (std::size_t b = a + 1; b < d_; ++b) {
      const Eigen::VectorXd c = dec.coordinates(bracket(dec.basis(a), dec.basis(b)));
      for (std::size_t k = 0; k < d_; ++k) {
        const double v = c(static_cast<Eigen::Index>(k));
        v_[(a * d_ + b) * d_ + k] = v;
        v_[(b * d_ + a) * d_ + k] = -v;
      }
    }
  }
}

std::vector<ModuleIndex> module_list(const Partition& partition) {
  std::vector<ModuleIndex> out;
  const int p = partition.p();
  for (int j = 1; j < p; ++j) out.push_back(ModuleIndex::center(j));
  for (int i = 1; i <= p; ++i)
    if (partition.k(i) >= 2) out.push_back(ModuleIndex::simple(i));
  for (int r = 1; r <= p; ++r)
    for (int s = r + 1; s <= p; ++s) out.push_back(ModuleIndex::offdiag(r, s));
  return out;
}

double triple_brute(const Decomposition& dec, const StructureTensor& A, const ModuleIndex& c, const ModuleIndex& a,
                    const ModuleIndex& b) {
  const ModuleBlock &mc = dec.module(c), &ma = dec.module(a), &mb = dec.module(b);
  double sum = 0.0;
  for (std::size_t i = ma.offset; i < ma.offset + ma.dim; ++i)
    for (std::size_t j = mb.offset; j < mb.offset + mb.dim; ++j)
      for (std::size_t k = mc.offset; k < mc.offset + mc.dim; ++k) {
        const double v = A(i, j, k);
        sum += v * v;
      }
  return sum;
}

double triple_brute(const Decomposition& dec, const ModuleIndex& c, const ModuleIndex& a, const ModuleIndex& b) {
  return triple_brute(dec, StructureTensor(dec), c, a, b);
}

TripleTable brute_table(const Decomposition& dec, const StructureTensor& A) {
  TripleTable t(true);
  const auto& mods = dec.modules();
  for (std::size_t x = 0; x < mods.size(); ++x)
    for (std::size_t y = x; y < mods.size(); ++y)
      for (std::size_t z = y; z < mods.size(); ++z) {
        const double v = triple_brute(dec, A, mods[x].index, mods[y].index, mods[z].index);
        if (v > 1e-13) t.set(mods[x].index, mods[y].index, mods[z].index, v);
      }
  return t;
}

TripleTable brute_table(const Decomposition& dec) { return brute_table(dec, StructureTensor(dec)); }

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

void require_block(const Partition& part, int i) {
  if (i < 1 || i > part.p()) throw IndexError("block index " + std::to_string(i) + " out of range");
}

}  // namespace

BigRational triple_center_closed(const Partition& part, int i, int r, int s) {
  if (i < 1 || i > part.p() - 1) throw IndexError("center index " + std::to_string(i) + " out of range");
  require_block(part, r);
  require_block(part, s);
  if (r >= s) throw IndexError("off-diagonal module requires r < s");
  const long N = part.N();
  const auto k = [&](int j) { return static_cast<long>(part.k(j)); };
  const auto K = [&](int j) { return static_cast<long>(part.K(j)); };
  if (s < i) return 0;
  if (r <= i - 1 && s == i) return q(k(r) * (N - K(i)), N * (N - K(i - 1)));
  if (r <= i - 1 && s >= i + 1) return BigRational(q(k(i) * k(r) * k(s), N * (N - K(i - 1)))) / (N - K(i));
  if (r == i && i == 1) return q(k(s), N - K(1));
  if (r == i) return q(k(s) * (N - K(i - 1)), N * (N - K(i)));
  return 0;
}

BigRational triple_generic_closed(const Partition& part, GenericKind kind, const std::vector<int>& idx) {
  const long N = part.N();
  for (int i : idx) require_block(part, i);
  const auto k = [&](int j) { return static_cast<long>(part.k(j)); };
  switch (kind) {
    case GenericKind::RST:
      if (idx.size() != 3 || idx[0] == idx[1] || idx[1] == idx[2] || idx[0] == idx[2])
        throw IndexError("rst triple needs three distinct blocks");
      return q(k(idx[0]) * k(idx[1]) * k(idx[2]), N);
    case GenericKind::SimpleOffDiag:
      if (idx.size() != 2 || idx[0] == idx[1]) throw IndexError("simple/off-diagonal triple needs two distinct blocks");
      return q(k(idx[1]) * (k(idx[0]) * k(idx[0]) - 1), N);
    case GenericKind::SimpleSimple:
      if (idx.size() != 1) throw IndexError("simple triple needs one block");
      return q(k(idx[0]) * (k(idx[0]) * k(idx[0]) - 1), N);
  }
  throw IndexError("unknown triple kind");
}

BigRational triple_closed(const Partition& part, const ModuleIndex& c, const ModuleIndex& a, const ModuleIndex& b) {
  const TripleKey key = make_triple_key(c, a, b);
  int centers = 0, simples = 0;
  for (const auto& m : key) {
    if (m.is_center()) {
      if (m.a < 1 || m.a > part.p() - 1) throw IndexError("center index out of range in " + m.to_string());
      ++centers;
    } else {
      require_block(part, m.a);
      if (m.is_offdiag()) require_block(part, m.b);
      if (m.is_simple()) ++simples;
    }
  }
  const ModuleIndex &x = key[0], &y = key[1], &z = key[2];
  if (centers >= 2) return 0;
  if (centers == 1) {
    if (y.is_offdiag() && y == z) return triple_center_closed(part, x.a, y.a, y.b);
    return 0;
  }
  if (simples == 3) {
    if (x == y && y == z) return triple_generic_closed(part, GenericKind::SimpleSimple, {x.a});
    return 0;
  }
  if (simples == 2) return 0;
  if (simples == 1) {
    if (y == z && (x.a == y.a || x.a == y.b)) {
      const int other = x.a == y.a ? y.b : y.a;
      return triple_generic_closed(part, GenericKind::SimpleOffDiag, {x.a, other});
    }
    return 0;
  }
  std::set<int> blocks{x.a, x.b, y.a, y.b, z.a, z.b};
  if (blocks.size() == 3 && x != y && y != z && x != z) {
    const std::vector<int> idx(blocks.begin(), blocks.end());
    return triple_generic_closed(part, GenericKind::RST, idx);
  }
  return 0;
}

ExactTripleTable closed_table(const Partition& part) {
  ExactTripleTable t(true);
  const auto mods = module_list(part);
  for (std::size_t x = 0; x < mods.size(); ++x)
    for (std::size_t y = x; y < mods.size(); ++y)
      for (std::size_t z = y; z < mods.size(); ++z) {
        BigRational v = triple_closed(part, mods[x], mods[y], mods[z]);
        if (v != 0) t.set(mods[x], mods[y], mods[z], v);
      }
  return t;
}

CenterSums triple_sums_closed(const Partition& part) {
  if (!part.equal_tail()) throw UnsupportedShapeError("center sums need k_2 = ... = k_p");
  const long p = part.p(), N = part.N(), k1 = part.k(1), k = part.k(2);
  CenterSums s;
  s.first_row_tail = q((p - 2) * k1, (p - 1) * N);
  s.first_row_c1 = q(1, p - 1);
  s.tail_module = q(2 * k, N);
  s.first_row_fixed = q(k1, N);
  s.tail_fixed = q((p - 1) * k, N);
  return s;
}

std::vector<TailSumResolution> resolve_tail_sum(const Decomposition& dec, const StructureTensor& A) {
  const Partition& part = dec.partition();
  if (!part.equal_tail()) throw UnsupportedShapeError("center sums need k_2 = ... = k_p");
  const int p = part.p();
  const long N = part.N(), k = part.k(2);
  std::vector<TailSumResolution> out;
  for (int t = 2; t <= p - 1; ++t) {
    TailSumResolution r;
    r.t = t;
    for (int a = 2; a <= p; ++a)
      for (int b = a + 1; b <= p; ++b) {
        const auto m = ModuleIndex::offdiag(a, b);
        r.brute += triple_brute(dec, A, m, ModuleIndex::center(t), m);
      }
    r.candidate_p_minus_1 = q((p - 1) * k, N);
    r.candidate_p_minus_2 = q((p - 2) * k, N);
    r.matches_p_minus_1 = std::abs(r.brute - to_double(r.candidate_p_minus_1)) <= 1e-10;
    r.matches_p_minus_2 = std::abs(r.brute - to_double(r.candidate_p_minus_2)) <= 1e-10;
    out.push_back(r);
  }
  return out;
}

BigRational center_action_coefficient(const Partition& part, int j, int r, int s) {
  if (j < 1 || j > part.p() - 1) throw IndexError("center index " + std::to_string(j) + " out of range");
  require_block(part, r);
  require_block(part, s);
  if (r >= s) throw IndexError("off-diagonal module requires r < s");
  const long kj = part.k(j), rest = part.N() - part.K(j);
  if (r < j && s < j) return 0;
  if (r < j && s == j) return q(-1, kj);
  if (r < j) return q(1, rest);
  if (r == j) return q(1, kj) + q(1, rest);
  return 0;
}

CheckReport check_center_action(const Decomposition& dec, double tol) {
  const Partition& part = dec.partition();
  const auto centers = center_basis(part);
  CheckReport rep;
  for (int j = 1; j < part.p(); ++j) {
    const SuElement& h = centers[static_cast<std::size_t>(j - 1)].h;
    for (int r = 1; r <= part.p(); ++r)
      for (int s = r + 1; s <= part.p(); ++s) {
        const double c = to_double(center_action_coefficient(part, j, r, s));
        const auto basis = dec.basis_of(ModuleIndex::offdiag(r, s));
        const std::size_t half = basis.size() / 2;
        for (std::size_t t = 0; t < half; ++t) {
          const SuElement& x = basis[t];
          const SuElement& y = basis[t + half];
          const double scale = x.max_abs();
          const double ex = (bracket(h, x) - y * c).max_abs() / scale;
          const double ey = (bracket(h, y) + x * c).max_abs() / scale;
          const double e = std::max(ex, ey);
          rep.max_error = std::max(rep.max_error, e);
          ++rep.checked;
          if (e > tol)
            rep.violations.push_back("[H_" + std::to_string(j) + ", " + ModuleIndex::offdiag(r, s).to_string() +
                                     "] element " + std::to_string(t) + ": error " + std::to_string(e));
        }
      }
  }
  return rep;
}

std::vector<ModuleIndex> bracket_support(const Partition& part, const ModuleIndex& a0, const ModuleIndex& b0) {
  ModuleIndex a = std::min(a0, b0), b = std::max(a0, b0);
  const auto present = [&](const ModuleIndex& m) { return !m.is_simple() || part.k(m.a) >= 2; };
  std::vector<ModuleIndex> out;
  if (a.is_center()) {
    if (b.is_offdiag()) out.push_back(b);
    return out;
  }
  if (a.is_simple()) {
    if (b.is_simple() && a == b) out.push_back(a);
    if (b.is_offdiag() && (b.a == a.a || b.b == a.a)) out.push_back(b);
    return out;
  }
  if (a == b) {
    for (int j = 1; j < part.p(); ++j) out.push_back(ModuleIndex::center(j));
    for (int i : {a.a, a.b})
      if (present(ModuleIndex::simple(i))) out.push_back(ModuleIndex::simple(i));
    return out;
  }
  std::set<int> sa{a.a, a.b}, sb{b.a, b.b}, sym;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(sym, sym.begin()));
  if (sym.size() == 2) out.push_back(ModuleIndex::offdiag(*sym.begin(), *sym.rbegin()));
  return out;
}

CheckReport check_bracket_relations(const Decomposition& dec, int samples, std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const auto& mods = dec.modules();
  const auto random_in = [&](const ModuleBlock& m) {
    Eigen::VectorXd c(static_cast<Eigen::Index>(m.dim));
    for (auto& v : c) v = gauss(rng);
    c.normalize();
    SuElement x = SuElement::zero(dec.N());
    for (std::size_t i = 0; i < m.dim; ++i) x += dec.basis(m.offset + i) * c(static_cast<Eigen::Index>(i));
    return x;
  };
  CheckReport rep;
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = i; j < mods.size(); ++j) {
      const auto allowed = bracket_support(dec.partition(), mods[i].index, mods[j].index);
      for (int n = 0; n < samples; ++n) {
        const Eigen::VectorXd c = dec.coordinates(bracket(random_in(mods[i]), random_in(mods[j])));
        for (const auto& m : mods) {
          if (std::find(allowed.begin(), allowed.end(), m.index) != allowed.end()) continue;
          const double e =
              c.segment(static_cast<Eigen::Index>(m.offset), static_cast<Eigen::Index>(m.dim)).norm();
          rep.max_error = std::max(rep.max_error, e);
          ++rep.checked;
          if (e > tol)
            rep.violations.push_back("[" + mods[i].index.to_string() + ", " + mods[j].index.to_string() +
                                     "] has component " + std::to_string(e) + " in " + m.index.to_string());
        }
      }
    }
  return rep;
}

std::string triple_table_json(const Partition& part, const TripleTable& brute, const ExactTripleTable& closed) {
  std::set<TripleKey> keys;
  for (const auto& [k, v] : brute.entries()) keys.insert(k);
  for (const auto& [k, v] : closed.entries()) keys.insert(k);
  nlohmann::ordered_json j;
  j["schema"] = "einsu/1";
  j["partition"] = part.parts();
  auto& arr = j["triples"] = nlohmann::ordered_json::array();
  for (const auto& k : keys) {
    nlohmann::ordered_json e;
    e["modules"] = {k[0].to_string(), k[1].to_string(), k[2].to_string()};
    e["brute"] = brute.at(k[0], k[1], k[2]);
    e["closed"] = to_string(closed.at(k[0], k[1], k[2]));
    arr.push_back(e);
  }
  return j.dump(2);
}

}  // namespace einsu
