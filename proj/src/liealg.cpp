#include "einsu/liealg.hpp"

#include "einsu/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace einsu {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) throw DegenerateError("partition needs at least two blocks");
  for (int k : parts_) {
    if (k < 1) throw ParameterError("partition blocks must be positive");
  }
  partial_.resize(parts_.size() + 1, 0);
  std::partial_sum(parts_.begin(), parts_.end(), partial_.begin() + 1);
  n_ = partial_.back();
}

bool Partition::equal_tail() const {
  return std::all_of(parts_.begin() + 1, parts_.end(), [&](int k) { return k == parts_[1]; });
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

SuElement SuElement::from_matrix(CMatrix m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("su(N) element must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m + m.adjoint()).cwiseAbs().maxCoeff() > tol * scale)
    throw DomainError("matrix is not anti-Hermitian");
  if (std::abs(m.trace()) > tol * scale * static_cast<double>(m.rows()))
    throw DomainError("matrix is not traceless");
  return SuElement(std::move(m));
}

double SuElement::max_abs() const { return m_.size() ? m_.cwiseAbs().maxCoeff() : 0.0; }

SuElement bracket(const SuElement& x, const SuElement& y) {
  if (x.size() != y.size()) throw DimensionError("bracket operands differ in size");
  return SuElement(x.m_ * y.m_ - y.m_ * x.m_);
}

double minus_killing(const SuElement& x, const SuElement& y) {
  if (x.size() != y.size()) throw DimensionError("killing form operands differ in size");
  const int n = x.size();
  // tr(XY) without forming the product.
  const cplx tr = (x.matrix().transpose().cwiseProduct(y.matrix())).sum();
  const cplx value = -2.0 * n * tr;
  const double scale = std::max(1.0, x.max_abs() * y.max_abs() * n * n);
  if (std::abs(value.imag()) > 1e-12 * scale)
    throw NumericalConsistencyError("killing form has a non-negligible imaginary part");
  return value.real();
}

ModuleIndex ModuleIndex::offdiag(int r, int s) {
  if (r == s) throw IndexError("off-diagonal module needs r != s");
  return {Kind::OffDiag, std::min(r, s), std::max(r, s)};
}

std::string ModuleIndex::to_string() const {
  switch (kind) {
    case Kind::Center:
      return "c(" + std::to_string(a) + ")";
    case Kind::Simple:
      return "m(" + std::to_string(a) + ")";
    case Kind::OffDiag:
      return "m(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return {};
}

std::vector<CenterElement> center_basis(const Partition& partition) {
  const int p = partition.p();
  const int n = partition.N();
  if (p < 2) throw DegenerateError("center basis needs p >= 2");
  std::vector<CenterElement> out;
  out.reserve(static_cast<std::size_t>(p - 1));
  const cplx i1(0.0, 1.0);
  for (int j = 1; j <= p - 1; ++j) {
    const int kj = partition.k(j);
    const int rest = n - partition.K(j);
    CMatrix h = CMatrix::Zero(n, n);
    for (int r = partition.K(j - 1); r < partition.K(j); ++r) h(r, r) = i1 / double(kj);
    for (int r = partition.K(j); r < n; ++r) h(r, r) = -i1 / double(rest);
    const double a = std::sqrt(double(kj) * rest / (2.0 * n * (n - partition.K(j - 1))));
    out.push_back({SuElement::from_matrix(std::move(h)), a});
  }
  return out;
}

std::size_t module_dimension(const Partition& partition, const ModuleIndex& m) {
  switch (m.kind) {
    case ModuleIndex::Kind::Center:
      return 1;
    case ModuleIndex::Kind::Simple: {
      const auto k = static_cast<std::size_t>(partition.k(m.a));
      return k * k - 1;
    }
    case ModuleIndex::Kind::OffDiag:
      return 2 * static_cast<std::size_t>(partition.k(m.a) * partition.k(m.b));
  }
  return 0;
}

class DecompositionBuilder {
 public:
  explicit DecompositionBuilder(const Partition& partition)
      : dec_(partition), n_(partition.N()), weyl_scale_(1.0 / (2.0 * std::sqrt(double(n_)))) {}

  Decomposition build() {
    const Partition& part = dec_.partition_;
    const int p = part.p();

    const auto centers = center_basis(part);
    for (int j = 1; j <= p - 1; ++j) {
      const CenterElement& c = centers[static_cast<std::size_t>(j - 1)];
      begin(ModuleIndex::center(j));
      add(c.h * c.a);
    }
    for (int i = 1; i <= p; ++i) {
      if (part.k(i) < 2) continue;
      begin(ModuleIndex::simple(i));
      add_simple(part.offset(i), part.k(i));
    }
    for (int r = 1; r <= p; ++r) {
      for (int s = r + 1; s <= p; ++s) {
        begin(ModuleIndex::offdiag(r, s));
        const int kr = part.k(r), ks = part.k(s);
        for (int al = 0; al < kr; ++al)
          for (int be = 0; be < ks; ++be) add(weyl(part.offset(r) + al, part.offset(s) + be, false));
        for (int al = 0; al < kr; ++al)
          for (int be = 0; be < ks; ++be) add(weyl(part.offset(r) + al, part.offset(s) + be, true));
      }
    }
    dec_.dim_ = dec_.basis_.size();
    return std::move(dec_);
  }

 private:
  void begin(const ModuleIndex& m) {
    dec_.modules_.push_back({m, dec_.basis_.size(), 0});
  }

  void add(SuElement e) {
    std::vector<Decomposition::Entry> nz;
    const CMatrix& m = e.matrix();
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (m(r, c) != cplx(0.0)) nz.push_back({r, c, m(r, c)});
    dec_.patterns_.push_back(std::move(nz));
    dec_.owner_.push_back(dec_.modules_.size() - 1);
    dec_.basis_.push_back(std::move(e));
    dec_.modules_.back().dim += 1;
  }

  // X = E_ab - E_ba or Y = i(E_ab + E_ba), scaled to unit -B norm.
  SuElement weyl(int a, int b, bool imaginary) const {
    CMatrix m = CMatrix::Zero(n_, n_);
    if (imaginary) {
      m(a, b) = cplx(0.0, 1.0);
      m(b, a) = cplx(0.0, 1.0);
    } else {
      m(a, b) = 1.0;
      m(b, a) = -1.0;
    }
    return SuElement::from_matrix(m * weyl_scale_);
  }

  // Generalized Gell-Mann basis of su(k) embedded at rows [off, off + k).
  void add_simple(int off, int k) {
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) add(weyl(off + a, off + b, false));
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) add(weyl(off + a, off + b, true));
    for (int m = 1; m < k; ++m) {
      CMatrix d = CMatrix::Zero(n_, n_);
      for (int r = 0; r < m; ++r) d(off + r, off + r) = cplx(0.0, 1.0);
      d(off + m, off + m) = cplx(0.0, -double(m));
      add(SuElement::from_matrix(d / std::sqrt(2.0 * n_ * m * (m + 1))));
    }
  }

  Decomposition dec_;
  int n_;
  double weyl_scale_;
};

Decomposition build_decomposition(const Partition& partition) {
  return DecompositionBuilder(partition).build();
}

bool Decomposition::has(const ModuleIndex& m) const {
  return std::any_of(modules_.begin(), modules_.end(), [&](const ModuleBlock& b) { return b.index == m; });
}

std::size_t Decomposition::position(const ModuleIndex& m) const {
  for (std::size_t i = 0; i < modules_.size(); ++i)
    if (modules_[i].index == m) return i;
  throw IndexError("module " + m.to_string() + " not in decomposition of " + partition_.to_string());
}

const ModuleBlock& Decomposition::module(const ModuleIndex& m) const { return modules_[position(m)]; }

std::span<const SuElement> Decomposition::basis_of(const ModuleIndex& m) const {
  const ModuleBlock& b = module(m);
  return {basis_.data() + b.offset, b.dim};
}

Eigen::VectorXd Decomposition::coordinates(const SuElement& x) const {
  if (x.size() != N()) throw DimensionError("element size does not match decomposition");
  Eigen::VectorXd out(static_cast<Eigen::Index>(dim_));
  const CMatrix& m = x.matrix();
  const double n2 = -2.0 * N();
  for (std::size_t i = 0; i < dim_; ++i) {
    cplx tr = 0.0;
    for (const Entry& e : patterns_[i]) tr += m(e.col, e.row) * e.value;
    out(static_cast<Eigen::Index>(i)) = n2 * tr.real();
  }
  return out;
}

SuElement project(const SuElement& x, const Decomposition& dec, const ModuleIndex& m) {
  const ModuleBlock& block = dec.module(m);
  SuElement out = SuElement::zero(dec.N());
  for (std::size_t i = block.offset; i < block.offset + block.dim; ++i)
    out += dec.basis(i) * minus_killing(x, dec.basis(i));
  return out;
}

}  // namespace einsu
