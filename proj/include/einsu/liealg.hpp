#pragma once

#include <Eigen/Dense>

#include <compare>
#include <span>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace einsu {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// Block sizes (k_1, ..., k_p) of S(U(k_1) x ... x U(k_p)) inside SU(N).
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  int p() const { return static_cast<int>(parts_.size()); }
  int N() const { return n_; }
  /// Block size k_i, 1-based.
  int k(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }
  /// Partial sum K_j = k_1 + ... + k_j, with K_0 = 0.
  int K(int j) const { return partial_.at(static_cast<std::size_t>(j)); }
  /// First row (0-based) of block i.
  int offset(int i) const { return K(i - 1); }
  const std::vector<int>& parts() const { return parts_; }

  /// True when k_2 = ... = k_p.
  bool equal_tail() const;

  std::string to_string() const;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  std::vector<int> partial_;
  int n_ = 0;
};

/// A traceless anti-Hermitian matrix.
class SuElement {
 public:
  SuElement() = default;
  /// Wraps `m` after checking the su(N) invariants to `tol`.
  static SuElement from_matrix(CMatrix m, double tol = 1e-12);
  static SuElement zero(int n) { return SuElement(CMatrix::Zero(n, n)); }

  int size() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }

  SuElement operator+(const SuElement& o) const { return SuElement(m_ + o.m_); }
  SuElement operator-(const SuElement& o) const { return SuElement(m_ - o.m_); }
  SuElement operator*(double s) const { return SuElement(m_ * s); }
  SuElement& operator+=(const SuElement& o) {
    m_ += o.m_;
    return *this;
  }

  /// Largest |entry|.
  double max_abs() const;

 private:
  explicit SuElement(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;

  friend SuElement bracket(const SuElement&, const SuElement&);
  friend class DecompositionBuilder;
};

inline SuElement operator*(double s, const SuElement& x) { return x * s; }

SuElement bracket(const SuElement& x, const SuElement& y);

/// -B(X, Y) = -2N tr(XY).
double minus_killing(const SuElement& x, const SuElement& y);

/// Module of the Ad(K)-splitting: a center line c_j, a simple ideal m_i = su(k_i),
/// or an off-diagonal block m_rs.
struct ModuleIndex {
  enum class Kind { Center = 0, Simple = 1, OffDiag = 2 };

  Kind kind = Kind::Center;
  int a = 1;
  int b = 0;

  static ModuleIndex center(int j) { return {Kind::Center, j, 0}; }
  static ModuleIndex simple(int i) { return {Kind::Simple, i, 0}; }
  /// Off-diagonal block; the pair is stored with r < s.
  static ModuleIndex offdiag(int r, int s);

  bool is_center() const { return kind == Kind::Center; }
  bool is_simple() const { return kind == Kind::Simple; }
  bool is_offdiag() const { return kind == Kind::OffDiag; }

  /// "c(1)", "m(2)", "m(1,3)".
  std::string to_string() const;

  auto operator<=>(const ModuleIndex&) const = default;
};

/// Center basis element H_j with its -B normalizer a_j.
struct CenterElement {
  SuElement h;
  double a = 0.0;
};

/// H_1, ..., H_{p-1} together with the normalizers a_j = |H_j|^{-1}.
std::vector<CenterElement> center_basis(const Partition& partition);

/// One module of the decomposition: a contiguous range of the global basis.
struct ModuleBlock {
  ModuleIndex index;
  std::size_t offset = 0;
  std::size_t dim = 0;
};

/// su(N) = c + sum m_i + sum m_rs with orthonormal bases. Immutable once built.
class Decomposition {
 public:
  const Partition& partition() const { return partition_; }
  int N() const { return partition_.N(); }
  std::size_t dim() const { return dim_; }

  const std::vector<ModuleBlock>& modules() const { return modules_; }
  bool has(const ModuleIndex& m) const;
  const ModuleBlock& module(const ModuleIndex& m) const;
  /// Position of `m` in modules().
  std::size_t position(const ModuleIndex& m) const;

  /// Global basis element.
  const SuElement& basis(std::size_t i) const { return basis_[i]; }
  std::span<const SuElement> basis_of(const ModuleIndex& m) const;
  /// Module position owning global basis element i.
  std::size_t owner(std::size_t i) const { return owner_[i]; }

  /// -B(X, e_i) for every global basis element.
  Eigen::VectorXd coordinates(const SuElement& x) const;

  /// Sparse nonzero pattern of each basis element, used to evaluate -B quickly.
  struct Entry {
    int row;
    int col;
    cplx value;
  };
  const std::vector<Entry>& pattern(std::size_t i) const { return patterns_[i]; }

 private:
  friend class DecompositionBuilder;
  explicit Decomposition(Partition partition) : partition_(std::move(partition)) {}

  Partition partition_;
  std::vector<ModuleBlock> modules_;
  std::vector<SuElement> basis_;
  std::vector<std::size_t> owner_;
  std::vector<std::vector<Entry>> patterns_;
  std::size_t dim_ = 0;
};

Decomposition build_decomposition(const Partition& partition);

/// -B-orthogonal projection of x onto module m.
SuElement project(const SuElement& x, const Decomposition& dec, const ModuleIndex& m);

/// Expected dimension of a module (0 for Simple(i) with k_i = 1).
std::size_t module_dimension(const Partition& partition, const ModuleIndex& m);

}  // namespace einsu
