#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "tqr/group.hpp"
#include "tqr/limits.hpp"

namespace tqr {

using Complex = std::complex<double>;
using IrrepId = std::uint32_t;

/// A complex-valued function on the conjugacy classes of a group.
class ClassFunction {
 public:
  ClassFunction(std::shared_ptr<const ClassData> classes, std::vector<Complex> values);

  static ClassFunction zero(std::shared_ptr<const ClassData> classes);
  static ClassFunction constant(std::shared_ptr<const ClassData> classes, Complex value);
  /// 1_{g=e}
  static ClassFunction identity_indicator(std::shared_ptr<const ClassData> classes);

  std::size_t size() const { return values_.size(); }
  Complex operator[](ClassId c) const { return values_[c]; }
  Complex& operator[](ClassId c) { return values_[c]; }
  const std::vector<Complex>& values() const { return values_; }
  const ClassData& classes() const { return *classes_; }
  const std::shared_ptr<const ClassData>& classes_ptr() const { return classes_; }
  bool same_group(const ClassFunction& other) const { return classes_ == other.classes_; }

 private:
  std::shared_ptr<const ClassData> classes_;
  std::vector<Complex> values_;
};

/// <f, g> = (1/|G|) sum_{x in G} f(x) conj(g(x)).
Complex inner_product(const ClassFunction& f, const ClassFunction& g);

struct TableQuality {
  double row_residual = 0.0;
  double column_residual = 0.0;
  /// Number of random class-matrix combinations tried (1 when imported).
  int attempts = 0;
};

/// Complex character table. Irrep 0 is the trivial character; irreps are
/// ordered by dimension, then by descending lexicographic order of their
/// values (real part before imaginary part, class by class).
class CharTable {
 public:
  /// Burnside's class-matrix method: simultaneous diagonalization of the class
  /// multiplication matrices through a random Hermitian combination. Throws
  /// CapExceeded above `limits.char_table_cap` and NumericalFailure when no
  /// separating combination is found or the orthogonality residuals exceed the
  /// tolerance.
  static CharTable compute(std::shared_ptr<const GroupTable> group, const Limits& limits = {});
  static CharTable compute(GroupTable group, const Limits& limits = {});

  /// Import path. Values are taken as given (no reordering) and certified by
  /// orthogonality; throws NumericalFailure or InvalidArgument when they do not
  /// form a character table of `group`.
  CharTable(std::shared_ptr<const GroupTable> group, std::shared_ptr<const ClassData> classes, std::vector<int> dims,
            std::vector<std::vector<Complex>> values, const Limits& limits = {});

  std::size_t num_irreps() const { return dims_.size(); }
  std::size_t num_classes() const { return classes_->num_classes(); }
  std::size_t group_order() const { return group_->order(); }
  int dim(IrrepId irrep) const { return dims_[irrep]; }
  const std::vector<int>& dims() const { return dims_; }
  Complex value(IrrepId irrep, ClassId c) const { return values_[irrep][c]; }
  const std::vector<std::vector<Complex>>& values() const { return values_; }
  ClassFunction character(IrrepId irrep) const;

  const GroupTable& group() const { return *group_; }
  const std::shared_ptr<const GroupTable>& group_ptr() const { return group_; }
  const ClassData& classes() const { return *classes_; }
  const std::shared_ptr<const ClassData>& classes_ptr() const { return classes_; }
  const TableQuality& quality() const { return quality_; }
  double tolerance() const { return tolerance_; }
  /// c(G); throws InvalidArgument for the trivial group.
  std::size_t min_nontrivial_class_size() const;

 private:
  CharTable() = default;
  void certify(const Limits& limits);

  std::shared_ptr<const GroupTable> group_;
  std::shared_ptr<const ClassData> classes_;
  std::vector<int> dims_;
  std::vector<std::vector<Complex>> values_;
  TableQuality quality_;
  double tolerance_ = 1e-8;
};

/// M_i[j][k] = #{(x, y) in C_i x C_j : x y = z} for a fixed z in C_k.
std::vector<std::vector<std::int64_t>> class_multiplication_matrix(const GroupTable& group, const ClassData& classes,
                                                                   ClassId i);

/// Ind_H^G theta, with theta given on the elements of G (only the entries at
/// members of H are read):
///   (Ind theta)(x) = (1/|H|) sum_{g in G} theta°(g^-1 x g),  theta° = 0 off H.
/// Throws InvalidArgument when H is not closed under multiplication.
ClassFunction induce_character(const GroupTable& group, std::shared_ptr<const ClassData> classes, const Subgroup& h,
                               std::span<const Complex> theta);
ClassFunction induce_character(const CharTable& table, const Subgroup& h, std::span<const Complex> theta);

/// Spreads a class function of a standalone subgroup onto G's elements (zero off H).
std::vector<Complex> lift_to_elements(const ClassFunction& f, const EmbeddedSubgroup& h, std::size_t group_order);

/// Values of a class function of G restricted to the elements of H, indexed like `h.members`.
std::vector<Complex> restrict_to(const ClassFunction& f, const Subgroup& h);

}  // namespace tqr
