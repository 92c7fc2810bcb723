#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tqr/char_table.hpp"

namespace tqr {

/// A representation up to isomorphism: multiplicities over Irrep(G) in the
/// table's canonical irrep order. The all-zero vector is the zero representation.
class RepMultiset {
 public:
  RepMultiset() = default;
  explicit RepMultiset(std::vector<std::int64_t> mult);

  static RepMultiset zero(std::size_t num_irreps);
  /// Multiplicity one on each irrep in `support`.
  static RepMultiset from_support(std::size_t num_irreps, const std::vector<IrrepId>& support);
  static RepMultiset from_mask(const std::vector<bool>& mask);

  std::size_t size() const { return mult_.size(); }
  std::int64_t operator[](IrrepId l) const { return mult_[l]; }
  const std::vector<std::int64_t>& mult() const { return mult_; }
  std::vector<IrrepId> support() const;
  std::vector<bool> support_mask() const;
  bool contains(IrrepId l) const { return mult_[l] > 0; }
  bool is_zero() const;
  /// True when every irrep occurs.
  bool covers() const;

  friend bool operator==(const RepMultiset&, const RepMultiset&) = default;

 private:
  std::vector<std::int64_t> mult_;
};

// Selectors.
RepMultiset all_irreps(const CharTable& table);
RepMultiset trivial_rep(const CharTable& table);
RepMultiset single_irrep(const CharTable& table, IrrepId l);
RepMultiset irreps_of_dim_at_least(const CharTable& table, int d);
/// The regular representation: mult(l) = dim(l).
RepMultiset regular_rep(const CharTable& table);

/// Plancherel measure M_G(l) = dim(l)^2 / |G| of every irrep.
std::vector<double> plancherel_measure(const CharTable& table);
/// M_G(V): Plancherel measure of the support of V.
double plancherel(const CharTable& table, const RepMultiset& v);

/// chi^V = sum_l mult(l) chi^l.
ClassFunction character_of(const CharTable& table, const RepMultiset& v);
/// Reduced character (1/|G|) sum_{l in supp V} dim(l) chi^l.
ClassFunction reduced_character(const CharTable& table, const RepMultiset& v);
/// V~ = sum_{l in supp V} dim(l) l.
RepMultiset reduce(const CharTable& table, const RepMultiset& v);

/// f = f(e) 1_{g=e} + f_0.
std::pair<Complex, ClassFunction> split_off_identity(const ClassFunction& f);

enum class Norm { l1, l2, linf };
/// l^p norm with counting measure on group elements (class values weighted by class size).
double lp_norm(const ClassFunction& f, Norm p);

/// <f, chi^l> for every irrep l.
std::vector<Complex> inner_products(const CharTable& table, const ClassFunction& f);
/// Multiplicities of a genuine character. Throws NotACharacter when an inner
/// product is not a non-negative integer (relative tolerance `table.tolerance()`),
/// or when the reconstruction does not reproduce f.
RepMultiset decompose(const CharTable& table, const ClassFunction& f);

ClassFunction tensor(const ClassFunction& f, const ClassFunction& g);
ClassFunction direct_sum(const ClassFunction& f, const ClassFunction& g);
ClassFunction scale(const ClassFunction& f, Complex s);
/// f^m pointwise (m >= 0).
ClassFunction tensor_power(const ClassFunction& f, int m);

/// V (x) W decomposed exactly through characters.
RepMultiset tensor_product(const CharTable& table, const RepMultiset& v, const RepMultiset& w);
/// Support of V^{(x) m}, computed step by step on reduced representations so
/// the intermediate characters stay bounded. m >= 1.
RepMultiset tensor_power_support(const CharTable& table, const RepMultiset& v, int m);

}  // namespace tqr
