#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "tqr/group.hpp"

namespace tqr {

/// Z_{n_1} x ... x Z_{n_r}, elements encoded in mixed radix (first factor most significant).
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<std::uint32_t> factors);

  std::size_t order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }
  const std::vector<std::uint32_t>& factors() const { return factors_; }

  std::vector<std::uint32_t> coordinates(Element x) const;
  /// Reduces each coordinate modulo its factor.
  Element element(std::span<const std::int64_t> coordinates) const;
  Element zero() const { return 0; }
  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element multiple(Element a, std::int64_t k) const;

 private:
  std::vector<std::uint32_t> factors_;
  std::vector<std::size_t> strides_;
  std::size_t order_;
};

/// A group L of automorphisms of an AbelianGroup, stored as explicit
/// permutations of its elements. The constructor closes the given maps under
/// composition and always includes the identity.
class AutAction {
 public:
  AutAction(const AbelianGroup& group, const std::vector<std::vector<Element>>& maps);
  static AutAction trivial(const AbelianGroup& group);

  /// |L|
  std::size_t size() const { return maps_.size(); }
  const std::vector<std::vector<Element>>& maps() const { return maps_; }
  /// L a, sorted.
  std::vector<Element> orbit(Element a) const;
  /// Partition of the group into L-orbits, each sorted, ordered by minimal element.
  std::vector<std::vector<Element>> orbits() const;
  bool is_invariant(std::span<const Element> set) const;

 private:
  std::size_t group_order_;
  std::vector<std::vector<Element>> maps_;
};

/// Characters of K = prod Z_{n_i}: theta_x(k) = exp(2 pi i sum_i x_i k_i / n_i).
/// K* is identified with a copy of K (exponent tuples), so pointwise products
/// of characters are sums of exponent tuples.
class DualGroup {
 public:
  explicit DualGroup(AbelianGroup group);

  const AbelianGroup& group() const { return group_; }
  /// The dual as an abstract abelian group of exponent tuples.
  const AbelianGroup& characters() const { return group_; }
  std::complex<double> evaluate(Element theta, Element x) const;
  /// Exact phase of theta(x) as a fraction of a full turn, numerator over lcm(n_i).
  std::int64_t phase(Element theta, Element x) const;
  std::int64_t phase_denominator() const { return lcm_; }
  /// L acting on K* by (sigma . theta)(k) = theta(sigma(k)).
  AutAction dual_action(const AutAction& action) const;

 private:
  AbelianGroup group_;
  std::int64_t lcm_;
};

/// Exact m-fold sumset A + ... + A (m >= 1), sorted.
std::vector<Element> m_fold_sumset(const AbelianGroup& group, std::span<const Element> set, int m);

/// An abelian subgroup of a GroupTable identified with a product of cyclic groups.
struct AbelianDecomposition {
  AbelianGroup group;
  /// AbelianGroup element -> element of the ambient group.
  std::vector<Element> to_ambient;
  /// Ambient element -> AbelianGroup element (only meaningful on members).
  std::vector<Element> from_ambient;
};

/// Splits an abelian subgroup into cyclic factors of prime-power order
/// (one Sylow subgroup at a time, greedy on maximal coset order).
/// Throws InvalidArgument if the subgroup is not abelian.
AbelianDecomposition decompose_abelian(const GroupTable& group, const Subgroup& subgroup);

}  // namespace tqr
