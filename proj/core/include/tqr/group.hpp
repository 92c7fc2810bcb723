#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tqr/limits.hpp"

namespace tqr {

using Element = std::uint32_t;
using ClassId = std::uint32_t;

enum class Family {
  cyclic,
  dihedral,
  symmetric,
  alternating,
  quaternion8,
  extraspecial,
  affine,
  direct,
};

/// Construction recipe for a finite group.
///
/// Exactly one of three sources is used, selected by `kind`:
///  - `family`: a named family with one integer parameter (`n` or `p`), or a
///    direct product of the two specs in `factors`;
///  - `cayley`: an explicit table, `table[i][j]` the index of g_i * g_j;
///  - `permutation`: generators on {0..degree-1} in one-line notation.
struct GroupSpec {
  enum class Kind { family, cayley, permutation };

  Kind kind = Kind::family;
  Family family = Family::cyclic;
  long parameter = 1;
  std::vector<GroupSpec> factors;
  std::vector<std::vector<Element>> table;
  std::size_t degree = 0;
  std::vector<std::vector<Element>> generators;

  static GroupSpec make_family(Family f, long parameter = 0);
  static GroupSpec direct_product(GroupSpec left, GroupSpec right);
  static GroupSpec cayley(std::vector<std::vector<Element>> table);
  static GroupSpec permutations(std::size_t degree, std::vector<std::vector<Element>> generators);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Short human-readable form, e.g. "family:affine:5" or "family:cyclic:2*family:symmetric:4".
std::string describe(const GroupSpec& spec);
std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Dense multiplication table of a finite group on element indices 0..order-1.
///
/// Immutable once constructed. The constructor checks that the table is a
/// Latin square with a two-sided identity; associativity is checked separately
/// by `validate` because it is the expensive part.
class GroupTable {
 public:
  GroupTable(std::size_t order, std::vector<Element> products, std::vector<std::string> labels,
             std::string descriptor, std::optional<GroupSpec> spec = std::nullopt);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return products_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverses_[a]; }
  /// g * x * g^-1
  Element conjugate(Element g, Element x) const { return mul(mul(g, x), inverses_[g]); }
  Element power(Element a, std::uint64_t e) const;
  std::size_t element_order(Element a) const;

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& descriptor() const { return descriptor_; }
  /// The recipe this table was built from; empty for derived groups (quotients, subgroups).
  const std::optional<GroupSpec>& spec() const { return spec_; }
  std::span<const Element> row(Element a) const {
    return {products_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  const std::vector<Element>& products() const { return products_; }
  bool is_abelian() const;

  /// Associativity check: exhaustive up to `limits.exhaustive_associativity`,
  /// seeded sampling above. Throws InvalidGroup on failure.
  void validate(const Limits& limits = {}) const;

 private:
  std::size_t order_;
  std::vector<Element> products_;
  std::vector<Element> inverses_;
  Element identity_ = 0;
  std::vector<std::string> labels_;
  std::string descriptor_;
  std::optional<GroupSpec> spec_;
};

/// Builds and validates a group from a spec. Throws InvalidGroup or CapExceeded.
GroupTable build_group(const GroupSpec& spec, const Limits& limits = {});

GroupTable make_cyclic(std::size_t n);
/// Dihedral group of the regular n-gon, order 2n.
GroupTable make_dihedral(std::size_t n);
GroupTable make_symmetric(std::size_t n, const Limits& limits = {});
GroupTable make_alternating(std::size_t n, const Limits& limits = {});
GroupTable make_quaternion8();
/// Heisenberg group of upper unitriangular 3x3 matrices over F_p, order p^3.
GroupTable make_extraspecial(std::size_t p);
/// Affine bijections x -> a x + b of F_p, stored as pairs (a, b) with
/// (a, b)(a', b') = (a a', a b' + b). Order p(p-1).
GroupTable make_affine(std::size_t p);
GroupTable make_direct_product(const GroupTable& left, const GroupTable& right);
/// Closes permutation generators (one-line notation, composition (p*q)(x) = p(q(x)))
/// into the full group by breadth-first products.
GroupTable make_permutation_group(std::size_t degree, const std::vector<std::vector<Element>>& generators,
                                  const Limits& limits = {});
GroupTable make_cayley_group(const std::vector<std::vector<Element>>& table);

bool is_prime(std::size_t n);

/// Conjugacy classes in canonical order: identity class first, then by
/// (size, minimal element index).
struct ClassData {
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> sizes;
  std::vector<ClassId> class_of;
  std::vector<Element> representatives;
  /// Class containing the inverses of a class.
  std::vector<ClassId> inverse_class;
  /// c(G): minimal size of a non-trivial class; empty for the trivial group.
  std::optional<std::size_t> min_nontrivial_size;

  std::size_t num_classes() const { return classes.size(); }
  std::size_t group_order() const { return class_of.size(); }
};

ClassData conjugacy_classes(const GroupTable& group);

/// A subgroup given by its (sorted) member indices.
struct Subgroup {
  std::vector<Element> members;
  bool is_normal = false;
  bool is_central = false;
  std::size_t index = 0;

  std::size_t size() const { return members.size(); }
  bool contains(Element x) const;
};

/// Validates closure and fills the flags. Throws InvalidArgument if `members`
/// is not a subgroup.
Subgroup make_subgroup(const GroupTable& group, const ClassData& classes, std::vector<Element> members);
Subgroup generated_subgroup(const GroupTable& group, const ClassData& classes, std::span<const Element> generators);
Subgroup trivial_subgroup(const GroupTable& group, const ClassData& classes);
Subgroup whole_group(const GroupTable& group, const ClassData& classes);

Subgroup center(const GroupTable& group, const ClassData& classes);
/// Z(H) for a subgroup H of G, returned as a subgroup of G.
Subgroup center_of_subgroup(const GroupTable& group, const ClassData& classes, const Subgroup& h);
/// Elements commuting with every element of `set`.
Subgroup centralizer(const GroupTable& group, const ClassData& classes, std::span<const Element> set);
Subgroup intersect(const GroupTable& group, const ClassData& classes, const Subgroup& a, const Subgroup& b);
/// [H, H], generated by all commutators of elements of H.
Subgroup derived_subgroup(const GroupTable& group, const ClassData& classes, const Subgroup& h);

/// All normal subgroups sorted by size (then lexicographically by members).
/// Throws CapExceeded when |G| exceeds `limits.normal_subgroup_cap`.
std::vector<Subgroup> normal_subgroups(const GroupTable& group, const ClassData& classes, const Limits& limits = {});

/// G/N on cosets; coset i is represented by its minimal element. Throws
/// InvalidArgument when N is not normal.
GroupTable quotient(const GroupTable& group, const ClassData& classes, const Subgroup& normal);
/// Coset index of every element of G in `quotient(group, classes, normal)`.
std::vector<Element> coset_map(const GroupTable& group, const Subgroup& normal);

/// G_0 = G, G_{i+1} = G_i / Z(G_i), stopping at the first center-free (possibly trivial) group.
std::vector<GroupTable> center_free_quotient_chain(const GroupTable& group);

/// H as a standalone group, together with the embedding H -> G.
struct EmbeddedSubgroup {
  GroupTable group;
  std::vector<Element> embedding;
};
EmbeddedSubgroup subgroup_as_group(const GroupTable& group, const Subgroup& h);

/// Structure attached to a small non-trivial conjugacy class C by the
/// conjugation action G -> Sym(C): its kernel N (normal, index at most |C|!),
/// the normal subgroup H generated by C, and K = H ∩ N, which is central in N.
struct ClassActionStructure {
  ClassId class_id = 0;
  std::size_t class_size = 0;
  Subgroup kernel;
  std::size_t image_order = 0;
  Subgroup generated;
  Subgroup intersection;
  bool intersection_central_in_kernel = false;
};
ClassActionStructure class_action_structure(const GroupTable& group, const ClassData& classes, ClassId cls);

}  // namespace tqr
