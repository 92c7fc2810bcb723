#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tqr/abelian.hpp"
#include "tqr/char_table.hpp"
#include "tqr/class_functions.hpp"

namespace tqr {

using LatticePoint = std::vector<std::int64_t>;

/// Translates t_i with mnB contained in the union of t_i + nB.
template <typename Point>
struct TranslateCover {
  std::vector<Point> translates;
  /// k = |B| - 1
  std::size_t k = 0;
  /// (10 k m)^k, with 0^0 = 1.
  double bound = 1.0;
  /// Exhaustive membership check of mnB against the union.
  bool verified = false;

  std::size_t count() const { return translates.size(); }
};

/// B a finite set of points of Z^d (all of the same dimension).
/// Throws InvalidArgument on empty B or n, m < 1.
TranslateCover<LatticePoint> translate_cover(const std::vector<LatticePoint>& b, int n, int m);
/// B a subset of an abelian group.
TranslateCover<Element> translate_cover(const AbelianGroup& group, const std::vector<Element>& b, int n, int m);

/// Exact n-fold sumset of lattice points, sorted.
std::vector<LatticePoint> lattice_sumset(const std::vector<LatticePoint>& b, int n);

/// 0.5 / (10 k m)^(k+1)
double default_doubling_epsilon(std::size_t k, int m);

struct DoublingStep {
  std::size_t set_size = 0;
  std::size_t sumset_size = 0;
  /// (10 k m)^k |A|
  double growth_bound = 0.0;
  bool growth_holds = false;
  /// The element a in use at this step.
  Element generator = 0;
};

struct SmallDoublingResult {
  std::vector<Element> set;
  double epsilon = 0.0;
  std::size_t acting_order = 0;
  int m = 0;
  /// |K| <= 1/epsilon, so the output is {0}.
  bool small_group_branch = false;
  std::size_t sumset_size = 0;
  bool half_bound_holds = false;
  bool invariant = false;
  bool growth_always_held = false;
  std::vector<DoublingStep> trace;
};

/// Grows A from {0} by A <- A u (A + La), moving a to the least element outside A
/// whenever A + La is inside A, and stops once |A| >= epsilon |K|.
/// epsilon defaults to default_doubling_epsilon(|L|, m); it must lie in (0, 1].
SmallDoublingResult invariant_small_doubling_set(const AbelianGroup& group, const AutAction& action, int m,
                                                 std::optional<double> epsilon = std::nullopt);

/// Z(N) and the action of G/N on it and on its dual.
struct CentralData {
  Subgroup n;
  Subgroup k;
  AbelianDecomposition decomposition;
  DualGroup dual;
  /// One element of G per coset of N.
  std::vector<Element> coset_reps;
  /// L = image of G/N -> Aut(K), and the induced action on K*.
  AutAction action;
  AutAction dual_action;
};
/// Throws InvalidArgument when N is not normal or Z(N) is trivial.
CentralData central_data(const GroupTable& group, const ClassData& classes, const Subgroup& n);

/// theta on the elements of G (zero off K).
std::vector<Complex> theta_on_group(const CentralData& data, std::size_t group_order, Element theta);
/// chi of Ind_K^G theta from the coset formula:
///   (|N|/|K|) sum_i theta(g_i^-1 k g_i) on K, 0 off K.
ClassFunction coset_formula_character(const CentralData& data, const GroupTable& group,
                                      std::shared_ptr<const ClassData> classes, Element theta);

struct CounterexampleReport {
  RepMultiset v;
  std::vector<std::uint32_t> center_factors;
  std::size_t center_order = 0;
  std::size_t acting_order = 0;
  int m = 0;
  SmallDoublingResult doubling;
  /// A as exponent tuples.
  std::vector<std::vector<std::uint32_t>> characters;
  double measure = 0.0;
  double power_measure = 0.0;
  /// |A| / |K|
  double expected_measure = 0.0;
  bool measure_matches = false;
  bool power_within_half = false;
  /// supp(V^m) is inside the supports of W_theta, theta in mA.
  bool power_support_in_sumset = false;
};

/// V = sum over theta in A of Ind_K^G theta, with A from the small doubling
/// construction on K* under the dual conjugation action.
CounterexampleReport build_counterexample_rep(const CharTable& table, const Subgroup& n, int m,
                                              std::optional<double> epsilon = std::nullopt);

/// Pullback of the regular representation of G/N, i.e. Ind_N^G of the trivial character.
RepMultiset quotient_pullback_regular(const CharTable& table, const Subgroup& n);

struct PartitionBlock {
  /// The characters of K (exponent indices) the block comes from.
  std::vector<Element> characters;
  std::vector<IrrepId> support;
  double measure = 0.0;
  double expected = 0.0;
};

struct VThetaPartitionReport {
  std::size_t center_order = 0;
  std::vector<PartitionBlock> blocks;
  bool partition = false;
  bool measures_match = false;
  /// Multiplicities of Ind theta equal the dimensions on each block.
  bool reduced = false;
  bool regular_sum = false;

  bool ok() const { return partition && measures_match && reduced && regular_sum; }
};
/// N-level check: Ind_K^N theta for every theta in K*. `table` is the table of N.
/// Throws InvalidArgument when K is not central.
VThetaPartitionReport verify_vtheta_partition(const CharTable& table, const Subgroup& k);

struct OrbitPartitionReport {
  std::size_t center_order = 0;
  std::size_t acting_order = 0;
  /// One block per L-orbit on K*.
  std::vector<PartitionBlock> blocks;
  bool partition = false;
  bool measures_match = false;
  /// Coset formula agrees with induce_character for every theta.
  bool coset_formula_matches = false;
  double coset_formula_residual = 0.0;
  /// <W_theta, W_theta'> = 0 exactly when theta, theta' lie in different orbits.
  bool orthogonality_matches = false;

  bool ok() const { return partition && measures_match && coset_formula_matches && orthogonality_matches; }
};
/// G-level check over the orbits of G/N on Z(N)*.
OrbitPartitionReport verify_orbit_partition(const CharTable& table, const Subgroup& n);

}  // namespace tqr
