#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tqr/char_table.hpp"
#include "tqr/class_functions.hpp"

namespace tqr {

/// The chain . (x) V~ on Irrep(G):
///   p(l, mu) = mult(mu in l (x) V~) dim(mu) / (dim(l) dim(V~)).
struct ChainModel {
  /// The reduced driving representation V~.
  RepMultiset driving;
  std::int64_t driving_dim = 0;
  /// Row-stochastic, kernel[l][mu].
  std::vector<std::vector<double>> kernel;
  /// Plancherel measure, the stationary distribution.
  std::vector<double> stationary;

  std::size_t size() const { return kernel.size(); }
};

/// Throws InvalidArgument when V is zero.
ChainModel build_chain(const CharTable& table, const RepMultiset& v);

/// Point mass at `start` pushed through t kernel steps.
std::vector<double> t_step_distribution(const ChainModel& chain, IrrepId start, int t);
/// The same distribution read off the decomposition of l (x) V~^{(x) t}.
std::vector<double> direct_t_step_distribution(const CharTable& table, const RepMultiset& v, IrrepId start, int t);

/// max_mu |(pi P)(mu) - pi(mu)| for pi the Plancherel measure.
double stationarity_residual(const ChainModel& chain);

/// uniform: max |p/M - 1|; tv: max |p - M| (the pointwise display);
/// tv_l1: (1/2) sum |p - M|.
enum class Metric { uniform, tv, tv_l1 };
std::string metric_name(Metric m);
std::optional<Metric> metric_from_name(const std::string& name);

struct Distances {
  double uniform = 0.0;
  double tv = 0.0;
  double tv_l1 = 0.0;

  double get(Metric m) const;
};
Distances distances(const std::vector<double>& p, const std::vector<double>& stationary);

struct MixingReport {
  Metric metric = Metric::uniform;
  double epsilon = 0.0;
  int t_max = 0;
  IrrepId start = 0;
  /// Index t = 0..t_max. `worst` maximizes each distance over all starts.
  std::vector<Distances> from_start;
  std::vector<Distances> worst;
  /// First t with worst-case distance <= epsilon in the chosen metric.
  std::optional<int> mixing_time;
  std::optional<int> uniform_time;
  std::optional<int> tv_time;
  std::optional<int> tv_l1_time;
};
MixingReport mixing_time(const ChainModel& chain, Metric metric, double epsilon, int t_max = 64, IrrepId start = 0);

/// Seeded trajectory of irreps, for demonstration only.
std::vector<IrrepId> sample_trajectory(const ChainModel& chain, IrrepId start, int steps, std::uint64_t seed);

/// Terms of the three-step estimate for a start l, with f = reduced character of V off e
/// and h = reduced character of l off e:
///   |f^3 h|_1 <= M(l) |f^3|_1 <= M(l) |f|_2^2 |f|_inf <= M(l) c(G)^-1/2.
struct ThreeStepChain {
  double product_l1 = 0.0;
  double measure_times_cube = 0.0;
  double measure_times_holder = 0.0;
  double measure_times_class_bound = 0.0;
};
ThreeStepChain three_step_chain(const CharTable& table, const RepMultiset& v, IrrepId start);

struct CorollaryReport {
  double measure = 0.0;
  std::optional<std::size_t> min_class;
  double epsilon = 0.0;
  /// Worst-case uniform distance after three steps.
  double uniform_at_3 = 0.0;
  /// c(G)^-1/2 / M(V)^3
  double bound = 0.0;
  /// |f^3|_1 / M(V)^3, the sharper intermediate form of the bound.
  double sharp_bound = 0.0;
  bool bound_holds = false;
  bool within_epsilon = false;

  int m = 0;
  /// From the trivial start, index t = 0..m.
  std::vector<double> inaccessible_mass;
  std::vector<double> tv;
  std::vector<double> tv_l1;
  double power_measure = 0.0;
  bool tv_l1_dominates_inaccessible = false;
  bool tv_l1_at_least_quarter = false;
};
CorollaryReport corollary_mix_experiment(const CharTable& table, const RepMultiset& v, double epsilon, int m);

}  // namespace tqr
