#include "tqr/markov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <Eigen/Dense>

#include "tqr/errors.hpp"

namespace tqr {

namespace {

Eigen::MatrixXd to_matrix(const ChainModel& chain) {
  const auto r = static_cast<Eigen::Index>(chain.size());
  Eigen::MatrixXd p(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < r; ++j) p(i, j) = chain.kernel[i][j];
  }
  return p;
}

std::vector<double> row_of(const Eigen::MatrixXd& m, Eigen::Index i) {
  std::vector<double> out(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index j = 0; j < m.cols(); ++j) out[j] = m(i, j);
  return out;
}

void require_start(const ChainModel& chain, IrrepId start) {
  if (start >= chain.size()) throw InvalidArgument("start irrep " + std::to_string(start) + " out of range");
}

}  // namespace

ChainModel build_chain(const CharTable& table, const RepMultiset& v) {
  if (v.size() != table.num_irreps()) throw InvalidArgument("representation does not match the table");
  if (v.is_zero()) throw InvalidArgument("the driving representation is zero");
  ChainModel chain;
  chain.driving = reduce(table, v);
  for (std::size_t l = 0; l < v.size(); ++l) {
    chain.driving_dim += chain.driving[static_cast<IrrepId>(l)] * table.dim(static_cast<IrrepId>(l));
  }
  chain.stationary = plancherel_measure(table);
  const auto chi_v = character_of(table, chain.driving);
  const std::size_t r = table.num_irreps();
  chain.kernel.assign(r, std::vector<double>(r, 0.0));
  for (std::size_t l = 0; l < r; ++l) {
    const auto mult = decompose(table, tensor(table.character(static_cast<IrrepId>(l)), chi_v));
    const double denom = static_cast<double>(table.dim(static_cast<IrrepId>(l))) * chain.driving_dim;
    for (std::size_t mu = 0; mu < r; ++mu) {
      chain.kernel[l][mu] =
          static_cast<double>(mult[static_cast<IrrepId>(mu)]) * table.dim(static_cast<IrrepId>(mu)) / denom;
    }
  }
  return chain;
}

std::vector<double> t_step_distribution(const ChainModel& chain, IrrepId start, int t) {
  require_start(chain, start);
  if (t < 0) throw InvalidArgument("step count must be non-negative");
  std::vector<double> p(chain.size(), 0.0);
  p[start] = 1.0;
  for (int s = 0; s < t; ++s) {
    std::vector<double> next(chain.size(), 0.0);
    for (std::size_t l = 0; l < chain.size(); ++l) {
      if (p[l] == 0.0) continue;
      for (std::size_t mu = 0; mu < chain.size(); ++mu) next[mu] += p[l] * chain.kernel[l][mu];
    }
    p = std::move(next);
  }
  return p;
}

std::vector<double> direct_t_step_distribution(const CharTable& table, const RepMultiset& v, IrrepId start, int t) {
  if (start >= table.num_irreps()) throw InvalidArgument("start irrep out of range");
  if (t < 0) throw InvalidArgument("step count must be non-negative");
  const auto reduced = reduce(table, v);
  auto f = table.character(start);
  const auto chi_v = character_of(table, reduced);
  for (int s = 0; s < t; ++s) f = tensor(f, chi_v);
  const auto mult = decompose(table, f);
  std::vector<double> p(table.num_irreps());
  double total = 0.0;
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    p[mu] = static_cast<double>(mult[static_cast<IrrepId>(mu)]) * table.dim(static_cast<IrrepId>(mu));
    total += p[mu];
  }
  for (auto& x : p) x /= total;
  return p;
}

double stationarity_residual(const ChainModel& chain) {
  double worst = 0.0;
  for (std::size_t mu = 0; mu < chain.size(); ++mu) {
    double s = 0.0;
    for (std::size_t l = 0; l < chain.size(); ++l) s += chain.stationary[l] * chain.kernel[l][mu];
    worst = std::max(worst, std::abs(s - chain.stationary[mu]));
  }
  return worst;
}

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::uniform: return "uniform";
    case Metric::tv: return "tv";
    case Metric::tv_l1: return "tv_l1";
  }
  return "uniform";
}

std::optional<Metric> metric_from_name(const std::string& name) {
  if (name == "uniform") return Metric::uniform;
  if (name == "tv") return Metric::tv;
  if (name == "tv_l1") return Metric::tv_l1;
  return std::nullopt;
}

double Distances::get(Metric m) const {
  switch (m) {
    case Metric::uniform: return uniform;
    case Metric::tv: return tv;
    case Metric::tv_l1: return tv_l1;
  }
  return uniform;
}

Distances distances(const std::vector<double>& p, const std::vector<double>& stationary) {
  Distances d;
  for (std::size_t mu = 0; mu < p.size(); ++mu) {
    const double diff = std::abs(p[mu] - stationary[mu]);
    d.uniform = std::max(d.uniform, diff / stationary[mu]);
    d.tv = std::max(d.tv, diff);
    d.tv_l1 += 0.5 * diff;
  }
  return d;
}

MixingReport mixing_time(const ChainModel& chain, Metric metric, double epsilon, int t_max, IrrepId start) {
  require_start(chain, start);
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive");
  if (t_max < 0) throw InvalidArgument("t_max must be non-negative");
  MixingReport rep;
  rep.metric = metric;
  rep.epsilon = epsilon;
  rep.t_max = t_max;
  rep.start = start;
  const Eigen::MatrixXd p = to_matrix(chain);
  const auto r = static_cast<Eigen::Index>(chain.size());
  Eigen::MatrixXd pt = Eigen::MatrixXd::Identity(r, r);
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) pt = pt * p;
    Distances worst;
    for (Eigen::Index l = 0; l < r; ++l) {
      const auto d = distances(row_of(pt, l), chain.stationary);
      worst.uniform = std::max(worst.uniform, d.uniform);
      worst.tv = std::max(worst.tv, d.tv);
      worst.tv_l1 = std::max(worst.tv_l1, d.tv_l1);
      if (l == static_cast<Eigen::Index>(start)) rep.from_start.push_back(d);
    }
    rep.worst.push_back(worst);
    if (!rep.uniform_time && worst.uniform <= epsilon) rep.uniform_time = t;
    if (!rep.tv_time && worst.tv <= epsilon) rep.tv_time = t;
    if (!rep.tv_l1_time && worst.tv_l1 <= epsilon) rep.tv_l1_time = t;
  }
  switch (metric) {
    case Metric::uniform: rep.mixing_time = rep.uniform_time; break;
    case Metric::tv: rep.mixing_time = rep.tv_time; break;
    case Metric::tv_l1: rep.mixing_time = rep.tv_l1_time; break;
  }
  return rep;
}

std::vector<IrrepId> sample_trajectory(const ChainModel& chain, IrrepId start, int steps, std::uint64_t seed) {
  require_start(chain, start);
  std::mt19937_64 rng(seed);
  std::vector<IrrepId> path{start};
  IrrepId cur = start;
  for (int s = 0; s < steps; ++s) {
    std::discrete_distribution<std::size_t> step(chain.kernel[cur].begin(), chain.kernel[cur].end());
    cur = static_cast<IrrepId>(step(rng));
    path.push_back(cur);
  }
  return path;
}

ThreeStepChain three_step_chain(const CharTable& table, const RepMultiset& v, IrrepId start) {
  const auto f = split_off_identity(reduced_character(table, v)).second;
  const auto h = split_off_identity(reduced_character(table, single_irrep(table, start))).second;
  const double m_l = plancherel_measure(table)[start];
  const auto cube = tensor(tensor(f, f), f);
  ThreeStepChain out;
  out.product_l1 = lp_norm(tensor(cube, h), Norm::l1);
  out.measure_times_cube = m_l * lp_norm(cube, Norm::l1);
  const double l2 = lp_norm(f, Norm::l2);
  out.measure_times_holder = m_l * l2 * l2 * lp_norm(f, Norm::linf);
  out.measure_times_class_bound = m_l / std::sqrt(static_cast<double>(table.min_nontrivial_class_size()));
  return out;
}

CorollaryReport corollary_mix_experiment(const CharTable& table, const RepMultiset& v, double epsilon, int m) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  CorollaryReport rep;
  rep.measure = plancherel(table, v);
  rep.min_class = table.classes().min_nontrivial_size;
  rep.epsilon = epsilon;
  rep.m = m;
  const auto chain = build_chain(table, v);
  const auto mix = mixing_time(chain, Metric::uniform, epsilon, std::max(3, m));
  rep.uniform_at_3 = mix.worst[3].uniform;
  const double cube = rep.measure * rep.measure * rep.measure;
  if (rep.min_class) {
    rep.bound = 1.0 / (std::sqrt(static_cast<double>(*rep.min_class)) * cube);
    const auto f = split_off_identity(reduced_character(table, v)).second;
    rep.sharp_bound = lp_norm(tensor(tensor(f, f), f), Norm::l1) / cube;
  } else {
    rep.bound = 0.0;
    rep.sharp_bound = 0.0;
  }
  rep.bound_holds = rep.uniform_at_3 <= rep.bound + table.tolerance();
  rep.within_epsilon = rep.uniform_at_3 <= epsilon;

  rep.tv_l1_dominates_inaccessible = true;
  // Trivial start, one step at a time; unreachable irreps stay exactly zero.
  std::vector<double> dist(chain.size(), 0.0);
  dist[0] = 1.0;
  for (int t = 0; t <= m; ++t) {
    if (t > 0) {
      std::vector<double> next(chain.size(), 0.0);
      for (std::size_t l = 0; l < chain.size(); ++l) {
        if (dist[l] == 0.0) continue;
        for (std::size_t mu = 0; mu < chain.size(); ++mu) next[mu] += dist[l] * chain.kernel[l][mu];
      }
      dist = std::move(next);
    }
    double hidden = 0.0;
    for (std::size_t mu = 0; mu < chain.size(); ++mu) {
      if (dist[mu] == 0.0) hidden += chain.stationary[mu];
    }
    const auto d = distances(dist, chain.stationary);
    rep.inaccessible_mass.push_back(hidden);
    rep.tv.push_back(d.tv);
    rep.tv_l1.push_back(d.tv_l1);
    if (d.tv_l1 < hidden - table.tolerance()) rep.tv_l1_dominates_inaccessible = false;
  }
  rep.power_measure = plancherel(table, tensor_power_support(table, v, m));
  rep.tv_l1_at_least_quarter = rep.tv_l1.back() >= 0.25;
  return rep;
}

}  // namespace tqr
