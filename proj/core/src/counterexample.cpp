#include "tqr/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "tqr/errors.hpp"

namespace tqr {

namespace {

constexpr Element kNone = static_cast<Element>(-1);

double cover_bound(std::size_t k, int m) {
  if (k == 0) return 1.0;
  return std::pow(10.0 * static_cast<double>(k) * m, static_cast<double>(k));
}

void require_positive(int n, int m) {
  if (n < 1 || m < 1) throw InvalidArgument("translate cover needs n, m >= 1");
}

// Grid points t in (jZ)^k with t_i >= 0 and sum t_i <= limit.
std::vector<std::vector<std::int64_t>> grid_points(std::size_t k, std::int64_t step, std::int64_t limit) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> t(k, 0);
  std::int64_t sum = 0;
  while (true) {
    out.push_back(t);
    std::size_t i = 0;
    while (i < k) {
      if (sum + step <= limit) {
        t[i] += step;
        sum += step;
        break;
      }
      sum -= t[i];
      t[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  return out;
}

LatticePoint add_points(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<Complex> zero_outside(std::size_t order) { return std::vector<Complex>(order, 0.0); }

}  // namespace

// ---------------------------------------------------------------------------
// Translate covers

std::vector<LatticePoint> lattice_sumset(const std::vector<LatticePoint>& b, int n) {
  if (b.empty()) throw InvalidArgument("sumset of the empty set");
  if (n < 1) throw InvalidArgument("sumset order must be at least 1");
  std::set<LatticePoint> base(b.begin(), b.end());
  std::set<LatticePoint> cur = base;
  for (int i = 1; i < n; ++i) {
    std::set<LatticePoint> next;
    for (const auto& x : cur) {
      for (const auto& y : base) next.insert(add_points(x, y));
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

TranslateCover<LatticePoint> translate_cover(const std::vector<LatticePoint>& b, int n, int m) {
  if (b.empty()) throw InvalidArgument("translate cover of the empty set");
  require_positive(n, m);
  const std::size_t dim = b.front().size();
  for (const auto& p : b) {
    if (p.size() != dim) throw InvalidArgument("lattice points of different dimensions");
  }
  std::vector<LatticePoint> pts(b.begin(), b.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const LatticePoint origin(dim, 0);
  LatticePoint b0 = std::binary_search(pts.begin(), pts.end(), origin) ? origin : pts.front();
  std::vector<LatticePoint> dirs;
  for (const auto& p : pts) {
    if (p == b0) continue;
    LatticePoint d(dim);
    for (std::size_t i = 0; i < dim; ++i) d[i] = p[i] - b0[i];
    dirs.push_back(std::move(d));
  }

  TranslateCover<LatticePoint> out;
  out.k = dirs.size();
  out.bound = cover_bound(out.k, m);
  const std::int64_t mn = static_cast<std::int64_t>(m) * n;
  std::set<LatticePoint> translates;
  if (m == 1 || out.k == 0) {
    LatticePoint t(dim);
    for (std::size_t i = 0; i < dim; ++i) t[i] = (mn - n) * b0[i];
    translates.insert(std::move(t));
  } else {
    const auto step = 1 + static_cast<std::int64_t>(n) / static_cast<std::int64_t>(out.k);
    for (const auto& t : grid_points(out.k, step, mn)) {
      LatticePoint x(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        x[i] = (mn - n) * b0[i];
        for (std::size_t j = 0; j < out.k; ++j) x[i] += t[j] * dirs[j][i];
      }
      translates.insert(std::move(x));
    }
  }
  out.translates.assign(translates.begin(), translates.end());

  const auto big = lattice_sumset(pts, static_cast<int>(mn));
  const auto small = lattice_sumset(pts, n);
  const std::set<LatticePoint> small_set(small.begin(), small.end());
  out.verified = std::all_of(big.begin(), big.end(), [&](const LatticePoint& x) {
    return std::any_of(out.translates.begin(), out.translates.end(), [&](const LatticePoint& t) {
      LatticePoint d(dim);
      for (std::size_t i = 0; i < dim; ++i) d[i] = x[i] - t[i];
      return small_set.count(d) > 0;
    });
  });
  return out;
}

TranslateCover<Element> translate_cover(const AbelianGroup& group, const std::vector<Element>& b, int n, int m) {
  if (b.empty()) throw InvalidArgument("translate cover of the empty set");
  require_positive(n, m);
  std::vector<Element> pts(b.begin(), b.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  for (auto x : pts) {
    if (x >= group.order()) throw InvalidArgument("element out of range");
  }
  const Element b0 = pts.front();  // 0 is the least element when present
  std::vector<Element> dirs;
  for (auto p : pts) {
    if (p != b0) dirs.push_back(group.add(p, group.neg(b0)));
  }

  TranslateCover<Element> out;
  out.k = dirs.size();
  out.bound = cover_bound(out.k, m);
  const std::int64_t mn = static_cast<std::int64_t>(m) * n;
  const Element shift = group.multiple(b0, mn - n);
  std::vector<char> seen(group.order(), 0);
  if (m == 1 || out.k == 0) {
    seen[shift] = 1;
  } else {
    const auto step = 1 + static_cast<std::int64_t>(n) / static_cast<std::int64_t>(out.k);
    for (const auto& t : grid_points(out.k, step, mn)) {
      Element x = shift;
      for (std::size_t j = 0; j < out.k; ++j) x = group.add(x, group.multiple(dirs[j], t[j]));
      seen[x] = 1;
    }
  }
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (seen[x]) out.translates.push_back(static_cast<Element>(x));
  }

  const auto big = m_fold_sumset(group, pts, static_cast<int>(mn));
  const auto small = m_fold_sumset(group, pts, n);
  std::vector<char> covered(group.order(), 0);
  for (auto t : out.translates) {
    for (auto s : small) covered[group.add(t, s)] = 1;
  }
  out.verified = std::all_of(big.begin(), big.end(), [&](Element x) { return covered[x] != 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Small doubling

double default_doubling_epsilon(std::size_t k, int m) {
  return 0.5 / std::pow(10.0 * static_cast<double>(k) * m, static_cast<double>(k + 1));
}

SmallDoublingResult invariant_small_doubling_set(const AbelianGroup& group, const AutAction& action, int m,
                                                 std::optional<double> epsilon) {
  if (m < 1) throw InvalidArgument("m must be at least 1");
  if (group.order() < 2) throw InvalidArgument("the abelian group must be non-trivial");
  SmallDoublingResult out;
  out.m = m;
  out.acting_order = action.size();
  out.epsilon = epsilon.value_or(default_doubling_epsilon(action.size(), m));
  if (!(out.epsilon > 0.0) || out.epsilon > 1.0) throw InvalidArgument("epsilon must lie in (0, 1]");
  const double growth = std::pow(10.0 * static_cast<double>(action.size()) * m, static_cast<double>(action.size()));
  const double target = out.epsilon * static_cast<double>(group.order());

  std::vector<char> in(group.order(), 0);
  std::vector<Element> a_set{group.zero()};
  in[group.zero()] = 1;
  Element a = kNone;
  out.growth_always_held = true;
  auto record = [&](Element gen) {
    DoublingStep step;
    step.set_size = a_set.size();
    step.sumset_size = m_fold_sumset(group, a_set, m).size();
    step.growth_bound = growth * static_cast<double>(a_set.size());
    step.growth_holds = static_cast<double>(step.sumset_size) <= step.growth_bound;
    step.generator = gen;
    out.growth_always_held = out.growth_always_held && step.growth_holds;
    out.trace.push_back(step);
  };
  record(group.zero());
  out.small_group_branch = static_cast<double>(a_set.size()) >= target;

  while (static_cast<double>(a_set.size()) < target) {
    bool grew = false;
    if (a != kNone) {
      const auto orbit = action.orbit(a);
      std::vector<Element> added;
      for (auto x : a_set) {
        for (auto y : orbit) {
          const Element z = group.add(x, y);
          if (!in[z]) {
            in[z] = 1;
            added.push_back(z);
          }
        }
      }
      if (!added.empty()) {
        a_set.insert(a_set.end(), added.begin(), added.end());
        std::sort(a_set.begin(), a_set.end());
        grew = true;
      }
    }
    if (!grew) {
      a = kNone;
      for (std::size_t x = 0; x < group.order(); ++x) {
        if (!in[x]) {
          a = static_cast<Element>(x);
          break;
        }
      }
      if (a == kNone) break;
      continue;
    }
    record(a);
  }

  out.set = a_set;
  out.sumset_size = m_fold_sumset(group, a_set, m).size();
  out.half_bound_holds = 2 * out.sumset_size <= group.order();
  out.invariant = action.is_invariant(a_set);
  return out;
}

// ---------------------------------------------------------------------------
// Central data and the induced characters

CentralData central_data(const GroupTable& group, const ClassData& classes, const Subgroup& n) {
  if (!n.is_normal) throw InvalidArgument("N is not normal");
  auto k = center_of_subgroup(group, classes, n);
  if (k.size() < 2) throw InvalidArgument("Z(N) is trivial");
  auto decomposition = decompose_abelian(group, k);
  DualGroup dual(decomposition.group);

  const auto cosets = coset_map(group, n);
  std::vector<Element> reps;
  std::vector<char> seen(group.order() / n.size(), 0);
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (!seen[cosets[g]]) {
      seen[cosets[g]] = 1;
      reps.push_back(static_cast<Element>(g));
    }
  }
  std::vector<std::vector<Element>> maps;
  const std::size_t order_k = decomposition.group.order();
  for (auto g : reps) {
    std::vector<Element> sigma(order_k);
    for (std::size_t x = 0; x < order_k; ++x) {
      sigma[x] = decomposition.from_ambient[group.conjugate(g, decomposition.to_ambient[x])];
    }
    maps.push_back(std::move(sigma));
  }
  AutAction action(decomposition.group, maps);
  auto dual_action = dual.dual_action(action);
  return {n, std::move(k), std::move(decomposition), std::move(dual), std::move(reps), std::move(action),
          std::move(dual_action)};
}

std::vector<Complex> theta_on_group(const CentralData& data, std::size_t group_order, Element theta) {
  auto out = zero_outside(group_order);
  for (auto x : data.k.members) out[x] = data.dual.evaluate(theta, data.decomposition.from_ambient[x]);
  return out;
}

ClassFunction coset_formula_character(const CentralData& data, const GroupTable& group,
                                      std::shared_ptr<const ClassData> classes, Element theta) {
  std::vector<Complex> values(classes->num_classes(), 0.0);
  const double scale = static_cast<double>(data.n.size()) / static_cast<double>(data.k.size());
  for (std::size_t c = 0; c < values.size(); ++c) {
    const Element x = classes->representatives[c];
    if (!data.k.contains(x)) continue;
    Complex s = 0.0;
    for (auto g : data.coset_reps) {
      const Element y = group.conjugate(group.inv(g), x);
      s += data.dual.evaluate(theta, data.decomposition.from_ambient[y]);
    }
    values[c] = scale * s;
  }
  return {std::move(classes), std::move(values)};
}

CounterexampleReport build_counterexample_rep(const CharTable& table, const Subgroup& n, int m,
                                              std::optional<double> epsilon) {
  const auto& group = table.group();
  const auto data = central_data(group, table.classes(), n);
  const auto& kstar = data.dual.characters();

  CounterexampleReport rep;
  rep.m = m;
  rep.center_factors = kstar.factors();
  rep.center_order = kstar.order();
  rep.acting_order = data.dual_action.size();
  rep.doubling = invariant_small_doubling_set(kstar, data.dual_action, m, epsilon);

  auto chi = ClassFunction::zero(table.classes_ptr());
  for (auto theta : rep.doubling.set) {
    rep.characters.push_back(kstar.coordinates(theta));
    const auto values = theta_on_group(data, group.order(), theta);
    chi = direct_sum(chi, induce_character(table, data.k, values));
  }
  rep.v = decompose(table, chi);
  rep.measure = plancherel(table, rep.v);
  rep.expected_measure = static_cast<double>(rep.doubling.set.size()) / static_cast<double>(rep.center_order);
  rep.measure_matches = std::abs(rep.measure - rep.expected_measure) <= table.tolerance();

  const auto power = tensor_power_support(table, rep.v, m);
  rep.power_measure = plancherel(table, power);
  rep.power_within_half = rep.power_measure <= 0.5 + table.tolerance();

  std::vector<bool> allowed(table.num_irreps(), false);
  for (auto theta : m_fold_sumset(kstar, rep.doubling.set, m)) {
    const auto values = theta_on_group(data, group.order(), theta);
    const auto w = decompose(table, induce_character(table, data.k, values));
    for (auto l : w.support()) allowed[l] = true;
  }
  rep.power_support_in_sumset = true;
  for (auto l : power.support()) rep.power_support_in_sumset = rep.power_support_in_sumset && allowed[l];
  return rep;
}

RepMultiset quotient_pullback_regular(const CharTable& table, const Subgroup& n) {
  if (!n.is_normal) throw InvalidArgument("N is not normal");
  std::vector<Complex> ones(table.group_order(), 0.0);
  for (auto x : n.members) ones[x] = 1.0;
  return decompose(table, induce_character(table, n, ones));
}

// ---------------------------------------------------------------------------
// Partitions

namespace {

bool blocks_partition(const std::vector<PartitionBlock>& blocks, std::size_t num_irreps) {
  std::vector<int> hits(num_irreps, 0);
  for (const auto& b : blocks) {
    for (auto l : b.support) ++hits[l];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace

VThetaPartitionReport verify_vtheta_partition(const CharTable& table, const Subgroup& k) {
  const auto& group = table.group();
  for (auto x : k.members) {
    for (std::size_t g = 0; g < group.order(); ++g) {
      if (group.mul(x, static_cast<Element>(g)) != group.mul(static_cast<Element>(g), x)) {
        throw InvalidArgument("K is not central");
      }
    }
  }
  const auto dec = decompose_abelian(group, k);
  const DualGroup dual(dec.group);
  VThetaPartitionReport rep;
  rep.center_order = dec.group.order();
  rep.measures_match = true;
  rep.reduced = true;
  std::vector<std::int64_t> total(table.num_irreps(), 0);
  for (std::size_t theta = 0; theta < dec.group.order(); ++theta) {
    auto values = zero_outside(group.order());
    for (auto x : k.members) values[x] = dual.evaluate(static_cast<Element>(theta), dec.from_ambient[x]);
    const auto v = decompose(table, induce_character(table, k, values));
    PartitionBlock block;
    block.characters = {static_cast<Element>(theta)};
    block.support = v.support();
    block.measure = plancherel(table, v);
    block.expected = 1.0 / static_cast<double>(rep.center_order);
    rep.measures_match = rep.measures_match && std::abs(block.measure - block.expected) <= table.tolerance();
    for (auto l : block.support) {
      rep.reduced = rep.reduced && v[l] == table.dim(l);
      total[l] += v[l];
    }
    rep.blocks.push_back(std::move(block));
  }
  rep.partition = blocks_partition(rep.blocks, table.num_irreps());
  rep.regular_sum = total == regular_rep(table).mult();
  return rep;
}

OrbitPartitionReport verify_orbit_partition(const CharTable& table, const Subgroup& n) {
  const auto& group = table.group();
  const auto data = central_data(group, table.classes(), n);
  const auto& kstar = data.dual.characters();
  OrbitPartitionReport rep;
  rep.center_order = kstar.order();
  rep.acting_order = data.dual_action.size();

  std::vector<ClassFunction> induced;
  induced.reserve(kstar.order());
  for (std::size_t theta = 0; theta < kstar.order(); ++theta) {
    const auto values = theta_on_group(data, group.order(), static_cast<Element>(theta));
    induced.push_back(induce_character(table, data.k, values));
    const auto formula = coset_formula_character(data, group, table.classes_ptr(), static_cast<Element>(theta));
    for (std::size_t c = 0; c < formula.size(); ++c) {
      rep.coset_formula_residual =
          std::max(rep.coset_formula_residual,
                   std::abs(formula[static_cast<ClassId>(c)] - induced.back()[static_cast<ClassId>(c)]));
    }
  }
  rep.coset_formula_matches = rep.coset_formula_residual <= table.tolerance() * static_cast<double>(group.order());

  const auto orbits = data.dual_action.orbits();
  std::vector<std::size_t> orbit_of(kstar.order());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (auto theta : orbits[i]) orbit_of[theta] = i;
  }
  rep.measures_match = true;
  for (const auto& orbit : orbits) {
    const auto v = decompose(table, induced[orbit.front()]);
    PartitionBlock block;
    block.characters = orbit;
    block.support = v.support();
    block.measure = plancherel(table, v);
    block.expected = static_cast<double>(orbit.size()) / static_cast<double>(rep.center_order);
    rep.measures_match = rep.measures_match && std::abs(block.measure - block.expected) <= table.tolerance();
    rep.blocks.push_back(std::move(block));
  }
  rep.partition = blocks_partition(rep.blocks, table.num_irreps());

  rep.orthogonality_matches = true;
  const double tol = table.tolerance() * static_cast<double>(group.order());
  for (std::size_t a = 0; a < kstar.order() && rep.orthogonality_matches; ++a) {
    for (std::size_t b = a + 1; b < kstar.order(); ++b) {
      const bool orthogonal = std::abs(inner_product(induced[a], induced[b])) <= tol;
      if (orthogonal != (orbit_of[a] != orbit_of[b])) {
        rep.orthogonality_matches = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace tqr
