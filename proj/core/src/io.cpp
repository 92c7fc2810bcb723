#include "tqr/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tqr/errors.hpp"

#ifndef TQR_VERSION
#define TQR_VERSION "0.0.0"
#endif

namespace tqr {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

long parse_integer(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("cannot read " + what + " from '" + s + "'");
  }
}

const char* param_key(Family f) { return (f == Family::affine || f == Family::extraspecial) ? "p" : "n"; }

json optional_time(const std::optional<int>& t) { return t ? json(*t) : json(nullptr); }

json labels_of(const GroupTable& group, const std::vector<Element>& members) {
  json out = json::array();
  for (auto x : members) out.push_back(group.label(x));
  return out;
}

}  // namespace

std::string version() { return TQR_VERSION; }

// ---------------------------------------------------------------------------
// Group specs

json group_spec_to_json(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cayley:
      return {{"type", "cayley"}, {"table", spec.table}};
    case GroupSpec::Kind::permutation:
      return {{"type", "permutation"}, {"degree", spec.degree}, {"generators", spec.generators}};
    case GroupSpec::Kind::family:
      break;
  }
  json params = json::object();
  if (spec.family == Family::direct) {
    if (spec.factors.size() != 2) throw InvalidGroup("direct product needs exactly two factors");
    params["left"] = group_spec_to_json(spec.factors[0]);
    params["right"] = group_spec_to_json(spec.factors[1]);
  } else if (spec.family != Family::quaternion8) {
    params[param_key(spec.family)] = spec.parameter;
  }
  return {{"family", family_name(spec.family)}, {"params", params}};
}

GroupSpec group_spec_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InvalidGroup("group spec must be a JSON object");
    if (j.contains("family")) {
      const auto name = j.at("family").get<std::string>();
      const auto family = family_from_name(name);
      if (!family) throw InvalidGroup("unknown family '" + name + "'");
      const json params = j.value("params", json::object());
      if (*family == Family::direct) {
        return GroupSpec::direct_product(group_spec_from_json(params.at("left")),
                                         group_spec_from_json(params.at("right")));
      }
      if (*family == Family::quaternion8) return GroupSpec::make_family(Family::quaternion8);
      const char* key = param_key(*family);
      if (!params.contains(key)) throw InvalidGroup(name + " needs parameter '" + key + "'");
      return GroupSpec::make_family(*family, params.at(key).get<long>());
    }
    const auto type = j.at("type").get<std::string>();
    if (type == "cayley") return GroupSpec::cayley(j.at("table").get<std::vector<std::vector<Element>>>());
    if (type == "permutation") {
      return GroupSpec::permutations(j.at("degree").get<std::size_t>(),
                                     j.at("generators").get<std::vector<std::vector<Element>>>());
    }
    throw InvalidGroup("unknown group spec type '" + type + "'");
  } catch (const json::exception& e) {
    throw InvalidGroup(std::string("malformed group spec: ") + e.what());
  }
}

GroupSpec parse_group_shorthand(std::string_view text) {
  const auto factors = split(text, '*');
  std::optional<GroupSpec> acc;
  for (const auto& f : factors) {
    auto parts = split(f, ':');
    if (!parts.empty() && parts[0] == "family") parts.erase(parts.begin());
    if (parts.empty() || parts[0].empty()) throw InvalidGroup("empty group shorthand in '" + std::string(text) + "'");
    const auto family = family_from_name(parts[0]);
    if (!family || *family == Family::direct) throw InvalidGroup("unknown family '" + parts[0] + "'");
    GroupSpec spec;
    if (*family == Family::quaternion8) {
      if (parts.size() > 2) throw InvalidGroup("quaternion8 takes no parameter");
      spec = GroupSpec::make_family(Family::quaternion8);
    } else {
      if (parts.size() != 2) throw InvalidGroup(parts[0] + " needs one parameter, e.g. " + parts[0] + ":5");
      long param = 0;
      try {
        param = parse_integer(parts[1], "family parameter");
      } catch (const InvalidArgument& e) {
        throw InvalidGroup(e.what());
      }
      spec = GroupSpec::make_family(*family, param);
    }
    acc = acc ? GroupSpec::direct_product(std::move(*acc), std::move(spec)) : std::move(spec);
  }
  return *acc;
}

GroupSpec parse_group_argument(const std::string& text) {
  const auto t = trim(text);
  if (!t.empty() && t.front() == '{') {
    try {
      return group_spec_from_json(json::parse(t));
    } catch (const json::parse_error& e) {
      throw InvalidGroup(std::string("malformed inline group spec: ") + e.what());
    }
  }
  if (std::filesystem::is_regular_file(t)) {
    std::ifstream in(t);
    try {
      const auto j = json::parse(in);
      return group_spec_from_json(j.contains("group") ? j.at("group") : j);
    } catch (const json::parse_error& e) {
      throw InvalidGroup("malformed group spec file '" + t + "': " + e.what());
    }
  }
  return parse_group_shorthand(t);
}

GroupSpec spec_of(const GroupTable& group) {
  if (group.spec()) return *group.spec();
  std::vector<std::vector<Element>> table(group.order());
  for (std::size_t a = 0; a < group.order(); ++a) {
    const auto row = group.row(static_cast<Element>(a));
    table[a].assign(row.begin(), row.end());
  }
  return GroupSpec::cayley(std::move(table));
}

// ---------------------------------------------------------------------------
// Character tables

json char_table_to_json(const CharTable& table) {
  const auto& cls = table.classes();
  json values = json::array();
  for (std::size_t l = 0; l < table.num_irreps(); ++l) {
    json row = json::array();
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
      const auto z = table.value(static_cast<IrrepId>(l), static_cast<ClassId>(c));
      row.push_back({z.real(), z.imag()});
    }
    values.push_back(std::move(row));
  }
  return {{"group", group_spec_to_json(spec_of(table.group()))},
          {"class_sizes", cls.sizes},
          {"class_reps", cls.representatives},
          {"dims", table.dims()},
          {"values", std::move(values)}};
}

CharTable char_table_from_json(const json& j, const Limits& limits) {
  try {
    auto group = std::make_shared<const GroupTable>(build_group(group_spec_from_json(j.at("group")), limits));
    auto classes = std::make_shared<const ClassData>(conjugacy_classes(*group));
    const auto sizes = j.at("class_sizes").get<std::vector<std::size_t>>();
    const auto reps = j.at("class_reps").get<std::vector<Element>>();
    const auto dims = j.at("dims").get<std::vector<int>>();
    const auto& raw = j.at("values");
    const std::size_t r = classes->num_classes();
    if (sizes.size() != r || reps.size() != r) {
      throw InvalidArgument("table lists " + std::to_string(reps.size()) + " classes, the group has " +
                            std::to_string(r));
    }
    std::vector<ClassId> column(r);
    std::vector<char> used(r, 0);
    for (std::size_t c = 0; c < r; ++c) {
      if (reps[c] >= group->order()) throw InvalidArgument("class representative out of range");
      const ClassId ours = classes->class_of[reps[c]];
      if (used[ours]) throw InvalidArgument("two columns name the same conjugacy class");
      if (classes->sizes[ours] != sizes[c]) throw InvalidArgument("class size does not match the group");
      used[ours] = 1;
      column[c] = ours;
    }
    if (!raw.is_array() || raw.size() != r) throw InvalidArgument("values must have one row per irrep");
    std::vector<std::vector<Complex>> values(r, std::vector<Complex>(r));
    for (std::size_t l = 0; l < r; ++l) {
      if (!raw[l].is_array() || raw[l].size() != r) throw InvalidArgument("values row has wrong length");
      for (std::size_t c = 0; c < r; ++c) {
        const auto& z = raw[l][c];
        if (!z.is_array() || z.size() != 2) throw InvalidArgument("character values are [re, im] pairs");
        values[l][column[c]] = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    return CharTable(std::move(group), std::move(classes), dims, std::move(values), limits);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed character table file: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Representations

json rep_to_json(const RepMultiset& v) { return {{"mult", v.mult()}}; }

RepMultiset rep_from_json(const json& j, std::size_t num_irreps) {
  try {
    auto mult = j.at("mult").get<std::vector<std::int64_t>>();
    if (mult.size() != num_irreps) {
      throw InvalidArgument("representation lists " + std::to_string(mult.size()) + " multiplicities, expected " +
                            std::to_string(num_irreps));
    }
    return RepMultiset(std::move(mult));
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed representation: ") + e.what());
  }
}

RepMultiset parse_rep_selector(const CharTable& table, std::string_view text) {
  const auto t = trim(text);
  if (!t.empty() && t.front() == '{') {
    try {
      return rep_from_json(json::parse(t), table.num_irreps());
    } catch (const json::parse_error& e) {
      throw InvalidArgument(std::string("malformed representation: ") + e.what());
    }
  }
  std::vector<std::int64_t> total(table.num_irreps(), 0);
  for (const auto& term : split(t, '+')) {
    RepMultiset v;
    if (term == "all") {
      v = all_irreps(table);
    } else if (term == "trivial") {
      v = trivial_rep(table);
    } else if (term == "regular") {
      v = regular_rep(table);
    } else if (term.rfind("irrep:", 0) == 0) {
      const long k = parse_integer(term.substr(6), "irrep index");
      if (k < 0) throw InvalidArgument("irrep index must be non-negative");
      v = single_irrep(table, static_cast<IrrepId>(k));
    } else if (term.rfind("dim>=", 0) == 0) {
      v = irreps_of_dim_at_least(table, static_cast<int>(parse_integer(term.substr(5), "dimension")));
    } else {
      throw InvalidArgument("unknown representation selector '" + term + "'");
    }
    for (std::size_t l = 0; l < total.size(); ++l) total[l] += v[static_cast<IrrepId>(l)];
  }
  return RepMultiset(std::move(total));
}

// ---------------------------------------------------------------------------
// Reports

json to_json(const CriterionReport& r) {
  json j = {{"criterion", r.id}, {"parameters", r.parameters}, {"verdict", verdict_name(r.verdict)},
            {"mode", r.mode}, {"witness", r.witness}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json to_json(const CoverResult& r) {
  return {{"guaranteed", r.guaranteed},
          {"covered", r.actual_cover},
          {"measures", r.measures},
          {"condition_value", r.condition_value},
          {"condition_threshold", r.condition_threshold},
          {"product_support", r.product.support()},
          {"missing", r.missing}};
}

json to_json(const HolderChain& r) {
  return {{"product_l1", r.product_l1}, {"holder", r.holder}, {"class_bound", r.class_bound}};
}

json to_json(const MultiplicityProfile& r) {
  return {{"multiplicities", r.multiplicities},
          {"deviation", r.deviation},
          {"max_deviation", r.max_deviation},
          {"deviation_bound", r.deviation_bound}};
}

json to_json(const ChainModel& r) {
  return {{"driving", r.driving.mult()},
          {"driving_dim", r.driving_dim},
          {"kernel", r.kernel},
          {"stationary", r.stationary}};
}

json to_json(const Distances& r) { return {{"uniform", r.uniform}, {"tv", r.tv}, {"tv_l1", r.tv_l1}}; }

json to_json(const MixingReport& r) {
  json from = json::array();
  json worst = json::array();
  for (const auto& d : r.from_start) from.push_back(to_json(d));
  for (const auto& d : r.worst) worst.push_back(to_json(d));
  return {{"metric", metric_name(r.metric)},
          {"epsilon", r.epsilon},
          {"t_max", r.t_max},
          {"start", r.start},
          {"mixing_time", optional_time(r.mixing_time)},
          {"mixing_times",
           {{"uniform", optional_time(r.uniform_time)},
            {"tv", optional_time(r.tv_time)},
            {"tv_l1", optional_time(r.tv_l1_time)}}},
          {"from_start", std::move(from)},
          {"worst_case", std::move(worst)}};
}

json to_json(const CorollaryReport& r) {
  return {{"measure", r.measure},
          {"min_class", r.min_class ? json(*r.min_class) : json(nullptr)},
          {"epsilon", r.epsilon},
          {"positive",
           {{"uniform_at_3", r.uniform_at_3},
            {"bound", r.bound},
            {"sharp_bound", r.sharp_bound},
            {"bound_holds", r.bound_holds},
            {"within_epsilon", r.within_epsilon}}},
          {"negative",
           {{"m", r.m},
            {"inaccessible_mass", r.inaccessible_mass},
            {"tv", r.tv},
            {"tv_l1", r.tv_l1},
            {"power_measure", r.power_measure},
            {"tv_l1_dominates_inaccessible", r.tv_l1_dominates_inaccessible},
            {"tv_l1_at_least_quarter", r.tv_l1_at_least_quarter}}}};
}

json to_json(const SmallDoublingResult& r) {
  json trace = json::array();
  for (const auto& s : r.trace) {
    trace.push_back({{"size", s.set_size},
                     {"sumset_size", s.sumset_size},
                     {"growth_bound", s.growth_bound},
                     {"growth_holds", s.growth_holds},
                     {"generator", s.generator}});
  }
  return {{"set", r.set},
          {"epsilon", r.epsilon},
          {"acting_order", r.acting_order},
          {"m", r.m},
          {"small_group_branch", r.small_group_branch},
          {"sumset_size", r.sumset_size},
          {"half_bound_holds", r.half_bound_holds},
          {"invariant", r.invariant},
          {"growth_always_held", r.growth_always_held},
          {"trace", std::move(trace)}};
}

json to_json(const CounterexampleReport& r) {
  return {{"v", rep_to_json(r.v)},
          {"center_factors", r.center_factors},
          {"center_order", r.center_order},
          {"acting_order", r.acting_order},
          {"m", r.m},
          {"characters", r.characters},
          {"measure", r.measure},
          {"expected_measure", r.expected_measure},
          {"measure_matches", r.measure_matches},
          {"power_measure", r.power_measure},
          {"power_within_half", r.power_within_half},
          {"power_support_in_sumset", r.power_support_in_sumset},
          {"doubling", to_json(r.doubling)}};
}

json to_json(const PartitionBlock& r) {
  return {{"characters", r.characters}, {"support", r.support}, {"measure", r.measure}, {"expected", r.expected}};
}

json to_json(const VThetaPartitionReport& r) {
  json blocks = json::array();
  for (const auto& b : r.blocks) blocks.push_back(to_json(b));
  return {{"center_order", r.center_order}, {"blocks", std::move(blocks)}, {"partition", r.partition},
          {"measures_match", r.measures_match}, {"reduced", r.reduced},  {"regular_sum", r.regular_sum},
          {"ok", r.ok()}};
}

json to_json(const OrbitPartitionReport& r) {
  json blocks = json::array();
  for (const auto& b : r.blocks) blocks.push_back(to_json(b));
  return {{"center_order", r.center_order},
          {"acting_order", r.acting_order},
          {"blocks", std::move(blocks)},
          {"partition", r.partition},
          {"measures_match", r.measures_match},
          {"coset_formula_matches", r.coset_formula_matches},
          {"coset_formula_residual", r.coset_formula_residual},
          {"orthogonality_matches", r.orthogonality_matches},
          {"ok", r.ok()}};
}

json to_json(const TranslateCover<LatticePoint>& r) {
  return {{"k", r.k}, {"count", r.count()}, {"bound", r.bound}, {"verified", r.verified},
          {"translates", r.translates}};
}

json to_json(const TranslateCover<Element>& r) {
  return {{"k", r.k}, {"count", r.count()}, {"bound", r.bound}, {"verified", r.verified},
          {"translates", r.translates}};
}

json group_summary(const GroupTable& group, const ClassData& classes) {
  json cls = json::array();
  for (std::size_t c = 0; c < classes.num_classes(); ++c) {
    cls.push_back({{"size", classes.sizes[c]}, {"representative", group.label(classes.representatives[c])}});
  }
  const auto z = center(group, classes);
  return {{"descriptor", group.descriptor()},
          {"spec", group_spec_to_json(spec_of(group))},
          {"order", group.order()},
          {"abelian", group.is_abelian()},
          {"num_classes", classes.num_classes()},
          {"class_sizes", classes.sizes},
          {"classes", std::move(cls)},
          {"min_nontrivial_class", classes.min_nontrivial_size ? json(*classes.min_nontrivial_size) : json(nullptr)},
          {"center", labels_of(group, z.members)}};
}

std::string mixing_csv(const MixingReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "t,uniform,tv,tv_l1,start_uniform,start_tv,start_tv_l1\n";
  for (std::size_t t = 0; t < r.worst.size(); ++t) {
    const auto& w = r.worst[t];
    const auto& s = r.from_start[t];
    out << t << ',' << w.uniform << ',' << w.tv << ',' << w.tv_l1 << ',' << s.uniform << ',' << s.tv << ','
        << s.tv_l1 << '\n';
  }
  return out.str();
}

}  // namespace tqr
