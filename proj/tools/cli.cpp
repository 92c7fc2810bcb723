#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "tqr/abelian.hpp"
#include "tqr/char_table.hpp"
#include "tqr/class_functions.hpp"
#include "tqr/counterexample.hpp"
#include "tqr/criteria.hpp"
#include "tqr/errors.hpp"
#include "tqr/group.hpp"
#include "tqr/io.hpp"
#include "tqr/markov.hpp"

namespace tqr::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Limits limits_from_env() {
  Limits limits;
  if (const char* cap = std::getenv("TQR_ORDER_CAP")) {
    try {
      const auto v = static_cast<std::size_t>(std::stoull(cap));
      limits.max_order = v;
      limits.normal_subgroup_cap = v;
      limits.char_table_cap = v;
    } catch (const std::exception&) {
      throw UsageError(std::string("TQR_ORDER_CAP is not a number: ") + cap);
    }
  }
  return limits;
}

void write_atomic(const std::string& path, const std::string& text) {
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + path);
    f << text;
  }
  fs::rename(tmp, target);
}

void emit(const json& report, const std::string& out_path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    write_atomic(out_path, text);
  }
}

json envelope(const std::string& command, const GroupSpec& spec, json params, std::uint64_t seed) {
  return {{"tool", "tqr"},
          {"version", version()},
          {"command", command},
          {"group", group_spec_to_json(spec)},
          {"params", std::move(params)},
          {"seed", seed}};
}

struct Loaded {
  GroupSpec spec;
  std::shared_ptr<const GroupTable> group;
  std::shared_ptr<const CharTable> table;
};

Loaded load(const std::string& group_arg, const Limits& limits, bool with_table = true) {
  Loaded l;
  l.spec = parse_group_argument(group_arg);
  l.group = std::make_shared<const GroupTable>(build_group(l.spec, limits));
  if (with_table) l.table = std::make_shared<const CharTable>(CharTable::compute(l.group, limits));
  return l;
}

json subgroup_json(const GroupTable& g, const Subgroup& h) {
  json members = json::array();
  for (auto x : h.members) members.push_back(g.label(x));
  return {{"order", h.size()},
          {"index", h.index},
          {"normal", h.is_normal},
          {"central", h.is_central},
          {"members", std::move(members)}};
}

std::vector<std::uint32_t> parse_uint_list(const std::string& text, const std::string& what) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(static_cast<std::uint32_t>(v));
    } catch (const std::exception&) {
      throw UsageError("cannot read " + what + " from '" + text + "'");
    }
  }
  return out;
}

Subgroup select_normal(const GroupTable& g, const ClassData& classes, const std::string& selector,
                       const Limits& limits) {
  if (selector == "whole") return whole_group(g, classes);
  if (selector == "center") return center(g, classes);
  const auto normals = normal_subgroups(g, classes, limits);
  auto number = [&](const std::string& s) {
    try {
      return static_cast<std::size_t>(std::stoul(s));
    } catch (const std::exception&) {
      throw UsageError("bad normal subgroup selector '" + selector + "'");
    }
  };
  if (selector.rfind("order:", 0) == 0) {
    const auto n = number(selector.substr(6));
    for (const auto& s : normals) {
      if (s.size() == n) return s;
    }
    throw UsageError("no normal subgroup of order " + std::to_string(n));
  }
  if (selector.rfind("index:", 0) == 0) {
    const auto i = number(selector.substr(6));
    if (i >= normals.size()) throw UsageError("normal subgroup index out of range");
    return normals[i];
  }
  throw UsageError("unknown normal subgroup selector '" + selector + "' (whole, center, order:<n>, index:<i>)");
}

// ---------------------------------------------------------------------------
// Subcommands

struct Common {
  std::string group;
  std::string out;
  std::uint64_t seed = Limits{}.seed;
};

int cmd_group(const Common& c, bool list_normal, bool chain, bool quotients, std::ostream& out) {
  const auto limits = limits_from_env();
  const auto l = load(c.group, limits, false);
  const auto classes = conjugacy_classes(*l.group);
  auto report = envelope("group", l.spec, json::object(), c.seed);
  json result = group_summary(*l.group, classes);
  if (list_normal) {
    json arr = json::array();
    for (const auto& n : normal_subgroups(*l.group, classes, limits)) arr.push_back(subgroup_json(*l.group, n));
    result["normal_subgroups"] = std::move(arr);
  }
  if (chain) {
    json arr = json::array();
    for (const auto& g : center_free_quotient_chain(*l.group)) {
      const auto cl = conjugacy_classes(g);
      arr.push_back({{"order", g.order()}, {"descriptor", g.descriptor()}, {"center_order", center(g, cl).size()}});
    }
    result["center_free_chain"] = std::move(arr);
  }
  if (quotients) {
    json arr = json::array();
    for (const auto& q : proper_quotients(*l.group, classes, limits)) {
      arr.push_back({{"kernel_order", q.kernel.size()}, {"order", q.order}, {"abelian", q.abelian}});
    }
    result["proper_quotients"] = std::move(arr);
  }
  report["result"] = std::move(result);
  emit(report, c.out, out);
  return ok;
}

int cmd_chartable(const Common& c, const std::string& import_path, const std::string& export_path, bool full,
                  std::ostream& out) {
  const auto limits = limits_from_env();
  std::shared_ptr<const CharTable> table;
  GroupSpec spec;
  if (!import_path.empty()) {
    std::ifstream in(import_path);
    if (!in) throw UsageError("cannot read " + import_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw UsageError("malformed character table file: " + std::string(e.what()));
    }
    table = std::make_shared<const CharTable>(char_table_from_json(j, limits));
    spec = spec_of(table->group());
  } else {
    if (c.group.empty()) throw UsageError("chartable needs --group or --import");
    const auto l = load(c.group, limits);
    table = l.table;
    spec = l.spec;
  }
  const auto interchange = char_table_to_json(*table);
  if (!export_path.empty()) write_atomic(export_path, interchange.dump(2) + "\n");
  auto report = envelope("chartable", spec, {{"imported", !import_path.empty()}}, c.seed);
  json result = {{"num_irreps", table->num_irreps()},
                 {"dims", table->dims()},
                 {"quality",
                  {{"row_residual", table->quality().row_residual},
                   {"column_residual", table->quality().column_residual},
                   {"attempts", table->quality().attempts}}}};
  if (full) result["table"] = interchange;
  report["result"] = std::move(result);
  emit(report, c.out, out);
  return ok;
}

int cmd_check(const Common& c, const std::string& criterion, const TqrParams& tqr, const QrParams& qr,
              std::ostream& out) {
  static const std::vector<std::string> known = {"all",  "tqr",  "qr",  "tqr1", "tqr2", "tqr3",
                                                 "tqr4", "qr1",  "qr2", "qr3",  "qr4"};
  if (std::find(known.begin(), known.end(), criterion) == known.end()) {
    throw UsageError("unknown criterion '" + criterion + "'");
  }
  const auto limits = limits_from_env();
  const auto l = load(c.group, limits);
  json params = {{"criterion", criterion},
                 {"k", tqr.class_threshold},
                 {"density", tqr.density},
                 {"power", tqr.power},
                 {"half", tqr.half},
                 {"k1", tqr.normal_size.value_or(tqr.class_threshold)},
                 {"k2", tqr.index.value_or(tqr.class_threshold)},
                 {"exhaustive_cap", tqr.exhaustive_irreps},
                 {"samples", tqr.samples}};
  auto report = envelope("check", l.spec, params, c.seed);
  std::vector<CriterionReport> reps;
  const bool want_tqr = criterion == "all" || criterion.rfind("tqr", 0) == 0;
  const bool want_qr = criterion == "all" || criterion.rfind("qr", 0) == 0;
  if (want_tqr) {
    for (auto& r : check_tqr(*l.table, tqr, limits)) reps.push_back(std::move(r));
  }
  if (want_qr) {
    for (auto& r : check_qr(*l.table, qr, limits)) reps.push_back(std::move(r));
  }
  json arr = json::array();
  bool capped = false;
  for (const auto& r : reps) {
    std::string id = r.id;
    std::transform(id.begin(), id.end(), id.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (criterion == "all" || criterion == "tqr" || criterion == "qr" || criterion == id) {
      arr.push_back(to_json(r));
      capped = capped || r.verdict == Verdict::error;
    }
  }
  report["result"] = {{"reports", std::move(arr)}};
  emit(report, c.out, out);
  return capped ? usage_error : ok;
}

int cmd_cover(const Common& c, const std::string& v1s, const std::string& v2s, const std::string& v3s,
              std::ostream& out) {
  const auto limits = limits_from_env();
  const auto l = load(c.group, limits);
  const auto& t = *l.table;
  const auto v1 = parse_rep_selector(t, v1s);
  const auto v2 = parse_rep_selector(t, v2s);
  auto report = envelope("cover", l.spec, {{"v1", v1s}, {"v2", v2s}, {"v3", v3s.empty() ? json(nullptr) : json(v3s)}},
                         c.seed);
  json result;
  bool sound = true;
  if (v3s.empty()) {
    const auto r = two_factor_cover(t, v1, v2);
    sound = !r.guaranteed || r.actual_cover;
    result = to_json(r);
  } else {
    if (!t.classes().min_nontrivial_size) throw UsageError("three-factor covering needs a non-trivial group");
    const auto v3 = parse_rep_selector(t, v3s);
    const auto r = three_factor_cover(t, v1, v2, v3);
    const auto h = holder_chain(t, v1, v2, v3);
    sound = !r.guaranteed || r.actual_cover;
    const double tol = t.tolerance();
    sound = sound && h.product_l1 <= h.holder + tol && h.holder <= h.class_bound + tol;
    result = to_json(r);
    result["holder_chain"] = to_json(h);
    result["multiplicity_profile"] = to_json(multiplicity_profile(t, v1, v2, v3));
  }
  result["sound"] = sound;
  report["result"] = std::move(result);
  emit(report, c.out, out);
  return sound ? ok : verified_failure;
}

int cmd_markov(const Common& c, const std::string& rep, const std::string& pullback, IrrepId start, const std::string& metric_s, double epsilon,
               int t_max, const std::string& csv, std::optional<int> corollary_m, int trajectory, std::ostream& out) {
  const auto metric = metric_from_name(metric_s);
  if (!metric) throw UsageError("unknown metric '" + metric_s + "' (uniform, tv, tv_l1)");
  if (!(epsilon > 0.0)) throw UsageError("--epsilon must be positive");
  const auto limits = limits_from_env();
  const auto l = load(c.group, limits);
  const auto& t = *l.table;
  const auto v = pullback.empty() ? parse_rep_selector(t, rep)
                                  : quotient_pullback_regular(t, select_normal(*l.group, t.classes(), pullback, limits));
  if (start >= t.num_irreps()) throw UsageError("--start out of range");
  const auto chain = build_chain(t, v);
  const auto mix = mixing_time(chain, *metric, epsilon, t_max, start);
  double identity = 0.0;
  for (IrrepId s = 0; s < t.num_irreps(); ++s) {
    for (int step = 0; step <= 4; ++step) {
      const auto a = t_step_distribution(chain, s, step);
      const auto b = direct_t_step_distribution(t, v, s, step);
      for (std::size_t i = 0; i < a.size(); ++i) identity = std::max(identity, std::abs(a[i] - b[i]));
    }
  }
  const double stationarity = stationarity_residual(chain);
  bool sound = stationarity <= t.tolerance() && identity <= t.tolerance();
  auto report = envelope("markov", l.spec,
                         {{"rep", pullback.empty() ? json(rep) : json("pullback:" + pullback)},
                          {"driving", rep_to_json(v)},
                          {"start", start}, {"metric", metric_s}, {"epsilon", epsilon}, {"tmax", t_max}},
                         c.seed);
  json result = {{"chain", to_json(chain)},
                 {"stationarity_residual", stationarity},
                 {"identity_residual", identity},
                 {"mixing", to_json(mix)}};
  if (corollary_m) {
    const auto cor = corollary_mix_experiment(t, v, epsilon, *corollary_m);
    sound = sound && cor.tv_l1_dominates_inaccessible && (!cor.min_class || cor.bound_holds);
    result["corollary"] = to_json(cor);
  }
  if (trajectory > 0) result["trajectory"] = sample_trajectory(chain, start, trajectory, c.seed);
  result["sound"] = sound;
  report["result"] = std::move(result);
  if (!csv.empty()) write_atomic(csv, mixing_csv(mix));
  emit(report, c.out, out);
  return sound ? ok : verified_failure;
}

int cmd_counterexample(const Common& c, const std::string& normal_sel, int m, std::optional<double> epsilon,
                       const std::string& construction, std::ostream& out) {
  if (m < 1) throw UsageError("--m must be at least 1");
  if (construction != "orbit" && construction != "pullback") {
    throw UsageError("unknown construction '" + construction + "' (orbit, pullback)");
  }
  const auto limits = limits_from_env();
  const auto l = load(c.group, limits);
  const auto& t = *l.table;
  const auto& g = *l.group;
  const auto n = select_normal(g, t.classes(), normal_sel, limits);
  json params = {{"normal", normal_sel}, {"m", m}, {"construction", construction},
                 {"epsilon", epsilon ? json(*epsilon) : json(nullptr)}};
  auto report = envelope("counterexample", l.spec, params, c.seed);
  json result = {{"normal_subgroup", subgroup_json(g, n)}};
  bool sound = true;
  if (construction == "pullback") {
    const auto v = quotient_pullback_regular(t, n);
    const auto power = tensor_power_support(t, v, m);
    result["v"] = rep_to_json(v);
    result["measure"] = plancherel(t, v);
    result["expected_measure"] = 1.0 / static_cast<double>(n.size());
    result["power_measure"] = plancherel(t, power);
    sound = std::abs(plancherel(t, v) - plancherel(t, power)) <= t.tolerance();
  } else {
    const auto rep = build_counterexample_rep(t, n, m, epsilon);
    result["v"] = rep_to_json(rep.v);
    result["report"] = to_json(rep);
    const auto orbit = verify_orbit_partition(t, n);
    result["orbit_partition"] = to_json(orbit);
    const auto emb = subgroup_as_group(g, n);
    auto n_group = std::make_shared<const GroupTable>(emb.group);
    const auto n_table = CharTable::compute(n_group, limits);
    const auto z = center(g, t.classes());
    const auto zn = center_of_subgroup(g, t.classes(), n);
    std::vector<Element> k_members;
    for (std::size_t i = 0; i < emb.embedding.size(); ++i) {
      if (zn.contains(emb.embedding[i])) k_members.push_back(static_cast<Element>(i));
    }
    const auto k = make_subgroup(*n_group, n_table.classes(), k_members);
    const auto vtheta = verify_vtheta_partition(n_table, k);
    result["vtheta_partition"] = to_json(vtheta);
    sound = rep.measure_matches && rep.doubling.invariant && rep.doubling.half_bound_holds &&
            rep.power_support_in_sumset && orbit.ok() && vtheta.ok();
    (void)z;
  }
  result["sound"] = sound;
  report["result"] = std::move(result);
  emit(report, c.out, out);
  return sound ? ok : verified_failure;
}

int cmd_sumset(const Common& c, const std::string& factors_s, const std::string& set_s, int m,
               std::optional<int> cover_n, bool doubling, std::optional<double> epsilon, std::ostream& out) {
  if (m < 1) throw UsageError("--m must be at least 1");
  const auto factors = parse_uint_list(factors_s, "cyclic factors");
  if (factors.empty()) throw UsageError("--factors needs at least one cyclic factor");
  const AbelianGroup k(factors);
  const auto set = parse_uint_list(set_s, "set elements");
  for (auto x : set) {
    if (x >= k.order()) throw UsageError("set element " + std::to_string(x) + " out of range");
  }
  json params = {{"factors", factors}, {"set", set}, {"m", m}};
  json result = json::object();
  bool sound = true;
  if (!set.empty()) {
    const auto s = m_fold_sumset(k, set, m);
    result["sumset"] = s;
    result["sumset_size"] = s.size();
  }
  if (cover_n) {
    if (set.empty()) throw UsageError("--cover-n needs --set");
    const auto cover = translate_cover(k, set, *cover_n, m);
    result["cover"] = to_json(cover);
    sound = sound && cover.verified && static_cast<double>(cover.count()) <= cover.bound;
    params["cover_n"] = *cover_n;
  }
  if (doubling) {
    const auto r = invariant_small_doubling_set(k, AutAction::trivial(k), m, epsilon);
    result["doubling"] = to_json(r);
    sound = sound && r.half_bound_holds && r.invariant;
    params["epsilon"] = epsilon ? json(*epsilon) : json(nullptr);
  }
  result["sound"] = sound;
  json report = {{"tool", "tqr"}, {"version", version()}, {"command", "sumset"}, {"params", params},
                 {"seed", c.seed}, {"result", result}};
  emit(report, c.out, out);
  return sound ? ok : verified_failure;
}

}  // namespace

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor quasi-randomness toolkit", "tqr"};
  app.require_subcommand(1);
  app.set_version_flag("--version", version());

  Common common;
  auto add_common = [&](CLI::App* sub, bool group_required) {
    auto* opt = sub->add_option("--group", common.group, "family shorthand, inline JSON or spec file");
    if (group_required) opt->required();
    sub->add_option("--out", common.out, "write the JSON report here instead of stdout");
    sub->add_option("--seed", common.seed, "seed for randomized searches");
  };

  auto* group_cmd = app.add_subcommand("group", "structural data of a group");
  add_common(group_cmd, true);
  bool list_normal = false, chain = false, quotients = false;
  group_cmd->add_flag("--normal", list_normal, "list normal subgroups");
  group_cmd->add_flag("--chain", chain, "center-free quotient chain");
  group_cmd->add_flag("--quotients", quotients, "non-trivial proper quotients");

  auto* table_cmd = app.add_subcommand("chartable", "compute, import or export a character table");
  add_common(table_cmd, false);
  std::string import_path, export_path;
  bool full = false;
  table_cmd->add_option("--import", import_path, "interchange JSON to load and certify");
  table_cmd->add_option("--export", export_path, "write the interchange JSON here");
  table_cmd->add_flag("--full", full, "embed the interchange JSON in the report");

  auto* check_cmd = app.add_subcommand("check", "TQR and QR criteria");
  add_common(check_cmd, true);
  std::string criterion = "all";
  TqrParams tqr;
  std::optional<std::size_t> k1, k2;
  check_cmd->add_option("--criterion", criterion, "tqr1..tqr4, qr1..qr4, tqr, qr or all");
  check_cmd->add_option("--k", tqr.class_threshold, "threshold k");
  check_cmd->add_option("--density", tqr.density, "density a");
  check_cmd->add_option("--power", tqr.power, "tensor or product power m");
  check_cmd->add_option("--half", tqr.half, "TQR3 threshold on M(V^m)");
  check_cmd->add_option("--k1", k1, "TQR4 normal subgroup size threshold (default k)");
  check_cmd->add_option("--k2", k2, "TQR4 index threshold (default k)");
  check_cmd->add_option("--exhaustive-cap", tqr.exhaustive_irreps, "exhaustive support search up to this many irreps");
  check_cmd->add_option("--samples", tqr.samples, "random samples per search");

  auto* cover_cmd = app.add_subcommand("cover", "two and three factor covering");
  add_common(cover_cmd, true);
  std::string v1, v2, v3;
  cover_cmd->add_option("--v1", v1, "representation selector")->required();
  cover_cmd->add_option("--v2", v2, "representation selector")->required();
  cover_cmd->add_option("--v3", v3, "representation selector (three-factor mode)");

  auto* markov_cmd = app.add_subcommand("markov", "tensor product Markov chain");
  add_common(markov_cmd, true);
  std::string rep = "all", metric = "tv", csv, pullback;
  IrrepId start = 0;
  double epsilon = 0.25;
  int t_max = 64, trajectory = 0;
  std::optional<int> corollary_m;
  markov_cmd->add_option("--rep", rep, "driving representation selector");
  markov_cmd->add_option("--pullback", pullback, "drive with the regular rep of G/N (whole, center, order:<n>, index:<i>)");
  markov_cmd->add_option("--start", start, "starting irrep");
  markov_cmd->add_option("--metric", metric, "uniform, tv or tv_l1");
  markov_cmd->add_option("--epsilon", epsilon, "mixing threshold");
  markov_cmd->add_option("--tmax", t_max, "largest step count");
  markov_cmd->add_option("--csv", csv, "write the distance curve here");
  markov_cmd->add_option("--corollary-m", corollary_m, "also run the three-step and non-mixing experiment");
  markov_cmd->add_option("--trajectory", trajectory, "sample a trajectory of this many steps");

  auto* ce_cmd = app.add_subcommand("counterexample", "invariant small-doubling representation");
  add_common(ce_cmd, true);
  std::string normal_sel = "whole", construction = "orbit";
  int m = 2;
  std::optional<double> ce_epsilon;
  ce_cmd->add_option("--normal", normal_sel, "whole, center, order:<n> or index:<i>");
  ce_cmd->add_option("--m", m, "tensor power");
  ce_cmd->add_option("--epsilon", ce_epsilon, "override the density threshold");
  ce_cmd->add_option("--construction", construction, "orbit or pullback");

  auto* sum_cmd = app.add_subcommand("sumset", "sumsets, translate covers and small doubling sets");
  sum_cmd->add_option("--out", common.out, "write the JSON report here instead of stdout");
  sum_cmd->add_option("--seed", common.seed, "unused; recorded in the report");
  std::string factors = "12", set_s;
  int sum_m = 2;
  std::optional<int> cover_n;
  bool doubling = false;
  std::optional<double> sum_epsilon;
  sum_cmd->add_option("--factors", factors, "cyclic factors, comma separated");
  sum_cmd->add_option("--set", set_s, "element indices, comma separated");
  sum_cmd->add_option("--m", sum_m, "sumset order");
  sum_cmd->add_option("--cover-n", cover_n, "cover mnB by translates of nB");
  sum_cmd->add_flag("--doubling", doubling, "run the small doubling construction (trivial action)");
  sum_cmd->add_option("--epsilon", sum_epsilon, "density threshold for --doubling");

  auto* suite_cmd = app.add_subcommand("suite", "run a batch of experiments");
  std::string config, out_dir = "suite-out";
  suite_cmd->add_option("--config", config, "suite JSON")->required();
  suite_cmd->add_option("--out-dir", out_dir, "directory for reports");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }

  try {
    if (*group_cmd) return cmd_group(common, list_normal, chain, quotients, out);
    if (*table_cmd) return cmd_chartable(common, import_path, export_path, full, out);
    if (*check_cmd) {
      tqr.normal_size = k1;
      tqr.index = k2;
      tqr.seed = common.seed;
      QrParams qr;
      qr.threshold = tqr.class_threshold;
      qr.density = tqr.density;
      qr.power = tqr.power;
      qr.seed = common.seed;
      qr.samples = tqr.samples;
      return cmd_check(common, criterion, tqr, qr, out);
    }
    if (*cover_cmd) return cmd_cover(common, v1, v2, v3, out);
    if (*markov_cmd) {
      return cmd_markov(common, rep, pullback, start, metric, epsilon, t_max, csv, corollary_m, trajectory, out);
    }
    if (*ce_cmd) return cmd_counterexample(common, normal_sel, m, ce_epsilon, construction, out);
    if (*sum_cmd) return cmd_sumset(common, factors, set_s, sum_m, cover_n, doubling, sum_epsilon, out);
    if (*suite_cmd) return run_suite(config, out_dir, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return verified_failure;
  } catch (const NotACharacter& e) {
    err << "decomposition failure: " << e.what() << "\n";
    return verified_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return usage_error;
  }
  return usage_error;
}

int run_suite(const std::string& config_path, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  std::ifstream in(config_path);
  if (!in) {
    err << "error: cannot read " << config_path << "\n";
    return usage_error;
  }
  json config;
  try {
    config = json::parse(in);
  } catch (const json::parse_error& e) {
    err << "error: malformed suite file: " << e.what() << "\n";
    return usage_error;
  }
  const json experiments = config.value("experiments", json::array());
  if (!experiments.is_array()) {
    err << "error: 'experiments' must be an array\n";
    return usage_error;
  }
  fs::create_directories(out_dir);

  json results = json::array();
  std::map<std::string, bool> criteria;
  bool all_pass = true;
  for (const auto& e : experiments) {
    const std::string name = e.value("name", "unnamed");
    const std::string crit = e.value("criterion", "");
    const int expect = e.value("expect_exit", 0);
    std::vector<std::string> args;
    int code = usage_error;
    std::ostringstream sub_out, sub_err;
    try {
      args = e.at("args").get<std::vector<std::string>>();
      if (args.empty()) throw UsageError("empty argument list");
      if (args.front() == "suite") throw UsageError("suites do not nest");
      const std::string report = (fs::path(out_dir) / (name + ".json")).string();
      args.push_back("--out");
      args.push_back(report);
      if (args.front() == "markov") {
        args.push_back("--csv");
        args.push_back((fs::path(out_dir) / (name + ".csv")).string());
      }
      code = run(args, sub_out, sub_err);
    } catch (const std::exception& ex) {
      sub_err << "error: " << ex.what() << "\n";
    }
    const bool pass = code == expect;
    all_pass = all_pass && pass;
    if (!crit.empty()) {
      auto [it, inserted] = criteria.emplace(crit, pass);
      if (!inserted) it->second = it->second && pass;
    }
    json entry = {{"name", name}, {"criterion", crit}, {"exit_code", code}, {"expected_exit", expect},
                  {"status", pass ? "pass" : "fail"}};
    if (!sub_err.str().empty()) entry["diagnostics"] = sub_err.str();
    results.push_back(std::move(entry));
  }
  json by_criterion = json::object();
  for (const auto& [k, v] : criteria) by_criterion[k] = v ? "pass" : "fail";
  const json summary = {{"tool", "tqr"},
                        {"version", version()},
                        {"suite", config.value("name", "")},
                        {"experiments", std::move(results)},
                        {"criteria", std::move(by_criterion)},
                        {"status", all_pass ? "pass" : "fail"}};
  write_atomic((fs::path(out_dir) / "summary.json").string(), summary.dump(2) + "\n");
  out << summary.dump(2) << "\n";
  return all_pass ? ok : verified_failure;
}

}  // namespace tqr::cli
