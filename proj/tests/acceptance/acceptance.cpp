// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "tqr/class_functions.hpp"
#include "tqr/counterexample.hpp"
#include "tqr/criteria.hpp"
#include "tqr/markov.hpp"

using namespace tqr;
namespace fs = std::filesystem;

namespace {

constexpr double kTol = 1e-8;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<bool> random_mask(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<bool> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = coin(rng);
  return m;
}

double measure(const CharTable& t, const std::vector<bool>& m) { return plancherel(t, RepMultiset::from_mask(m)); }

bool covers(const std::vector<std::int64_t>& mult) {
  return !mult.empty() && std::all_of(mult.begin(), mult.end(), [](auto x) { return x > 0; });
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(4);
  s << x;
  return s.str();
}

// AC1 -----------------------------------------------------------------------
Outcome ac1() {
  double worst = 0.0;
  std::size_t n = 0;
  for (const auto& f : fx::all_fixtures()) {
    const auto t = fx::table_of(f.spec);
    long sq = 0;
    for (auto d : t->dims()) sq += static_cast<long>(d) * d;
    if (static_cast<std::size_t>(sq) != t->group_order()) return {false, f.name + ": sum of squared dims"};
    const auto& cl = t->classes();
    const double order = static_cast<double>(t->group_order());
    const std::size_t k = t->num_irreps();
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        Complex row = 0.0, col = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
          row += static_cast<double>(cl.sizes[c]) * t->value(i, c) * std::conj(t->value(j, c));
          col += t->value(c, i) * std::conj(t->value(c, j));
        }
        worst = std::max(worst, std::abs(row / order - (i == j ? 1.0 : 0.0)));
        worst = std::max(worst, std::abs(col * static_cast<double>(cl.sizes[i]) / order - (i == j ? 1.0 : 0.0)));
      }
    }
    ++n;
  }
  return {worst < kTol, std::to_string(n) + " fixtures, worst residual " + fmt(worst)};
}

// AC2 -----------------------------------------------------------------------
Outcome ac2() {
  const auto fixtures = fx::all_fixtures();
  std::mt19937_64 rng(0xac2);
  std::size_t checked = 0, failures = 0;
  const std::size_t target = 10000;
  const std::size_t per = target / fixtures.size() + 1;
  for (const auto& f : fixtures) {
    const auto t = fx::table_of(f.spec);
    std::size_t here = 0;
    for (std::size_t attempt = 0; here < per && attempt < 200 * per; ++attempt) {
      const auto a = random_mask(t->num_irreps(), 0.6, rng);
      const auto b = random_mask(t->num_irreps(), 0.6, rng);
      if (measure(*t, a) + measure(*t, b) <= 1.0) continue;
      ++here;
      ++checked;
      const auto r = two_factor_cover(*t, RepMultiset::from_mask(a), RepMultiset::from_mask(b));
      if (!r.guaranteed || !covers(oracle::tensor_multiplicities(*t, {a, b})) || !r.actual_cover) ++failures;
    }
  }
  return {failures == 0 && checked >= target,
          std::to_string(checked) + " pairs, " + std::to_string(failures) + " uncovered"};
}

// AC3 -----------------------------------------------------------------------
Outcome ac3() {
  const auto a5 = fx::table_of("affine:5");
  const auto rho = single_irrep(*a5, 4);
  const auto worked = three_factor_cover(*a5, rho, rho, rho);
  const auto cube = tensor_product(*a5, tensor_product(*a5, rho, rho), rho);
  std::vector<std::complex<double>> chi3 = oracle::on_elements(a5->character(4));
  for (auto& x : chi3) x = x * x * x;
  const std::vector<std::int64_t> want = {3, 3, 3, 3, 13};
  const bool worked_ok = std::abs(worked.condition_value - 0.512) < 1e-12 &&
                         std::abs(worked.condition_threshold - 0.5) < 1e-12 && worked.guaranteed &&
                         worked.actual_cover && cube.mult() == want && oracle::integer_multiplicities(*a5, chi3) == want;

  std::mt19937_64 rng(0xac3);
  std::size_t checked = 0, failures = 0;
  std::size_t fixtures_used = 0;
  for (const auto& f : fx::all_fixtures()) {
    const auto t = fx::table_of(f.spec);
    const auto c = t->classes().min_nontrivial_size;
    if (!c || *c < 2) continue;
    ++fixtures_used;
    const double threshold = 1.0 / std::sqrt(static_cast<double>(*c));
    std::size_t here = 0;
    for (int attempt = 0; attempt < 4000 && here < 150; ++attempt) {
      const double p = 0.7 + 0.3 * std::uniform_real_distribution<double>(0, 1)(rng);
      const auto a = random_mask(t->num_irreps(), p, rng);
      const auto b = random_mask(t->num_irreps(), p, rng);
      const auto d = random_mask(t->num_irreps(), p, rng);
      if (measure(*t, a) * measure(*t, b) * measure(*t, d) <= threshold) continue;
      ++here;
      ++checked;
      const auto r =
          three_factor_cover(*t, RepMultiset::from_mask(a), RepMultiset::from_mask(b), RepMultiset::from_mask(d));
      if (!r.guaranteed || !r.actual_cover || !covers(oracle::tensor_multiplicities(*t, {a, b, d}))) ++failures;
    }
  }
  return {worked_ok && failures == 0 && checked > 0,
          "affine(5) instance " + std::string(worked_ok ? "ok" : "WRONG") + "; " + std::to_string(checked) +
              " triples on " + std::to_string(fixtures_used) + " fixtures, " + std::to_string(failures) +
              " uncovered"};
}

// AC4 -----------------------------------------------------------------------
Outcome ac4() {
  double worst_slack = -1.0;
  std::size_t supports = 0, fixtures = 0;
  for (const auto& f : fx::all_fixtures()) {
    const auto t = fx::table_of(f.spec);
    const auto c = t->classes().min_nontrivial_size;
    if (!c || t->num_irreps() > 12) continue;
    ++fixtures;
    const double bound = 1.0 / std::sqrt(static_cast<double>(*c));
    const std::size_t k = t->num_irreps();
    std::vector<std::vector<std::complex<double>>> scaled(k);
    for (IrrepId l = 0; l < k; ++l) {
      scaled[l] = oracle::on_elements(*t, l);
      for (auto& x : scaled[l]) x *= static_cast<double>(t->dim(l)) / static_cast<double>(t->group_order());
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      double sup = 0.0;
      for (std::size_t x = 0; x < t->group_order(); ++x) {
        if (x == t->group().identity()) continue;
        std::complex<double> v = 0.0;
        for (IrrepId l = 0; l < k; ++l)
          if (mask >> l & 1) v += scaled[l][x];
        sup = std::max(sup, std::abs(v));
      }
      // library path for the same quantity
      std::vector<bool> m(k);
      for (std::size_t l = 0; l < k; ++l) m[l] = mask >> l & 1;
      const auto f0 = split_off_identity(reduced_character(*t, RepMultiset::from_mask(m))).second;
      if (std::abs(lp_norm(f0, Norm::linf) - sup) > 1e-12) return {false, f.name + ": library and oracle disagree"};
      worst_slack = std::max(worst_slack, sup - bound);
      ++supports;
    }
  }
  return {worst_slack <= kTol, std::to_string(supports) + " supports on " + std::to_string(fixtures) +
                                   " fixtures, max(|f0|_inf - c^-1/2) = " + fmt(worst_slack)};
}

// AC5 -----------------------------------------------------------------------
Outcome ac5() {
  std::mt19937_64 rng(0xac5);
  double stat = 0.0, ident = 0.0;
  std::size_t chains = 0;
  for (const auto& f : fx::all_fixtures()) {
    const auto t = fx::table_of(f.spec);
    for (int trial = 0; trial < 2; ++trial) {
      auto mask = random_mask(t->num_irreps(), 0.4, rng);
      mask[rng() % mask.size()] = true;
      const auto v = RepMultiset::from_mask(mask);
      const auto chain = build_chain(*t, v);
      ++chains;
      const auto m = plancherel_measure(*t);
      for (std::size_t mu = 0; mu < m.size(); ++mu) {
        double s = 0.0;
        for (std::size_t l = 0; l < m.size(); ++l) s += m[l] * chain.kernel[l][mu];
        stat = std::max(stat, std::abs(s - m[mu]));
      }
      const std::size_t starts = std::min<std::size_t>(t->num_irreps(), 6);
      for (IrrepId l = 0; l < starts; ++l) {
        for (int s = 0; s <= 4; ++s) {
          const auto a = t_step_distribution(chain, l, s);
          const auto b = direct_t_step_distribution(*t, v, l, s);
          for (std::size_t i = 0; i < a.size(); ++i) ident = std::max(ident, std::abs(a[i] - b[i]));
        }
      }
    }
  }
  return {stat < kTol && ident < kTol, std::to_string(chains) + " chains, stationarity " + fmt(stat) +
                                           ", t-step identity " + fmt(ident)};
}

// AC6 -----------------------------------------------------------------------
Outcome ac6() {
  std::string detail;
  bool pass = true;
  double previous = std::numeric_limits<double>::infinity();
  for (int p : {5, 7, 11, 13}) {
    const auto t = fx::table_of("affine:" + std::to_string(p));
    const IrrepId top = static_cast<IrrepId>(p - 1);
    if (t->dim(top) != p - 1) return {false, "unexpected irrep order for affine(" + std::to_string(p) + ")"};
    const auto v = single_irrep(*t, top);
    const auto r = corollary_mix_experiment(*t, v, 1.0, 3);
    const auto k = oracle::chain_kernel(*t, v.support_mask());
    const auto m = plancherel_measure(*t);
    double uniform = 0.0;
    for (IrrepId l = 0; l < t->num_irreps(); ++l) {
      const auto d = oracle::chain_distribution(k, l, 3);
      for (std::size_t i = 0; i < d.size(); ++i) uniform = std::max(uniform, std::abs(d[i] / m[i] - 1.0));
    }
    const double bound = std::pow(static_cast<double>(p - 1), -0.5) / std::pow(measure(*t, v.support_mask()), 3);
    const bool ok = uniform <= bound && std::abs(uniform - r.uniform_at_3) < 1e-9 && uniform < previous;
    pass = pass && ok;
    detail += "p=" + std::to_string(p) + ": " + fmt(uniform) + " <= " + fmt(bound) + "; ";
    previous = uniform;
  }
  return {pass, detail};
}

// AC7 -----------------------------------------------------------------------
Outcome ac7() {
  const auto t = fx::table_of("cyclic:2*symmetric:4");
  const auto z = center(t->group(), t->classes());
  const auto v = quotient_pullback_regular(*t, z);
  const auto m = plancherel_measure(*t);
  const auto zc = t->classes().class_of[z.members.back()];
  double inaccessible = 0.0;
  for (IrrepId l = 0; l < t->num_irreps(); ++l)
    if (std::abs(t->value(l, zc) - Complex(t->dim(l), 0.0)) > 1e-9) inaccessible += m[l];
  const auto chain = build_chain(*t, v);
  const auto k = oracle::chain_kernel(*t, v.support_mask());
  double min_gap = std::numeric_limits<double>::infinity();
  double max_leak = 0.0;
  for (int s = 0; s <= 64; ++s) {
    const auto p = t_step_distribution(chain, 0, s);
    const auto q = oracle::chain_distribution(k, 0, s);
    double tv = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
      tv += 0.5 * std::abs(p[i] - m[i]);
      max_leak = std::max(max_leak, std::abs(p[i] - q[i]));
      if (std::abs(t->value(i, zc) - Complex(t->dim(i), 0.0)) > 1e-9) max_leak = std::max(max_leak, p[i]);
    }
    min_gap = std::min(min_gap, tv - inaccessible);
  }
  return {min_gap >= -kTol && max_leak < kTol && std::abs(inaccessible - 0.5) < 1e-12,
          "inaccessible mass " + fmt(inaccessible) + ", min over t<=64 of TV - mass = " + fmt(min_gap)};
}

// AC8 -----------------------------------------------------------------------
Outcome ac8() {
  std::mt19937_64 rng(0xac8);
  std::size_t instances = 0, failures = 0;
  while (instances < 120) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int dim = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 6);
    std::set<LatticePoint> pts;
    while (static_cast<int>(pts.size()) < k + 1) {
      LatticePoint p(dim);
      for (auto& x : p) x = static_cast<std::int64_t>(rng() % 9) - 4;
      pts.insert(p);
    }
    const std::vector<LatticePoint> b(pts.begin(), pts.end());
    const auto c = translate_cover(b, n, m);
    const double bound = std::pow(10.0 * k * m, k);
    if (!c.verified || !oracle::cover_is_valid(b, n, m, c.translates) || static_cast<double>(c.count()) > bound) {
      ++failures;
    }
    ++instances;
  }
  return {failures == 0, std::to_string(instances) + " instances, " + std::to_string(failures) + " failures"};
}

// AC9 -----------------------------------------------------------------------
Outcome ac9() {
  const auto c12 = fx::table_of("cyclic:12");
  const auto r = build_counterexample_rep(*c12, whole_group(c12->group(), c12->classes()), 2, 0.25);
  // exact arithmetic: count supports directly
  const auto supp = r.v.support();
  const auto mult = oracle::tensor_multiplicities(*c12, {r.v.support_mask(), r.v.support_mask()});
  const std::size_t sq = static_cast<std::size_t>(std::count_if(mult.begin(), mult.end(), [](auto x) { return x > 0; }));
  bool pass = 4 * supp.size() >= 12 && 2 * sq <= 12;
  std::string detail = "cyclic(12): |supp V| = " + std::to_string(supp.size()) + "/12, |supp V^2| = " +
                       std::to_string(sq) + "/12";
  for (const auto* s : {"quaternion8", "dihedral:4"}) {
    const auto t = fx::table_of(s);
    const auto rep = verify_vtheta_partition(*t, center(t->group(), t->classes()));
    bool ok = rep.ok() && rep.blocks.size() == 2;
    for (const auto& b : rep.blocks) {
      long sq_dims = 0;
      for (auto l : b.support) sq_dims += static_cast<long>(t->dim(l)) * t->dim(l);
      ok = ok && 2 * sq_dims == static_cast<long>(t->group_order());
    }
    pass = pass && ok;
    detail += std::string("; ") + s + " blocks " + (ok ? "1/2, 1/2" : "WRONG");
  }
  return {pass, detail};
}

// AC10 ----------------------------------------------------------------------
Outcome ac10() {
  bool pass = true;
  std::string detail;
  for (int p : {5, 7, 11}) {
    const auto t = fx::table_of("affine:" + std::to_string(p));
    TqrParams tp;
    tp.class_threshold = static_cast<std::size_t>(p - 2);
    const auto tqr = check_tqr(*t, tp);
    const bool tqr1 = tqr[0].verdict == Verdict::holds && tqr[0].parameters["c"] == p - 1;
    const auto qr = check_qr(*t);
    const auto& q4 = qr[3];
    const bool qr4 = q4.verdict == Verdict::fails && q4.witness["abelian"] == true &&
                     q4.witness["quotient_order"] == p - 1 && q4.witness["kernel"]["order"] == p;
    bool all_abelian = true;
    const auto qs = proper_quotients(t->group(), t->classes());
    for (const auto& q : qs) {
      // independent: G/N abelian iff every commutator lies in N
      bool ab = true;
      const auto& g = t->group();
      for (Element x = 0; x < g.order() && ab; ++x)
        for (Element y = 0; y < g.order() && ab; ++y)
          ab = q.kernel.contains(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
      all_abelian = all_abelian && ab && q.abelian;
    }
    pass = pass && tqr1 && qr4 && all_abelian && !qs.empty();
    detail += "affine(" + std::to_string(p) + ") " + (tqr1 && qr4 && all_abelian ? "ok" : "WRONG") + "; ";
  }
  for (const auto& spec : {GroupSpec::make_family(Family::alternating, 5), fx::psl2_7(), fx::sl2_5()}) {
    const auto chain = center_free_quotient_chain(build_group(spec));
    const auto& last = chain.back();
    const bool ok = last.order() > 1 && oracle::center(last).size() == 1;
    pass = pass && ok;
    detail += "chain ends at order " + std::to_string(last.order()) + "; ";
  }
  const auto q8 = center_free_quotient_chain(build_group(GroupSpec::make_family(Family::quaternion8)));
  pass = pass && q8.back().order() == 1;
  detail += "Q8 chain ends at order " + std::to_string(q8.back().order());
  return {pass, detail};
}

// AC11 ----------------------------------------------------------------------
Outcome ac11(const fs::path& work) {
  const fs::path config = fs::path(TQR_SOURCE_DIR) / "suites" / "acceptance.json";
  const fs::path a = work / "run_a", b = work / "run_b";
  fs::remove_all(a);
  fs::remove_all(b);
  std::ostringstream sink_out, sink_err;
  const int ca = cli::run_suite(config.string(), a.string(), sink_out, sink_err);
  const int cb = cli::run_suite(config.string(), b.string(), sink_out, sink_err);
  if (ca != 0 || cb != 0) return {false, "suite did not pass (exit " + std::to_string(ca) + ", see " + a.string() + ")"};
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    const auto other = b / entry.path().filename();
    auto slurp = [](const fs::path& p) {
      std::ifstream f(p, std::ios::binary);
      return std::string(std::istreambuf_iterator<char>(f), {});
    };
    if (!fs::exists(other) || slurp(entry.path()) != slurp(other)) {
      return {false, entry.path().filename().string() + " differs between runs"};
    }
    ++files;
  }
  return {files > 1, std::to_string(files) + " report files byte-identical across two runs"};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path work = argc > 1 ? fs::path(argv[1]) : fs::temp_directory_path() / "tqr_acceptance";
  fs::create_directories(work);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4},  {"AC5", ac5},  {"AC6", ac6},
      {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10}, {"AC11", [&] { return ac11(work); }},
  };
  int failed = 0;
  for (const auto& [id, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << id << "  " << o.detail << "  (" << fmt(secs) << "s)" << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
