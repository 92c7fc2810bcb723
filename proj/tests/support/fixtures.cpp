#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <set>

#include "tqr/io.hpp"

namespace tqr::fx {

namespace {

GroupSpec fam(Family f, long p = 0) { return GroupSpec::make_family(f, p); }

}  // namespace

GroupSpec sl2_5() {
  using M = std::array<int, 4>;
  std::vector<M> elems;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d)
          if (((a * d - b * c) % 5 + 5) % 5 == 1) elems.push_back({a, b, c, d});
  std::map<M, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Element>(i);
  std::vector<std::vector<Element>> table(elems.size(), std::vector<Element>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const auto& x = elems[i];
      const auto& y = elems[j];
      const M p = {(x[0] * y[0] + x[1] * y[2]) % 5, (x[0] * y[1] + x[1] * y[3]) % 5,
                   (x[2] * y[0] + x[3] * y[2]) % 5, (x[2] * y[1] + x[3] * y[3]) % 5};
      table[i][j] = index.at(p);
    }
  }
  return GroupSpec::cayley(std::move(table));
}

GroupSpec psl2_7() {
  // Collineations of the Fano plane with lines {i, i+1, i+3} mod 7.
  std::set<std::set<Element>> lines;
  for (Element i = 0; i < 7; ++i) lines.insert({i, (i + 1) % 7, (i + 3) % 7});
  std::vector<Element> p = {0, 1, 2, 3, 4, 5, 6};
  std::vector<std::vector<Element>> gens;
  do {
    bool ok = true;
    for (const auto& l : lines) {
      std::set<Element> img;
      for (auto x : l) img.insert(p[x]);
      if (!lines.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) gens.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return GroupSpec::permutations(7, std::move(gens));
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  for (long n = 1; n <= 64; ++n) out.push_back({"cyclic" + std::to_string(n), fam(Family::cyclic, n)});
  for (long n = 1; n <= 16; ++n) out.push_back({"dihedral" + std::to_string(n), fam(Family::dihedral, n)});
  for (long n = 3; n <= 5; ++n) out.push_back({"symmetric" + std::to_string(n), fam(Family::symmetric, n)});
  out.push_back({"alternating4", fam(Family::alternating, 4)});
  out.push_back({"alternating5", fam(Family::alternating, 5)});
  out.push_back({"quaternion8", fam(Family::quaternion8)});
  for (long p : {3L, 5L}) out.push_back({"extraspecial" + std::to_string(p), fam(Family::extraspecial, p)});
  for (long p : {5L, 7L, 11L, 13L}) out.push_back({"affine" + std::to_string(p), fam(Family::affine, p)});
  out.push_back({"c2xs3", GroupSpec::direct_product(fam(Family::cyclic, 2), fam(Family::symmetric, 3))});
  out.push_back({"c2xs4", GroupSpec::direct_product(fam(Family::cyclic, 2), fam(Family::symmetric, 4))});
  out.push_back({"s3xs3", GroupSpec::direct_product(fam(Family::symmetric, 3), fam(Family::symmetric, 3))});
  out.push_back({"c3xq8", GroupSpec::direct_product(fam(Family::cyclic, 3), fam(Family::quaternion8))});
  out.push_back({"c2xa5", GroupSpec::direct_product(fam(Family::cyclic, 2), fam(Family::alternating, 5))});
  out.push_back({"affine5xaffine5",
                 GroupSpec::direct_product(fam(Family::affine, 5), fam(Family::affine, 5))});
  out.push_back({"sl2_5", sl2_5()});
  out.push_back({"psl2_7", psl2_7()});
  return out;
}

std::vector<Fixture> small_fixtures(std::size_t max_order) {
  std::vector<Fixture> out;
  for (auto& f : all_fixtures()) {
    if (f.spec.kind == GroupSpec::Kind::family && f.spec.family == Family::cyclic && f.spec.parameter > 12) continue;
    if (build_group(f.spec).order() <= max_order) out.push_back(std::move(f));
  }
  return out;
}

std::shared_ptr<const CharTable> table_of(const GroupSpec& spec) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const CharTable>> cache;
  const std::string key = group_spec_to_json(spec).dump();
  std::lock_guard lock(mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto t = std::make_shared<const CharTable>(CharTable::compute(build_group(spec)));
  cache.emplace(key, t);
  return t;
}

std::shared_ptr<const CharTable> table_of(const std::string& shorthand) {
  return table_of(parse_group_shorthand(shorthand));
}

}  // namespace tqr::fx
