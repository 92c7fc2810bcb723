#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tqr/char_table.hpp"
#include "tqr/errors.hpp"
#include "tqr/io.hpp"

using namespace tqr;
using tqr::fx::table_of;

namespace {

void expect_near(Complex a, Complex b, double tol = 1e-9) { EXPECT_LT(std::abs(a - b), tol) << a << " vs " << b; }

}  // namespace

TEST(CharTable, S3Standard) {
  const auto t = table_of("symmetric:3");
  EXPECT_EQ(t->dims(), (std::vector<int>{1, 1, 2}));
  // classes: e, 3-cycles (size 2), transpositions (size 3)
  expect_near(t->value(2, 0), 2.0);
  expect_near(t->value(2, 1), -1.0);
  expect_near(t->value(2, 2), 0.0);
  expect_near(t->value(1, 2), -1.0);
  for (ClassId c = 0; c < 3; ++c) expect_near(t->value(0, c), 1.0);
}

TEST(CharTable, DimsOfSpecFixtures) {
  EXPECT_EQ(table_of("quaternion8")->dims(), (std::vector<int>{1, 1, 1, 1, 2}));
  EXPECT_EQ(table_of("affine:5")->dims(), (std::vector<int>{1, 1, 1, 1, 4}));
  EXPECT_EQ(table_of("alternating:5")->dims(), (std::vector<int>{1, 3, 3, 4, 5}));
  EXPECT_EQ(table_of("symmetric:4")->dims(), (std::vector<int>{1, 1, 2, 3, 3}));
  EXPECT_EQ(table_of(fx::psl2_7())->dims(), (std::vector<int>{1, 3, 3, 6, 7, 8}));
  EXPECT_EQ(table_of(fx::sl2_5())->dims(), (std::vector<int>{1, 2, 2, 3, 3, 4, 4, 5, 6}));
}

TEST(CharTable, AffineFamilyDims) {
  for (int p : {7, 11, 13}) {
    const auto t = table_of("affine:" + std::to_string(p));
    std::vector<int> expect(p - 1, 1);
    expect.push_back(p - 1);
    EXPECT_EQ(t->dims(), expect);
  }
}

TEST(CharTable, IrreducibleByFunctionalEquation) {
  for (const auto& f : fx::small_fixtures(130)) {
    SCOPED_TRACE(f.name);
    const auto t = table_of(f.spec);
    int sq = 0;
    for (auto d : t->dims()) sq += d * d;
    EXPECT_EQ(static_cast<std::size_t>(sq), t->group_order());
    EXPECT_EQ(t->num_irreps(), t->num_classes());
    for (IrrepId l = 0; l < t->num_irreps(); ++l) EXPECT_LT(oracle::irreducibility_residual(*t, l), 1e-8);
    // distinct rows
    for (IrrepId a = 0; a < t->num_irreps(); ++a)
      for (IrrepId b = a + 1; b < t->num_irreps(); ++b) {
        const auto m = oracle::multiplicities(*t, oracle::on_elements(*t, a));
        expect_near(m[b], 0.0);
      }
  }
}

TEST(CharTable, CanonicalOrder) {
  for (const auto* s : {"symmetric:4", "dihedral:6", "extraspecial:3", "alternating:4"}) {
    const auto t = table_of(s);
    for (ClassId c = 0; c < t->num_classes(); ++c) expect_near(t->value(0, c), 1.0);
    for (IrrepId l = 1; l < t->num_irreps(); ++l) EXPECT_LE(t->dim(l - 1), t->dim(l));
  }
}

TEST(CharTable, DeterministicAcrossRuns) {
  const auto a = CharTable::compute(build_group(parse_group_shorthand("extraspecial:3")));
  const auto b = CharTable::compute(build_group(parse_group_shorthand("extraspecial:3")));
  EXPECT_EQ(char_table_to_json(a).dump(), char_table_to_json(b).dump());
}

TEST(CharTable, Cap) {
  Limits l;
  l.char_table_cap = 20;
  EXPECT_THROW(CharTable::compute(build_group(parse_group_shorthand("symmetric:4")), l), CapExceeded);
}

TEST(CharTable, ImportRejectsBadValues) {
  const auto t = table_of("symmetric:3");
  auto values = t->values();
  values[2][1] = 0.5;
  EXPECT_THROW(CharTable(t->group_ptr(), t->classes_ptr(), t->dims(), values), NumericalFailure);
  auto swapped = t->values();
  std::swap(swapped[0], swapped[1]);
  EXPECT_THROW(CharTable(t->group_ptr(), t->classes_ptr(), {1, 1, 2}, swapped), InvalidArgument);
  EXPECT_NO_THROW(CharTable(t->group_ptr(), t->classes_ptr(), t->dims(), t->values()));
}

TEST(ClassMatrix, IdentityClassIsIdentity) {
  const auto t = table_of("symmetric:4");
  const auto m = class_multiplication_matrix(t->group(), t->classes(), 0);
  for (std::size_t j = 0; j < m.size(); ++j)
    for (std::size_t k = 0; k < m.size(); ++k) EXPECT_EQ(m[j][k], j == k ? 1 : 0);
}

TEST(ClassMatrix, S3Transpositions) {
  const auto t = table_of("symmetric:3");
  const auto m = class_multiplication_matrix(t->group(), t->classes(), 2);
  EXPECT_EQ(m[2][0], 3);  // 3 pairs of transpositions with product e
  EXPECT_EQ(m[2][1], 3);  // pairs multiplying to a fixed 3-cycle
  EXPECT_EQ(m[2][2], 0);
}

TEST(ClassMatrix, CyclicIsPermutation) {
  const auto t = table_of("cyclic:4");
  for (ClassId i = 0; i < 4; ++i) {
    const auto m = class_multiplication_matrix(t->group(), t->classes(), i);
    for (const auto& row : m) {
      EXPECT_EQ(std::accumulate(row.begin(), row.end(), std::int64_t{0}), 1);
      for (auto v : row) EXPECT_TRUE(v == 0 || v == 1);
    }
  }
}

TEST(ClassMatrix, MatchesBruteCount) {
  const auto t = table_of("alternating:4");
  const auto& g = t->group();
  const auto& c = t->classes();
  for (ClassId i = 0; i < c.num_classes(); ++i) {
    const auto m = class_multiplication_matrix(g, c, i);
    for (ClassId j = 0; j < c.num_classes(); ++j)
      for (ClassId k = 0; k < c.num_classes(); ++k) {
        std::int64_t count = 0;
        for (auto x : c.classes[i])
          for (auto y : c.classes[j]) count += g.mul(x, y) == c.representatives[k];
        EXPECT_EQ(m[j][k], count);
      }
  }
}

TEST(Induce, TrivialSubgroupGivesRegular) {
  const auto t = table_of("dihedral:5");
  const auto& g = t->group();
  const auto h = trivial_subgroup(g, t->classes());
  std::vector<Complex> theta(g.order(), 1.0);
  const auto f = induce_character(*t, h, theta);
  expect_near(f[0], 10.0);
  for (ClassId c = 1; c < f.size(); ++c) expect_near(f[c], 0.0);
}

TEST(Induce, Q8CenterNontrivial) {
  const auto t = table_of("quaternion8");
  const auto& g = t->group();
  const auto z = center(g, t->classes());
  std::vector<Complex> theta(g.order(), 0.0);
  theta[z.members[0]] = z.members[0] == g.identity() ? 1.0 : -1.0;
  theta[z.members[1]] = z.members[1] == g.identity() ? 1.0 : -1.0;
  const auto f = induce_character(*t, z, theta);
  for (ClassId c = 0; c < f.size(); ++c) {
    const auto x = t->classes().representatives[c];
    if (z.contains(x)) {
      expect_near(f[c], 4.0 * theta[x]);
    } else {
      expect_near(f[c], 0.0);
    }
  }
  // it is twice the 2-dim irrep
  for (ClassId c = 0; c < f.size(); ++c) expect_near(f[c], 2.0 * t->value(4, c));
}

TEST(Induce, AffineTranslationCharacter) {
  const auto t = table_of("affine:5");
  const auto& g = t->group();
  std::vector<Element> translations;
  for (Element x = 0; x < g.order(); ++x)
    if (g.label(x).rfind("(1,", 0) == 0) translations.push_back(x);
  const auto h = make_subgroup(g, t->classes(), translations);
  std::vector<Complex> theta(g.order(), 0.0);
  for (auto x : translations) {
    const int b = std::stoi(g.label(x).substr(3));
    theta[x] = std::polar(1.0, 2.0 * M_PI * b / 5.0);
  }
  const auto f = induce_character(*t, h, theta);
  const std::vector<Complex> expect = {4.0, -1.0, 0.0, 0.0, 0.0};
  for (ClassId c = 0; c < 5; ++c) expect_near(f[c], expect[c]);
  for (ClassId c = 0; c < 5; ++c) expect_near(f[c], t->value(4, c));
}

TEST(Induce, FrobeniusReciprocity) {
  const auto t = table_of("symmetric:4");
  const auto& g = t->group();
  for (const auto& n : normal_subgroups(g, t->classes())) {
    const auto e = subgroup_as_group(g, n);
    const auto tn = CharTable::compute(e.group);
    for (IrrepId l = 0; l < tn.num_irreps(); ++l) {
      const auto lifted = lift_to_elements(tn.character(l), e, g.order());
      const auto f = induce_character(*t, n, lifted);
      std::vector<Complex> theta;
      for (auto x : n.members) theta.push_back(lifted[x]);
      const auto want = oracle::induced_multiplicities(*t, n.members, theta);
      const auto got = oracle::multiplicities(*t, oracle::on_elements(f));
      for (IrrepId k = 0; k < t->num_irreps(); ++k) expect_near(got[k], want[k]);
    }
  }
}

TEST(Induce, RejectsNonSubgroup) {
  const auto t = table_of("symmetric:3");
  Subgroup bogus;
  bogus.members = {t->group().identity(), t->classes().classes[1].front()};
  std::sort(bogus.members.begin(), bogus.members.end());
  ASSERT_FALSE(oracle::is_subgroup(t->group(), bogus.members));
  std::vector<Complex> theta(6, 1.0);
  EXPECT_THROW(induce_character(*t, bogus, theta), InvalidArgument);
}
