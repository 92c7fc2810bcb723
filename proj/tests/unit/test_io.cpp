#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tqr/errors.hpp"
#include "tqr/io.hpp"

using namespace tqr;
using tqr::fx::table_of;

TEST(GroupSpecJson, RoundTrip) {
  for (const auto& f : fx::all_fixtures()) {
    SCOPED_TRACE(f.name);
    const auto j = group_spec_to_json(f.spec);
    EXPECT_EQ(group_spec_from_json(j), f.spec);
    EXPECT_EQ(group_spec_to_json(group_spec_from_json(json::parse(j.dump()))), j);
  }
}

TEST(GroupSpecJson, Shorthand) {
  EXPECT_EQ(parse_group_shorthand("family:affine:5"), GroupSpec::make_family(Family::affine, 5));
  EXPECT_EQ(parse_group_shorthand("affine:5"), GroupSpec::make_family(Family::affine, 5));
  EXPECT_EQ(parse_group_shorthand("family:quaternion8"), GroupSpec::make_family(Family::quaternion8));
  EXPECT_EQ(parse_group_shorthand("cyclic:2*symmetric:4"),
            GroupSpec::direct_product(GroupSpec::make_family(Family::cyclic, 2),
                                      GroupSpec::make_family(Family::symmetric, 4)));
  EXPECT_THROW(parse_group_shorthand("bogus:3"), InvalidGroup);
  EXPECT_THROW(parse_group_shorthand("affine:x"), InvalidGroup);
}

TEST(GroupSpecJson, Malformed) {
  EXPECT_THROW(group_spec_from_json(json::parse(R"({"family": "affine"})")), InvalidGroup);
  EXPECT_THROW(group_spec_from_json(json::parse(R"({"type": "cayley", "table": "x"})")), InvalidGroup);
  EXPECT_THROW(group_spec_from_json(json::parse(R"([1, 2])")), InvalidGroup);
  EXPECT_THROW(parse_group_argument("{not json"), InvalidGroup);
}

TEST(GroupSpecJson, InlineCayley) {
  const auto spec = parse_group_argument(R"({"type": "cayley", "table": [[0,1],[1,0]]})");
  EXPECT_EQ(build_group(spec).order(), 2u);
}

TEST(CharTableJson, RoundTripIsExact) {
  for (const auto* s : {"symmetric:4", "extraspecial:3", "affine:7", "cyclic:2*symmetric:3"}) {
    SCOPED_TRACE(s);
    const auto t = table_of(s);
    const auto j = char_table_to_json(*t);
    const auto back = char_table_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.dims(), t->dims());
    EXPECT_EQ(back.values(), t->values());
    EXPECT_EQ(char_table_to_json(back).dump(), j.dump());
  }
}

TEST(CharTableJson, RejectsCorruptTable) {
  const auto t = table_of("symmetric:3");
  auto j = char_table_to_json(*t);
  j["values"][2][1] = json::array({0.5, 0.0});
  EXPECT_THROW(char_table_from_json(j), NumericalFailure);
  auto k = char_table_to_json(*t);
  k["dims"] = json::array({1, 1});
  EXPECT_THROW(char_table_from_json(k), InvalidArgument);
}

TEST(RepSelector, Forms) {
  const auto t = table_of("symmetric:4");
  EXPECT_EQ(parse_rep_selector(*t, "all"), all_irreps(*t));
  EXPECT_EQ(parse_rep_selector(*t, "trivial"), trivial_rep(*t));
  EXPECT_EQ(parse_rep_selector(*t, "regular"), regular_rep(*t));
  EXPECT_EQ(parse_rep_selector(*t, "irrep:3"), single_irrep(*t, 3));
  EXPECT_EQ(parse_rep_selector(*t, "dim>=3"), irreps_of_dim_at_least(*t, 3));
  EXPECT_EQ(parse_rep_selector(*t, "irrep:1+irrep:1+trivial"), RepMultiset({1, 2, 0, 0, 0}));
  EXPECT_EQ(parse_rep_selector(*t, R"({"mult": [0, 0, 1, 0, 2]})"), RepMultiset({0, 0, 1, 0, 2}));
  EXPECT_THROW(parse_rep_selector(*t, "irrep:9"), InvalidArgument);
  EXPECT_THROW(parse_rep_selector(*t, "nonsense"), InvalidArgument);
  EXPECT_THROW(parse_rep_selector(*t, R"({"mult": [1]})"), InvalidArgument);
  EXPECT_EQ(rep_from_json(rep_to_json(RepMultiset({0, 3, 0, 1, 0})), 5), RepMultiset({0, 3, 0, 1, 0}));
}

TEST(Reports, Serialize) {
  const auto t = table_of("affine:5");
  const auto rho = single_irrep(*t, 4);
  const auto j = to_json(three_factor_cover(*t, rho, rho, rho));
  EXPECT_TRUE(j["guaranteed"].get<bool>());
  EXPECT_TRUE(j.contains("missing"));
  const auto chain = build_chain(*t, rho);
  const auto mix = mixing_time(chain, Metric::tv, 0.25, 5);
  const auto csv = mixing_csv(mix);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,uniform,tv,tv_l1,start_uniform,start_tv,start_tv_l1");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
  const auto summary = group_summary(t->group(), t->classes());
  EXPECT_EQ(summary["order"], 20);
  EXPECT_EQ(summary["min_nontrivial_class"], 4);
  EXPECT_FALSE(version().empty());
}
