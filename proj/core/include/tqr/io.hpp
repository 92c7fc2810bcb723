#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tqr/char_table.hpp"
#include "tqr/class_functions.hpp"
#include "tqr/counterexample.hpp"
#include "tqr/criteria.hpp"
#include "tqr/group.hpp"
#include "tqr/markov.hpp"

namespace tqr {

using json = nlohmann::json;

/// Library version string.
std::string version();

// Group specs ---------------------------------------------------------------
//   {"family": "affine", "params": {"p": 5}}
//   {"family": "direct", "params": {"left": <spec>, "right": <spec>}}
//   {"type": "cayley", "table": [[int]]}
//   {"type": "permutation", "degree": d, "generators": [[int]]}

json group_spec_to_json(const GroupSpec& spec);
/// Throws InvalidGroup on malformed input.
GroupSpec group_spec_from_json(const json& j);
/// "family:affine:5", "affine:5", "family:quaternion8", "cyclic:2*symmetric:4".
GroupSpec parse_group_shorthand(std::string_view text);
/// Shorthand, inline JSON (starting with '{'), or a path to a JSON file.
GroupSpec parse_group_argument(const std::string& text);
/// The spec a table was built from, or its Cayley table for derived groups.
GroupSpec spec_of(const GroupTable& group);

// Character tables ----------------------------------------------------------
//   {"group": <spec>, "class_sizes": [int], "class_reps": [int], "dims": [int],
//    "values": [[[re, im]]]}

json char_table_to_json(const CharTable& table);
/// Rebuilds the group from its spec, matches columns through the class
/// representatives and certifies the values. Throws InvalidArgument or
/// NumericalFailure when the file does not describe a character table.
CharTable char_table_from_json(const json& j, const Limits& limits = {});

// Representations -----------------------------------------------------------

json rep_to_json(const RepMultiset& v);
RepMultiset rep_from_json(const json& j, std::size_t num_irreps);
/// "all", "trivial", "regular", "irrep:<k>", "dim>=<d>", "{"mult": [...]}",
/// and sums of these joined by '+'. Throws InvalidArgument.
RepMultiset parse_rep_selector(const CharTable& table, std::string_view text);

// Reports -------------------------------------------------------------------

json to_json(const CriterionReport& r);
json to_json(const CoverResult& r);
json to_json(const HolderChain& r);
json to_json(const MultiplicityProfile& r);
json to_json(const ChainModel& r);
json to_json(const Distances& r);
json to_json(const MixingReport& r);
json to_json(const CorollaryReport& r);
json to_json(const SmallDoublingResult& r);
json to_json(const CounterexampleReport& r);
json to_json(const PartitionBlock& r);
json to_json(const VThetaPartitionReport& r);
json to_json(const OrbitPartitionReport& r);
json to_json(const TranslateCover<LatticePoint>& r);
json to_json(const TranslateCover<Element>& r);

/// Orders, class sizes, c(G), center and labels.
json group_summary(const GroupTable& group, const ClassData& classes);

/// Distance curve as CSV: t,uniform,tv,tv_l1,start_uniform,start_tv,start_tv_l1
std::string mixing_csv(const MixingReport& r);

}  // namespace tqr
