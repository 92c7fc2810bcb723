#pragma once

#include <cstddef>
#include <cstdint>

namespace tqr {

/// Size caps and numerical tolerances shared by all modules.
///
/// The defaults are sized for desk-scale groups; the CLI reads overrides from
/// the environment (see tools/).
struct Limits {
  /// Largest order for which a dense Cayley table is built.
  std::size_t max_order = 2000;
  /// Associativity is checked on all triples up to this order, sampled above it.
  std::size_t exhaustive_associativity = 256;
  std::size_t associativity_samples = 20000;
  /// Largest order for normal subgroup enumeration.
  std::size_t normal_subgroup_cap = 2000;
  /// Largest order for character table computation.
  std::size_t char_table_cap = 2000;
  /// Rounding tolerance for integer certification and orthogonality residuals.
  double tolerance = 1e-8;
  /// Eigenvalue separation required by the class-matrix diagonalization.
  double eigen_separation = 1e-6;
  /// Number of random re-combinations tried before giving up on separation.
  int eigen_attempts = 16;
  /// Seed for the random class-matrix combination and sampled checks.
  std::uint64_t seed = 0x5eed'7a61'e000'0001ULL;
};

}  // namespace tqr
