#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tqr/char_table.hpp"
#include "tqr/class_functions.hpp"

namespace tqr {

/// |f(e)| > sum_{g != e} |f(g)|, class-size weighted.
bool covering_lemma_check(const CharTable& table, const ClassFunction& f);

struct CoverResult {
  bool guaranteed = false;
  bool actual_cover = false;
  std::vector<double> measures;
  /// Left and right side of the sufficient condition (sum or product vs 1 or c^-1/2).
  double condition_value = 0.0;
  double condition_threshold = 0.0;
  /// Support of the product of the reduced representations.
  RepMultiset product;
  std::vector<IrrepId> missing;
};

/// Guaranteed when M(V1) + M(V2) > 1; actual cover by exact decomposition of V1~ (x) V2~.
CoverResult two_factor_cover(const CharTable& table, const RepMultiset& v1, const RepMultiset& v2);
/// Guaranteed when M(V1) M(V2) M(V3) > c(G)^-1/2. Throws InvalidArgument on the trivial group.
CoverResult three_factor_cover(const CharTable& table, const RepMultiset& v1, const RepMultiset& v2,
                               const RepMultiset& v3);

/// The three terms of the Hoelder estimate behind the three-factor bound:
///   |f1 f2 f3|_1 <= |f1|_2 |f2|_2 |f3|_inf <= c(G)^-1/2
/// with fi the reduced characters off the identity.
struct HolderChain {
  double product_l1 = 0.0;
  double holder = 0.0;
  double class_bound = 0.0;
};
HolderChain holder_chain(const CharTable& table, const RepMultiset& v1, const RepMultiset& v2, const RepMultiset& v3);

struct MultiplicityProfile {
  /// Multiplicity of each irrep in V1~ (x) V2~ (x) V3~.
  std::vector<std::int64_t> multiplicities;
  /// |mult / (|G|^2 a1 a2 a3 dim) - 1|, empty when some a_i is zero.
  std::vector<double> deviation;
  double max_deviation = 0.0;
  /// c(G)^-1/2 / (a1 a2 a3); infinite when some a_i is zero or G is trivial.
  double deviation_bound = 0.0;
};
MultiplicityProfile multiplicity_profile(const CharTable& table, const RepMultiset& v1, const RepMultiset& v2,
                                         const RepMultiset& v3);

/// Supports of tensor products of irreps, as bit sets over Irrep(G).
class FusionSupport {
 public:
  using Bits = std::vector<std::uint64_t>;

  explicit FusionSupport(const CharTable& table);

  std::size_t num_irreps() const { return num_irreps_; }
  Bits empty() const { return Bits(words_, 0); }
  Bits full() const;
  Bits from_support(const std::vector<IrrepId>& support) const;
  std::vector<IrrepId> members(const Bits& bits) const;
  /// supp(A (x) B) for A, B sets of irreps.
  Bits tensor(const Bits& a, const Bits& b) const;
  /// supp(A^{(x) m}), m >= 1.
  Bits power(const Bits& a, int m) const;
  bool is_full(const Bits& bits) const;

 private:
  std::size_t num_irreps_;
  std::size_t words_;
  /// pair_[l * r + k] = supp(l (x) k)
  std::vector<Bits> pair_;
};

enum class Verdict { holds, fails, error };
std::string verdict_name(Verdict v);

struct CriterionReport {
  std::string id;
  nlohmann::json parameters = nlohmann::json::object();
  Verdict verdict = Verdict::holds;
  /// How the verdict was reached: "exact", "exhaustive", "sampled", ...
  std::string mode;
  /// The violating object when the verdict is `fails`; null otherwise.
  nlohmann::json witness;
  std::string note;
};

struct TqrParams {
  /// k: TQR1 threshold on c(G).
  std::size_t class_threshold = 4;
  /// a: minimal Plancherel measure in TQR2 and TQR3.
  double density = 0.1;
  /// m: tensor power in TQR3.
  int power = 3;
  /// Threshold on M(V^m) in TQR3.
  double half = 0.5;
  /// k1, k2 for TQR4; default to k.
  std::optional<std::size_t> normal_size;
  std::optional<std::size_t> index;
  std::uint64_t seed = Limits{}.seed;
  /// Supports are enumerated exhaustively up to this many irreps.
  std::size_t exhaustive_irreps = 20;
  /// Largest number of support triples checked exhaustively in TQR2.
  std::size_t exhaustive_triples = 2'000'000;
  std::size_t samples = 1000;
};

/// TQR1..TQR4, in that order. Cap violations turn into `error` reports.
std::vector<CriterionReport> check_tqr(const CharTable& table, const TqrParams& params = {},
                                       const Limits& limits = {});

struct QrParams {
  /// k: QR1 threshold on the minimal non-trivial dimension, QR4 threshold on quotient size.
  std::size_t threshold = 4;
  double density = 0.1;
  int power = 3;
  std::uint64_t seed = Limits{}.seed;
  std::size_t samples = 1000;
  /// Largest order for the product-set searches.
  std::size_t product_cap = 2000;
};

/// QR1..QR4, in that order.
std::vector<CriterionReport> check_qr(const CharTable& table, const QrParams& params = {}, const Limits& limits = {});

/// Non-trivial proper quotients G/N of G with their orders and commutativity.
struct QuotientInfo {
  Subgroup kernel;
  std::size_t order = 0;
  bool abelian = false;
};
std::vector<QuotientInfo> proper_quotients(const GroupTable& group, const ClassData& classes,
                                           const Limits& limits = {});

}  // namespace tqr
