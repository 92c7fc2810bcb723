#include "tqr/class_functions.hpp"

#include <algorithm>
#include <cmath>

#include "tqr/errors.hpp"

namespace tqr {

namespace {

void require_size(const CharTable& table, const RepMultiset& v) {
  if (v.size() != table.num_irreps()) {
    throw InvalidArgument("representation has " + std::to_string(v.size()) + " multiplicities, table has " +
                          std::to_string(table.num_irreps()) + " irreps");
  }
}

}  // namespace

RepMultiset::RepMultiset(std::vector<std::int64_t> mult) : mult_(std::move(mult)) {
  for (auto m : mult_) {
    if (m < 0) throw InvalidArgument("multiplicities must be non-negative");
  }
}

RepMultiset RepMultiset::zero(std::size_t num_irreps) { return RepMultiset(std::vector<std::int64_t>(num_irreps, 0)); }

RepMultiset RepMultiset::from_support(std::size_t num_irreps, const std::vector<IrrepId>& support) {
  std::vector<std::int64_t> m(num_irreps, 0);
  for (auto l : support) {
    if (l >= num_irreps) throw InvalidArgument("irrep index " + std::to_string(l) + " out of range");
    m[l] = 1;
  }
  return RepMultiset(std::move(m));
}

RepMultiset RepMultiset::from_mask(const std::vector<bool>& mask) {
  std::vector<std::int64_t> m(mask.size(), 0);
  for (std::size_t l = 0; l < mask.size(); ++l) m[l] = mask[l] ? 1 : 0;
  return RepMultiset(std::move(m));
}

std::vector<IrrepId> RepMultiset::support() const {
  std::vector<IrrepId> out;
  for (std::size_t l = 0; l < mult_.size(); ++l) {
    if (mult_[l] > 0) out.push_back(static_cast<IrrepId>(l));
  }
  return out;
}

std::vector<bool> RepMultiset::support_mask() const {
  std::vector<bool> out(mult_.size());
  for (std::size_t l = 0; l < mult_.size(); ++l) out[l] = mult_[l] > 0;
  return out;
}

bool RepMultiset::is_zero() const {
  return std::all_of(mult_.begin(), mult_.end(), [](std::int64_t m) { return m == 0; });
}

bool RepMultiset::covers() const {
  return std::all_of(mult_.begin(), mult_.end(), [](std::int64_t m) { return m > 0; });
}

RepMultiset all_irreps(const CharTable& table) {
  return RepMultiset(std::vector<std::int64_t>(table.num_irreps(), 1));
}

RepMultiset trivial_rep(const CharTable& table) { return single_irrep(table, 0); }

RepMultiset single_irrep(const CharTable& table, IrrepId l) {
  if (l >= table.num_irreps()) {
    throw InvalidArgument("irrep " + std::to_string(l) + " out of range (" + std::to_string(table.num_irreps()) +
                          " irreps)");
  }
  return RepMultiset::from_support(table.num_irreps(), {l});
}

RepMultiset irreps_of_dim_at_least(const CharTable& table, int d) {
  std::vector<std::int64_t> m(table.num_irreps(), 0);
  for (std::size_t l = 0; l < m.size(); ++l) m[l] = table.dim(static_cast<IrrepId>(l)) >= d ? 1 : 0;
  return RepMultiset(std::move(m));
}

RepMultiset regular_rep(const CharTable& table) {
  std::vector<std::int64_t> m(table.dims().begin(), table.dims().end());
  return RepMultiset(std::move(m));
}

std::vector<double> plancherel_measure(const CharTable& table) {
  std::vector<double> out;
  out.reserve(table.num_irreps());
  const double order = static_cast<double>(table.group_order());
  for (auto d : table.dims()) out.push_back(static_cast<double>(d) * d / order);
  return out;
}

double plancherel(const CharTable& table, const RepMultiset& v) {
  require_size(table, v);
  long long sum = 0;
  for (std::size_t l = 0; l < v.size(); ++l) {
    if (v[static_cast<IrrepId>(l)] > 0) sum += static_cast<long long>(table.dims()[l]) * table.dims()[l];
  }
  return static_cast<double>(sum) / static_cast<double>(table.group_order());
}

ClassFunction character_of(const CharTable& table, const RepMultiset& v) {
  require_size(table, v);
  std::vector<Complex> out(table.num_classes(), 0.0);
  for (std::size_t l = 0; l < v.size(); ++l) {
    const auto m = v[static_cast<IrrepId>(l)];
    if (m == 0) continue;
    for (std::size_t c = 0; c < out.size(); ++c) out[c] += static_cast<double>(m) * table.values()[l][c];
  }
  return {table.classes_ptr(), std::move(out)};
}

RepMultiset reduce(const CharTable& table, const RepMultiset& v) {
  require_size(table, v);
  std::vector<std::int64_t> m(v.size(), 0);
  for (std::size_t l = 0; l < v.size(); ++l) m[l] = v[static_cast<IrrepId>(l)] > 0 ? table.dims()[l] : 0;
  return RepMultiset(std::move(m));
}

ClassFunction reduced_character(const CharTable& table, const RepMultiset& v) {
  return scale(character_of(table, reduce(table, v)), 1.0 / static_cast<double>(table.group_order()));
}

std::pair<Complex, ClassFunction> split_off_identity(const ClassFunction& f) {
  ClassFunction rest = f;
  const Complex at_e = f[0];
  rest[0] = 0.0;
  return {at_e, std::move(rest)};
}

double lp_norm(const ClassFunction& f, Norm p) {
  const auto& cls = f.classes();
  double acc = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c) {
    const double a = std::abs(f[static_cast<ClassId>(c)]);
    const double w = static_cast<double>(cls.sizes[c]);
    switch (p) {
      case Norm::l1: acc += w * a; break;
      case Norm::l2: acc += w * a * a; break;
      case Norm::linf: acc = std::max(acc, a); break;
    }
  }
  return p == Norm::l2 ? std::sqrt(acc) : acc;
}

std::vector<Complex> inner_products(const CharTable& table, const ClassFunction& f) {
  if (f.classes_ptr() != table.classes_ptr()) throw InvalidArgument("class function belongs to another group");
  std::vector<Complex> out;
  out.reserve(table.num_irreps());
  for (std::size_t l = 0; l < table.num_irreps(); ++l) {
    out.push_back(inner_product(f, table.character(static_cast<IrrepId>(l))));
  }
  return out;
}

RepMultiset decompose(const CharTable& table, const ClassFunction& f) {
  const double tol = table.tolerance();
  const auto ips = inner_products(table, f);
  std::vector<std::int64_t> mult(ips.size());
  for (std::size_t l = 0; l < ips.size(); ++l) {
    const double re = ips[l].real();
    const double scale_l = std::max(1.0, std::abs(re));
    const auto rounded = std::llround(re);
    if (std::abs(ips[l].imag()) > tol * scale_l || std::abs(re - static_cast<double>(rounded)) > tol * scale_l) {
      throw NotACharacter("inner product with irrep " + std::to_string(l) + " is " + std::to_string(re) + " + " +
                          std::to_string(ips[l].imag()) + "i, not an integer");
    }
    if (rounded < 0) {
      throw NotACharacter("negative multiplicity " + std::to_string(rounded) + " for irrep " + std::to_string(l));
    }
    mult[l] = rounded;
  }
  RepMultiset v(std::move(mult));
  const auto back = character_of(table, v);
  double fmax = 1.0;
  for (auto z : f.values()) fmax = std::max(fmax, std::abs(z));
  for (std::size_t c = 0; c < f.size(); ++c) {
    if (std::abs(back[static_cast<ClassId>(c)] - f[static_cast<ClassId>(c)]) > tol * fmax) {
      throw NotACharacter("reconstruction from rounded multiplicities does not reproduce the class function");
    }
  }
  return v;
}

ClassFunction tensor(const ClassFunction& f, const ClassFunction& g) {
  if (!f.same_group(g)) throw InvalidArgument("tensor product of class functions on different groups");
  std::vector<Complex> out(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) out[c] = f[static_cast<ClassId>(c)] * g[static_cast<ClassId>(c)];
  return {f.classes_ptr(), std::move(out)};
}

ClassFunction direct_sum(const ClassFunction& f, const ClassFunction& g) {
  if (!f.same_group(g)) throw InvalidArgument("direct sum of class functions on different groups");
  std::vector<Complex> out(f.size());
  for (std::size_t c = 0; c < f.size(); ++c) out[c] = f[static_cast<ClassId>(c)] + g[static_cast<ClassId>(c)];
  return {f.classes_ptr(), std::move(out)};
}

ClassFunction scale(const ClassFunction& f, Complex s) {
  std::vector<Complex> out(f.values());
  for (auto& z : out) z *= s;
  return {f.classes_ptr(), std::move(out)};
}

ClassFunction tensor_power(const ClassFunction& f, int m) {
  if (m < 0) throw InvalidArgument("tensor power must be non-negative");
  auto out = ClassFunction::constant(f.classes_ptr(), 1.0);
  for (int i = 0; i < m; ++i) out = tensor(out, f);
  return out;
}

RepMultiset tensor_product(const CharTable& table, const RepMultiset& v, const RepMultiset& w) {
  return decompose(table, tensor(character_of(table, v), character_of(table, w)));
}

RepMultiset tensor_power_support(const CharTable& table, const RepMultiset& v, int m) {
  if (m < 1) throw InvalidArgument("tensor power support needs m >= 1");
  const auto base = character_of(table, reduce(table, v));
  auto cur = RepMultiset::from_mask(v.support_mask());
  for (int i = 1; i < m; ++i) {
    if (cur.is_zero()) break;
    const auto prod = decompose(table, tensor(character_of(table, reduce(table, cur)), base));
    cur = RepMultiset::from_mask(prod.support_mask());
  }
  return cur;
}

}  // namespace tqr
