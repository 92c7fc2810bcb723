#include "tqr/char_table.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "tqr/errors.hpp"

namespace tqr {

namespace {

Complex snap(Complex z) {
  double re = z.real(), im = z.imag();
  constexpr double eps = 1e-11;
  if (std::abs(im) < eps) im = 0.0;
  if (std::abs(re - std::round(re)) < eps) re = std::round(re);
  if (std::abs(im - std::round(im)) < eps) im = std::round(im);
  // normalize negative zero
  if (re == 0.0) re = 0.0;
  if (im == 0.0) im = 0.0;
  return {re, im};
}

// Descending lexicographic comparison of character rows with a tolerance.
bool row_before(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  constexpr double tol = 1e-6;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (std::abs(a[c].real() - b[c].real()) > tol) return a[c].real() > b[c].real();
    if (std::abs(a[c].imag() - b[c].imag()) > tol) return a[c].imag() > b[c].imag();
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(std::shared_ptr<const ClassData> classes, std::vector<Complex> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (!classes_) throw InvalidArgument("class function without class data");
  if (values_.size() != classes_->num_classes()) {
    throw InvalidArgument("class function length " + std::to_string(values_.size()) + " does not match " +
                          std::to_string(classes_->num_classes()) + " classes");
  }
}

ClassFunction ClassFunction::zero(std::shared_ptr<const ClassData> classes) {
  const auto r = classes->num_classes();
  return {std::move(classes), std::vector<Complex>(r)};
}

ClassFunction ClassFunction::constant(std::shared_ptr<const ClassData> classes, Complex value) {
  const auto r = classes->num_classes();
  return {std::move(classes), std::vector<Complex>(r, value)};
}

ClassFunction ClassFunction::identity_indicator(std::shared_ptr<const ClassData> classes) {
  auto f = zero(std::move(classes));
  f[0] = 1.0;
  return f;
}

Complex inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (!f.same_group(g)) throw InvalidArgument("inner product of class functions on different groups");
  const auto& cls = f.classes();
  Complex sum = 0.0;
  for (std::size_t c = 0; c < f.size(); ++c) {
    sum += static_cast<double>(cls.sizes[c]) * f[c] * std::conj(g[c]);
  }
  return sum / static_cast<double>(cls.group_order());
}

// ---------------------------------------------------------------------------
// Class matrices

std::vector<std::vector<std::int64_t>> class_multiplication_matrix(const GroupTable& group, const ClassData& classes,
                                                                   ClassId i) {
  const std::size_t r = classes.num_classes();
  if (i >= r) throw InvalidArgument("class index out of range");
  std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t k = 0; k < r; ++k) {
    const Element z = classes.representatives[k];
    for (auto x : classes.classes[i]) {
      const Element y = group.mul(group.inv(x), z);
      ++m[classes.class_of[y]][k];
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// CharTable

CharTable CharTable::compute(GroupTable group, const Limits& limits) {
  return compute(std::make_shared<const GroupTable>(std::move(group)), limits);
}

CharTable CharTable::compute(std::shared_ptr<const GroupTable> group, const Limits& limits) {
  if (group->order() > limits.char_table_cap) {
    throw CapExceeded("character table: order " + std::to_string(group->order()) + " exceeds cap " +
                      std::to_string(limits.char_table_cap));
  }
  auto classes = std::make_shared<const ClassData>(conjugacy_classes(*group));
  const auto r = static_cast<Eigen::Index>(classes->num_classes());
  const double order = static_cast<double>(group->order());

  // S_i = D^{-1/2} M_i D^{1/2} with D = diag(class sizes); then S_i^T = S_{i*}
  // where i* is the inverse class, so the combinations below are Hermitian.
  std::vector<Eigen::MatrixXd> scaled;
  scaled.reserve(static_cast<std::size_t>(r));
  Eigen::VectorXd root(r);
  for (Eigen::Index c = 0; c < r; ++c) root(c) = std::sqrt(static_cast<double>(classes->sizes[c]));
  for (Eigen::Index i = 0; i < r; ++i) {
    const auto m = class_multiplication_matrix(*group, *classes, static_cast<ClassId>(i));
    Eigen::MatrixXd s(r, r);
    for (Eigen::Index j = 0; j < r; ++j) {
      for (Eigen::Index k = 0; k < r; ++k) s(j, k) = static_cast<double>(m[j][k]) * root(k) / root(j);
    }
    scaled.push_back(std::move(s));
  }

  CharTable table;
  table.group_ = group;
  table.classes_ = classes;
  table.tolerance_ = limits.tolerance;

  for (int attempt = 0; attempt < limits.eigen_attempts; ++attempt) {
    std::mt19937_64 rng(limits.seed + static_cast<std::uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(r, r);
    for (Eigen::Index i = 0; i < r; ++i) {
      const Complex c(coef(rng), coef(rng));
      const Complex w = c / static_cast<double>(classes->sizes[i]);
      h += w * scaled[i].cast<Complex>() + std::conj(w) * scaled[i].transpose().cast<Complex>();
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) continue;
    const auto& eig = solver.eigenvalues();
    bool separated = true;
    for (Eigen::Index k = 1; k < r; ++k) {
      if (eig(k) - eig(k - 1) < limits.eigen_separation) separated = false;
    }
    if (!separated) continue;

    std::vector<std::vector<Complex>> rows;
    std::vector<int> dims;
    bool ok = true;
    for (Eigen::Index k = 0; k < r && ok; ++k) {
      Eigen::VectorXcd w = root.cast<Complex>().cwiseProduct(solver.eigenvectors().col(k));
      if (std::abs(w(0)) < 1e-12) {
        ok = false;
        break;
      }
      w /= w(0);
      // w holds the central character |C_i| chi(g_i) / chi(1).
      double norm = 0.0;
      for (Eigen::Index c = 0; c < r; ++c) norm += std::norm(w(c)) / static_cast<double>(classes->sizes[c]);
      const double d_est = std::sqrt(order / norm);
      const auto d = static_cast<int>(std::llround(d_est));
      if (d <= 0 || std::abs(d_est - d) > 1e-6 * std::max(1.0, d_est)) {
        ok = false;
        break;
      }
      std::vector<Complex> row(static_cast<std::size_t>(r));
      for (Eigen::Index c = 0; c < r; ++c) {
        row[c] = snap(static_cast<double>(d) * w(c) / static_cast<double>(classes->sizes[c]));
      }
      row[0] = static_cast<double>(d);
      rows.push_back(std::move(row));
      dims.push_back(d);
    }
    if (!ok) continue;

    std::vector<std::size_t> perm(rows.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (dims[a] != dims[b]) return dims[a] < dims[b];
      return row_before(rows[a], rows[b]);
    });
    table.dims_.clear();
    table.values_.clear();
    for (auto p : perm) {
      table.dims_.push_back(dims[p]);
      table.values_.push_back(rows[p]);
    }
    table.quality_.attempts = attempt + 1;
    try {
      table.certify(limits);
    } catch (const NumericalFailure&) {
      continue;
    }
    return table;
  }
  throw NumericalFailure("character table: no separating class-matrix combination after " +
                         std::to_string(limits.eigen_attempts) + " attempts for " + group->descriptor());
}

CharTable::CharTable(std::shared_ptr<const GroupTable> group, std::shared_ptr<const ClassData> classes,
                     std::vector<int> dims, std::vector<std::vector<Complex>> values, const Limits& limits)
    : group_(std::move(group)),
      classes_(std::move(classes)),
      dims_(std::move(dims)),
      values_(std::move(values)),
      tolerance_(limits.tolerance) {
  const auto r = classes_->num_classes();
  if (dims_.size() != r || values_.size() != r) {
    throw InvalidArgument("character table must have one irrep per class (" + std::to_string(r) + ")");
  }
  for (const auto& row : values_) {
    if (row.size() != r) throw InvalidArgument("character table row has wrong length");
  }
  for (const auto& z : values_[0]) {
    if (std::abs(z - Complex(1.0, 0.0)) > limits.tolerance) throw InvalidArgument("irrep 0 must be the trivial character");
  }
  quality_.attempts = 1;
  certify(limits);
}

void CharTable::certify(const Limits& limits) {
  const std::size_t r = dims_.size();
  const double order = static_cast<double>(group_->order());
  long long sum_sq = 0;
  for (std::size_t l = 0; l < r; ++l) {
    if (dims_[l] <= 0) throw NumericalFailure("non-positive irrep dimension");
    if (std::abs(values_[l][0] - Complex(dims_[l], 0.0)) > limits.tolerance) {
      throw NumericalFailure("character value at the identity differs from the dimension");
    }
    sum_sq += static_cast<long long>(dims_[l]) * dims_[l];
  }
  if (sum_sq != static_cast<long long>(group_->order())) {
    throw NumericalFailure("sum of squared dimensions " + std::to_string(sum_sq) + " differs from |G| = " +
                           std::to_string(group_->order()));
  }
  double row_res = 0.0;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a; b < r; ++b) {
      Complex s = 0.0;
      for (std::size_t c = 0; c < r; ++c) {
        s += static_cast<double>(classes_->sizes[c]) * values_[a][c] * std::conj(values_[b][c]);
      }
      s /= order;
      row_res = std::max(row_res, std::abs(s - Complex(a == b ? 1.0 : 0.0)));
    }
  }
  double col_res = 0.0;
  for (std::size_t c = 0; c < r; ++c) {
    for (std::size_t c2 = c; c2 < r; ++c2) {
      Complex s = 0.0;
      for (std::size_t l = 0; l < r; ++l) s += values_[l][c] * std::conj(values_[l][c2]);
      s *= std::sqrt(static_cast<double>(classes_->sizes[c]) * static_cast<double>(classes_->sizes[c2])) / order;
      col_res = std::max(col_res, std::abs(s - Complex(c == c2 ? 1.0 : 0.0)));
    }
  }
  quality_.row_residual = row_res;
  quality_.column_residual = col_res;
  if (row_res > limits.tolerance || col_res > limits.tolerance) {
    throw NumericalFailure("orthogonality residual (" + std::to_string(row_res) + ", " + std::to_string(col_res) +
                           ") exceeds tolerance");
  }
}

ClassFunction CharTable::character(IrrepId irrep) const { return {classes_, values_.at(irrep)}; }

std::size_t CharTable::min_nontrivial_class_size() const {
  if (!classes_->min_nontrivial_size) throw InvalidArgument("c(G) is undefined for the trivial group");
  return *classes_->min_nontrivial_size;
}

// ---------------------------------------------------------------------------
// Induction

ClassFunction induce_character(const GroupTable& group, std::shared_ptr<const ClassData> classes, const Subgroup& h,
                               std::span<const Complex> theta) {
  if (theta.size() != group.order()) throw InvalidArgument("theta must be given on all elements of G");
  std::vector<char> in(group.order(), 0);
  for (auto x : h.members) {
    if (x >= group.order()) throw InvalidArgument("subgroup member out of range");
    in[x] = 1;
  }
  if (h.members.empty() || !in[group.identity()]) throw InvalidArgument("not a subgroup: identity missing");
  for (auto a : h.members) {
    for (auto b : h.members) {
      if (!in[group.mul(a, b)]) throw InvalidArgument("not a subgroup: not closed under multiplication");
    }
  }
  const auto r = classes->num_classes();
  std::vector<Complex> out(r);
  for (std::size_t c = 0; c < r; ++c) {
    const Element x = classes->representatives[c];
    Complex sum = 0.0;
    for (std::size_t g = 0; g < group.order(); ++g) {
      const Element y = group.conjugate(group.inv(static_cast<Element>(g)), x);
      if (in[y]) sum += theta[y];
    }
    out[c] = sum / static_cast<double>(h.size());
  }
  return {std::move(classes), std::move(out)};
}

ClassFunction induce_character(const CharTable& table, const Subgroup& h, std::span<const Complex> theta) {
  return induce_character(table.group(), table.classes_ptr(), h, theta);
}

std::vector<Complex> lift_to_elements(const ClassFunction& f, const EmbeddedSubgroup& h, std::size_t group_order) {
  std::vector<Complex> out(group_order, 0.0);
  const auto& cls = f.classes();
  for (std::size_t i = 0; i < h.embedding.size(); ++i) out[h.embedding[i]] = f[cls.class_of[i]];
  return out;
}

std::vector<Complex> restrict_to(const ClassFunction& f, const Subgroup& h) {
  std::vector<Complex> out;
  out.reserve(h.size());
  for (auto x : h.members) out.push_back(f[f.classes().class_of[x]]);
  return out;
}

}  // namespace tqr
