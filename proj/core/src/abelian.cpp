#include "tqr/abelian.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

#include "tqr/errors.hpp"

namespace tqr {

namespace {

constexpr Element kNone = static_cast<Element>(-1);

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime_power_of(std::size_t n, std::size_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
  order_ = 1;
  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    if (factors_[i] == 0) throw InvalidArgument("cyclic factor must be positive");
    strides_[i] = order_;
    order_ *= factors_[i];
  }
}

std::vector<std::uint32_t> AbelianGroup::coordinates(Element x) const {
  std::vector<std::uint32_t> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = static_cast<std::uint32_t>((x / strides_[i]) % factors_[i]);
  return out;
}

Element AbelianGroup::element(std::span<const std::int64_t> coordinates) const {
  if (coordinates.size() != factors_.size()) throw InvalidArgument("coordinate tuple has wrong rank");
  std::size_t x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto n = static_cast<std::int64_t>(factors_[i]);
    x += static_cast<std::size_t>(((coordinates[i] % n) + n) % n) * strides_[i];
  }
  return static_cast<Element>(x);
}

Element AbelianGroup::add(Element a, Element b) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::size_t da = (a / strides_[i]) % factors_[i];
    const std::size_t db = (b / strides_[i]) % factors_[i];
    x += ((da + db) % factors_[i]) * strides_[i];
  }
  return static_cast<Element>(x);
}

Element AbelianGroup::neg(Element a) const {
  std::size_t x = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::size_t da = (a / strides_[i]) % factors_[i];
    x += ((factors_[i] - da) % factors_[i]) * strides_[i];
  }
  return static_cast<Element>(x);
}

Element AbelianGroup::multiple(Element a, std::int64_t k) const {
  auto c = coordinates(a);
  std::vector<std::int64_t> scaled(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) scaled[i] = static_cast<std::int64_t>(c[i]) * k;
  return element(scaled);
}

// ---------------------------------------------------------------------------
// AutAction

AutAction::AutAction(const AbelianGroup& group, const std::vector<std::vector<Element>>& maps)
    : group_order_(group.order()) {
  const std::size_t n = group.order();
  for (const auto& m : maps) {
    if (m.size() != n) throw InvalidArgument("automorphism must map every element");
    std::vector<char> seen(n, 0);
    for (auto y : m) {
      if (y >= n || seen[y]) throw InvalidArgument("automorphism is not a bijection");
      seen[y] = 1;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (m[group.add(static_cast<Element>(a), static_cast<Element>(b))] != group.add(m[a], m[b])) {
          throw InvalidArgument("map does not preserve addition");
        }
      }
    }
  }
  std::vector<Element> id(n);
  std::iota(id.begin(), id.end(), Element{0});
  std::set<std::vector<Element>> seen{id};
  maps_.push_back(id);
  for (std::size_t head = 0; head < maps_.size(); ++head) {
    for (const auto& g : maps) {
      std::vector<Element> composed(n);
      for (std::size_t x = 0; x < n; ++x) composed[x] = g[maps_[head][x]];
      if (seen.insert(composed).second) maps_.push_back(std::move(composed));
    }
  }
}

AutAction AutAction::trivial(const AbelianGroup& group) { return AutAction(group, {}); }

std::vector<Element> AutAction::orbit(Element a) const {
  std::vector<Element> out;
  out.reserve(maps_.size());
  for (const auto& m : maps_) out.push_back(m[a]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Element>> AutAction::orbits() const {
  std::vector<char> done(group_order_, 0);
  std::vector<std::vector<Element>> out;
  for (std::size_t a = 0; a < group_order_; ++a) {
    if (done[a]) continue;
    auto o = orbit(static_cast<Element>(a));
    for (auto x : o) done[x] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool AutAction::is_invariant(std::span<const Element> set) const {
  std::vector<char> in(group_order_, 0);
  for (auto x : set) in[x] = 1;
  for (const auto& m : maps_) {
    for (auto x : set) {
      if (!in[m[x]]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// DualGroup

DualGroup::DualGroup(AbelianGroup group) : group_(std::move(group)), lcm_(1) {
  for (auto n : group_.factors()) lcm_ = std::lcm(lcm_, static_cast<std::int64_t>(n));
}

std::int64_t DualGroup::phase(Element theta, Element x) const {
  const auto t = group_.coordinates(theta);
  const auto k = group_.coordinates(x);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::int64_t w = lcm_ / group_.factors()[i];
    acc = (acc + static_cast<std::int64_t>(t[i]) * k[i] % group_.factors()[i] * w) % lcm_;
  }
  return acc;
}

std::complex<double> DualGroup::evaluate(Element theta, Element x) const {
  const auto p = phase(theta, x);
  if (p == 0) return {1.0, 0.0};
  if (2 * p == lcm_) return {-1.0, 0.0};
  if (4 * p == lcm_) return {0.0, 1.0};
  if (4 * p == 3 * lcm_) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(lcm_);
  return {std::cos(angle), std::sin(angle)};
}

AutAction DualGroup::dual_action(const AutAction& action) const {
  const std::size_t r = group_.rank();
  // Images of the standard generators e_j.
  std::vector<Element> basis(r);
  for (std::size_t j = 0; j < r; ++j) {
    std::vector<std::int64_t> e(r, 0);
    e[j] = 1;
    basis[j] = group_.element(e);
  }
  std::vector<std::vector<Element>> dual_maps;
  for (const auto& sigma : action.maps()) {
    std::vector<Element> m(group_.order());
    for (std::size_t theta = 0; theta < group_.order(); ++theta) {
      std::vector<std::int64_t> coords(r);
      for (std::size_t j = 0; j < r; ++j) {
        const std::int64_t ph = phase(static_cast<Element>(theta), sigma[basis[j]]);
        const std::int64_t unit = lcm_ / group_.factors()[j];
        if (ph % unit != 0) throw NumericalFailure("dual action produced a non-character");
        coords[j] = ph / unit;
      }
      m[theta] = group_.element(coords);
    }
    dual_maps.push_back(std::move(m));
  }
  return AutAction(group_, dual_maps);
}

// ---------------------------------------------------------------------------
// Sumsets

std::vector<Element> m_fold_sumset(const AbelianGroup& group, std::span<const Element> set, int m) {
  if (m < 1) throw InvalidArgument("sumset order must be at least 1");
  const std::size_t n = group.order();
  std::vector<char> cur(n, 0);
  for (auto x : set) {
    if (x >= n) throw InvalidArgument("sumset element out of range");
    cur[x] = 1;
  }
  std::vector<Element> base(set.begin(), set.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  for (int step = 1; step < m; ++step) {
    std::vector<char> next(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (!cur[x]) continue;
      for (auto b : base) next[group.add(static_cast<Element>(x), b)] = 1;
    }
    cur = std::move(next);
  }
  std::vector<Element> out;
  for (std::size_t x = 0; x < n; ++x) {
    if (cur[x]) out.push_back(static_cast<Element>(x));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition of abelian subgroups

AbelianDecomposition decompose_abelian(const GroupTable& group, const Subgroup& subgroup) {
  for (auto a : subgroup.members) {
    for (auto b : subgroup.members) {
      if (group.mul(a, b) != group.mul(b, a)) throw InvalidArgument("subgroup is not abelian");
    }
  }
  const std::size_t order = subgroup.size();
  std::vector<Element> basis;
  std::vector<std::uint32_t> factors;

  for (auto p : prime_factors(order)) {
    std::vector<Element> sylow;
    for (auto x : subgroup.members) {
      if (is_prime_power_of(group.element_order(x), p)) sylow.push_back(x);
    }
    // span: element -> coordinates over the p-basis found so far
    std::map<Element, std::vector<std::int64_t>> span{{group.identity(), {}}};
    std::vector<Element> local_basis;
    std::vector<std::size_t> local_orders;
    while (span.size() < sylow.size()) {
      Element best = kNone;
      std::size_t best_order = 0;
      for (auto h : sylow) {
        std::size_t t = 1;
        Element y = h;
        while (span.find(y) == span.end()) {
          y = group.mul(y, h);
          ++t;
        }
        if (t > best_order) {
          best_order = t;
          best = h;
        }
      }
      // Adjust the lift so that its order equals its coset order.
      const auto& c = span.at(group.power(best, best_order));
      Element h = best;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] % static_cast<std::int64_t>(best_order) != 0) {
          throw NumericalFailure("abelian decomposition: coset lift is not divisible");
        }
        const auto k = c[i] / static_cast<std::int64_t>(best_order);
        const auto ord = static_cast<std::int64_t>(local_orders[i]);
        const auto e = static_cast<std::uint64_t>(((-k) % ord + ord) % ord);
        h = group.mul(h, group.power(local_basis[i], e));
      }
      if (group.power(h, best_order) != group.identity()) {
        throw NumericalFailure("abelian decomposition: adjusted generator has the wrong order");
      }
      std::map<Element, std::vector<std::int64_t>> grown;
      for (const auto& [x, coords] : span) {
        Element y = x;
        for (std::size_t j = 0; j < best_order; ++j) {
          auto cj = coords;
          cj.push_back(static_cast<std::int64_t>(j));
          if (!grown.emplace(y, std::move(cj)).second) {
            throw NumericalFailure("abelian decomposition: generators are not independent");
          }
          y = group.mul(y, h);
        }
      }
      span = std::move(grown);
      local_basis.push_back(h);
      local_orders.push_back(best_order);
    }
    basis.insert(basis.end(), local_basis.begin(), local_basis.end());
    for (auto o : local_orders) factors.push_back(static_cast<std::uint32_t>(o));
  }

  AbelianGroup abelian(factors);
  std::vector<Element> to_ambient(abelian.order());
  std::vector<Element> from_ambient(group.order(), kNone);
  for (std::size_t x = 0; x < abelian.order(); ++x) {
    const auto coords = abelian.coordinates(static_cast<Element>(x));
    Element y = group.identity();
    for (std::size_t i = 0; i < coords.size(); ++i) y = group.mul(y, group.power(basis[i], coords[i]));
    to_ambient[x] = y;
    if (from_ambient[y] != kNone) throw NumericalFailure("abelian decomposition is not injective");
    from_ambient[y] = static_cast<Element>(x);
  }
  if (abelian.order() != order) throw NumericalFailure("abelian decomposition has the wrong order");
  return {std::move(abelian), std::move(to_ambient), std::move(from_ambient)};
}

}  // namespace tqr
