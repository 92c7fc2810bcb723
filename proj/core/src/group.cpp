#include "tqr/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tqr/errors.hpp"

namespace tqr {

namespace {

constexpr Element kNone = static_cast<Element>(-1);

std::string cycle_label(const std::vector<Element>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::ostringstream out;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = 1;
      if (!first) out << ' ';
      out << x;
      first = false;
      x = perm[x];
    }
    out << ')';
  }
  auto s = out.str();
  return s.empty() ? "()" : s;
}

struct VectorHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

void require_order(std::size_t order, const Limits& limits, const std::string& what) {
  if (order > limits.max_order) {
    throw CapExceeded(what + ": order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(limits.max_order));
  }
}

std::vector<Element> sorted_members(const std::vector<char>& in) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

}  // namespace

GroupSpec GroupSpec::make_family(Family f, long parameter) {
  GroupSpec s;
  s.kind = Kind::family;
  s.family = f;
  s.parameter = parameter;
  return s;
}

GroupSpec GroupSpec::direct_product(GroupSpec left, GroupSpec right) {
  GroupSpec s;
  s.kind = Kind::family;
  s.family = Family::direct;
  s.parameter = 0;
  s.factors.push_back(std::move(left));
  s.factors.push_back(std::move(right));
  return s;
}

GroupSpec GroupSpec::cayley(std::vector<std::vector<Element>> table) {
  GroupSpec s;
  s.kind = Kind::cayley;
  s.parameter = 0;
  s.table = std::move(table);
  return s;
}

GroupSpec GroupSpec::permutations(std::size_t degree, std::vector<std::vector<Element>> generators) {
  GroupSpec s;
  s.kind = Kind::permutation;
  s.parameter = 0;
  s.degree = degree;
  s.generators = std::move(generators);
  return s;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::dihedral: return "dihedral";
    case Family::symmetric: return "symmetric";
    case Family::alternating: return "alternating";
    case Family::quaternion8: return "quaternion8";
    case Family::extraspecial: return "extraspecial";
    case Family::affine: return "affine";
    case Family::direct: return "direct";
  }
  return "unknown";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (auto f : {Family::cyclic, Family::dihedral, Family::symmetric, Family::alternating, Family::quaternion8,
                 Family::extraspecial, Family::affine, Family::direct}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::string describe(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cayley:
      return "cayley:" + std::to_string(spec.table.size());
    case GroupSpec::Kind::permutation:
      return "permutation:" + std::to_string(spec.degree) + ":" + std::to_string(spec.generators.size());
    case GroupSpec::Kind::family:
      break;
  }
  if (spec.family == Family::direct) {
    if (spec.factors.size() != 2) return "family:direct";
    return describe(spec.factors[0]) + "*" + describe(spec.factors[1]);
  }
  if (spec.family == Family::quaternion8) return "family:quaternion8";
  return "family:" + family_name(spec.family) + ":" + std::to_string(spec.parameter);
}

// ---------------------------------------------------------------------------
// GroupTable

GroupTable::GroupTable(std::size_t order, std::vector<Element> products, std::vector<std::string> labels,
                       std::string descriptor, std::optional<GroupSpec> spec)
    : order_(order),
      products_(std::move(products)),
      labels_(std::move(labels)),
      descriptor_(std::move(descriptor)),
      spec_(std::move(spec)) {
  if (order_ == 0) throw InvalidGroup("group must have at least one element");
  if (products_.size() != order_ * order_) throw InvalidGroup("product table has wrong size");
  for (auto p : products_) {
    if (p >= order_) throw InvalidGroup("product table entry out of range");
  }
  // Latin square rows and columns.
  std::vector<char> seen(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order_; ++b) {
      auto p = products_[a * order_ + b];
      if (seen[p]) throw InvalidGroup("row " + std::to_string(a) + " repeats an element");
      seen[p] = 1;
    }
  }
  for (std::size_t b = 0; b < order_; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < order_; ++a) {
      auto p = products_[a * order_ + b];
      if (seen[p]) throw InvalidGroup("column " + std::to_string(b) + " repeats an element");
      seen[p] = 1;
    }
  }
  identity_ = kNone;
  for (std::size_t e = 0; e < order_ && identity_ == kNone; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < order_ && ok; ++x) {
      ok = products_[e * order_ + x] == x && products_[x * order_ + e] == x;
    }
    if (ok) identity_ = static_cast<Element>(e);
  }
  if (identity_ == kNone) throw InvalidGroup("no two-sided identity");
  inverses_.assign(order_, kNone);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      if (products_[a * order_ + b] == identity_) {
        if (products_[b * order_ + a] != identity_) throw InvalidGroup("left and right inverses differ");
        inverses_[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  if (labels_.empty()) {
    labels_.reserve(order_);
    for (std::size_t i = 0; i < order_; ++i) labels_.push_back(std::to_string(i));
  }
  if (labels_.size() != order_) throw InvalidGroup("label count does not match order");
}

Element GroupTable::power(Element a, std::uint64_t e) const {
  Element result = identity_;
  Element base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::size_t GroupTable::element_order(Element a) const {
  std::size_t k = 1;
  Element x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool GroupTable::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (products_[a * order_ + b] != products_[b * order_ + a]) return false;
    }
  }
  return true;
}

void GroupTable::validate(const Limits& limits) const {
  auto fail = [](std::size_t a, std::size_t b, std::size_t c) {
    throw InvalidGroup("non-associative triple (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                       std::to_string(c) + ")");
  };
  if (order_ <= limits.exhaustive_associativity) {
    for (std::size_t a = 0; a < order_; ++a) {
      for (std::size_t b = 0; b < order_; ++b) {
        const Element ab = mul(static_cast<Element>(a), static_cast<Element>(b));
        for (std::size_t c = 0; c < order_; ++c) {
          if (mul(ab, static_cast<Element>(c)) !=
              mul(static_cast<Element>(a), mul(static_cast<Element>(b), static_cast<Element>(c)))) {
            fail(a, b, c);
          }
        }
      }
    }
    return;
  }
  std::mt19937_64 rng(limits.seed);
  std::uniform_int_distribution<std::size_t> pick(0, order_ - 1);
  for (std::size_t i = 0; i < limits.associativity_samples; ++i) {
    auto a = static_cast<Element>(pick(rng));
    auto b = static_cast<Element>(pick(rng));
    auto c = static_cast<Element>(pick(rng));
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail(a, b, c);
  }
}

// ---------------------------------------------------------------------------
// Constructors

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

GroupTable make_cyclic(std::size_t n) {
  if (n == 0) throw InvalidGroup("cyclic group needs n >= 1");
  std::vector<Element> t(n * n);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Element>((a + b) % n);
  }
  return {n, std::move(t), std::move(labels), "family:cyclic:" + std::to_string(n),
          GroupSpec::make_family(Family::cyclic, static_cast<long>(n))};
}

GroupTable make_dihedral(std::size_t n) {
  if (n == 0) throw InvalidGroup("dihedral group needs n >= 1");
  const std::size_t order = 2 * n;
  // index e*n + i stands for s^e r^i, with r^i s = s r^-i.
  std::vector<Element> t(order * order);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t e = x / n, i = x % n;
    labels.push_back((e ? std::string("sr^") : std::string("r^")) + std::to_string(i));
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t f = y / n, j = y % n;
      std::size_t exp = f ? (n - i + j) % n : (i + j) % n;
      t[x * order + y] = static_cast<Element>(((e + f) % 2) * n + exp);
    }
  }
  return {order, std::move(t), std::move(labels), "family:dihedral:" + std::to_string(n),
          GroupSpec::make_family(Family::dihedral, static_cast<long>(n))};
}

GroupTable make_permutation_group(std::size_t degree, const std::vector<std::vector<Element>>& generators,
                                  const Limits& limits) {
  for (const auto& g : generators) {
    if (g.size() != degree) throw InvalidGroup("generator length does not match degree");
    std::vector<char> seen(degree, 0);
    for (auto x : g) {
      if (x >= degree || seen[x]) throw InvalidGroup("generator is not a permutation");
      seen[x] = 1;
    }
  }
  std::vector<Element> id(degree);
  std::iota(id.begin(), id.end(), Element{0});
  std::vector<std::vector<Element>> elements{id};
  std::unordered_map<std::vector<Element>, Element, VectorHash> index{{id, 0}};
  auto compose = [degree](const std::vector<Element>& p, const std::vector<Element>& q) {
    std::vector<Element> r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = p[q[x]];
    return r;
  };
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      auto next = compose(elements[head], g);
      if (index.find(next) == index.end()) {
        if (elements.size() + 1 > limits.max_order) {
          throw CapExceeded("permutation closure exceeds order cap " + std::to_string(limits.max_order));
        }
        index.emplace(next, static_cast<Element>(elements.size()));
        elements.push_back(std::move(next));
      }
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> t(n * n);
  std::vector<Element> scratch(degree);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < degree; ++x) scratch[x] = elements[a][elements[b][x]];
      t[a * n + b] = index.at(scratch);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elements) labels.push_back(cycle_label(e));
  return {n, std::move(t), std::move(labels),
          "permutation:" + std::to_string(degree) + ":" + std::to_string(generators.size()),
          GroupSpec::permutations(degree, generators)};
}

GroupTable make_symmetric(std::size_t n, const Limits& limits) {
  if (n == 0) throw InvalidGroup("symmetric group needs n >= 1");
  std::vector<std::vector<Element>> gens;
  if (n >= 2) {
    std::vector<Element> swap(n), cycle(n);
    std::iota(swap.begin(), swap.end(), Element{0});
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < n; ++i) cycle[i] = static_cast<Element>((i + 1) % n);
    gens.push_back(swap);
    if (n > 2) gens.push_back(cycle);
  }
  auto g = make_permutation_group(n, gens, limits);
  return {g.order(), g.products(), g.labels(), "family:symmetric:" + std::to_string(n),
          GroupSpec::make_family(Family::symmetric, static_cast<long>(n))};
}

GroupTable make_alternating(std::size_t n, const Limits& limits) {
  if (n == 0) throw InvalidGroup("alternating group needs n >= 1");
  std::vector<std::vector<Element>> gens;
  for (std::size_t i = 2; i < n; ++i) {
    std::vector<Element> c(n);
    std::iota(c.begin(), c.end(), Element{0});
    c[0] = 1;
    c[1] = static_cast<Element>(i);
    c[i] = 0;
    gens.push_back(c);
  }
  auto g = make_permutation_group(n, gens, limits);
  return {g.order(), g.products(), g.labels(), "family:alternating:" + std::to_string(n),
          GroupSpec::make_family(Family::alternating, static_cast<long>(n))};
}

GroupTable make_quaternion8() {
  // index 2*u + s stands for (-1)^s * u with u in {1, i, j, k}
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_product[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static const char* names[4] = {"1", "i", "j", "k"};
  std::vector<Element> t(64);
  std::vector<std::string> labels;
  for (int x = 0; x < 8; ++x) {
    labels.push_back(std::string(x % 2 ? "-" : "") + names[x / 2]);
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2 + y % 2 + sign_product[u][v]) % 2;
      t[x * 8 + y] = static_cast<Element>(2 * unit_product[u][v] + s);
    }
  }
  return {8, std::move(t), std::move(labels), "family:quaternion8", GroupSpec::make_family(Family::quaternion8)};
}

GroupTable make_extraspecial(std::size_t p) {
  if (!is_prime(p)) throw InvalidGroup("extraspecial family needs a prime p, got " + std::to_string(p));
  const std::size_t order = p * p * p;
  std::vector<Element> t(order * order);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
      const std::size_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      t[x * order + y] = static_cast<Element>(ra * p * p + rb * p + rc);
    }
  }
  return {order, std::move(t), std::move(labels), "family:extraspecial:" + std::to_string(p),
          GroupSpec::make_family(Family::extraspecial, static_cast<long>(p))};
}

GroupTable make_affine(std::size_t p) {
  if (!is_prime(p)) throw InvalidGroup("affine family needs a prime p, got " + std::to_string(p));
  const std::size_t order = p * (p - 1);
  // index (a-1)*p + b stands for x -> a x + b
  std::vector<Element> t(order * order);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x / p + 1, b = x % p;
    labels.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t a2 = y / p + 1, b2 = y % p;
      const std::size_t ra = (a * a2) % p, rb = (a * b2 + b) % p;
      t[x * order + y] = static_cast<Element>((ra - 1) * p + rb);
    }
  }
  return {order, std::move(t), std::move(labels), "family:affine:" + std::to_string(p),
          GroupSpec::make_family(Family::affine, static_cast<long>(p))};
}

GroupTable make_direct_product(const GroupTable& left, const GroupTable& right) {
  const std::size_t m = left.order(), k = right.order(), order = m * k;
  std::vector<Element> t(order * order);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const auto a = static_cast<Element>(x / k), b = static_cast<Element>(x % k);
    labels.push_back("(" + left.label(a) + "," + right.label(b) + ")");
    for (std::size_t y = 0; y < order; ++y) {
      const auto a2 = static_cast<Element>(y / k), b2 = static_cast<Element>(y % k);
      t[x * order + y] = static_cast<Element>(left.mul(a, a2) * k + right.mul(b, b2));
    }
  }
  std::optional<GroupSpec> spec;
  if (left.spec() && right.spec()) spec = GroupSpec::direct_product(*left.spec(), *right.spec());
  return {order, std::move(t), std::move(labels), left.descriptor() + "*" + right.descriptor(), std::move(spec)};
}

GroupTable make_cayley_group(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  std::vector<Element> t;
  t.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidGroup("Cayley table is not square");
    t.insert(t.end(), row.begin(), row.end());
  }
  return {n, std::move(t), {}, "cayley:" + std::to_string(n), GroupSpec::cayley(table)};
}

GroupTable build_group(const GroupSpec& spec, const Limits& limits) {
  auto checked = [&](GroupTable g) {
    require_order(g.order(), limits, g.descriptor());
    g.validate(limits);
    return g;
  };
  switch (spec.kind) {
    case GroupSpec::Kind::cayley:
      require_order(spec.table.size(), limits, "cayley table");
      return checked(make_cayley_group(spec.table));
    case GroupSpec::Kind::permutation:
      return checked(make_permutation_group(spec.degree, spec.generators, limits));
    case GroupSpec::Kind::family:
      break;
  }
  auto param = [&]() -> std::size_t {
    if (spec.parameter < 1) throw InvalidGroup(family_name(spec.family) + " needs a positive parameter");
    return static_cast<std::size_t>(spec.parameter);
  };
  switch (spec.family) {
    case Family::cyclic:
      require_order(param(), limits, "cyclic");
      return checked(make_cyclic(param()));
    case Family::dihedral:
      require_order(2 * param(), limits, "dihedral");
      return checked(make_dihedral(param()));
    case Family::symmetric:
      return checked(make_symmetric(param(), limits));
    case Family::alternating:
      return checked(make_alternating(param(), limits));
    case Family::quaternion8:
      return checked(make_quaternion8());
    case Family::extraspecial:
      require_order(param() * param() * param(), limits, "extraspecial");
      return checked(make_extraspecial(param()));
    case Family::affine:
      require_order(param() * param(), limits, "affine");
      return checked(make_affine(param()));
    case Family::direct: {
      if (spec.factors.size() != 2) throw InvalidGroup("direct product needs exactly two factors");
      auto left = build_group(spec.factors[0], limits);
      auto right = build_group(spec.factors[1], limits);
      require_order(left.order() * right.order(), limits, "direct product");
      return checked(make_direct_product(left, right));
    }
  }
  throw InvalidGroup("unknown family");
}

// ---------------------------------------------------------------------------
// Conjugacy classes

ClassData conjugacy_classes(const GroupTable& group) {
  const std::size_t n = group.order();
  std::vector<ClassId> raw(n, static_cast<ClassId>(-1));
  std::vector<std::vector<Element>> found;
  for (std::size_t x = 0; x < n; ++x) {
    if (raw[x] != static_cast<ClassId>(-1)) continue;
    const auto id = static_cast<ClassId>(found.size());
    std::vector<Element> cls;
    for (std::size_t g = 0; g < n; ++g) {
      const Element y = group.conjugate(static_cast<Element>(g), static_cast<Element>(x));
      if (raw[y] == static_cast<ClassId>(-1)) {
        raw[y] = id;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    found.push_back(std::move(cls));
  }
  const Element e = group.identity();
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ea = found[a].front() == e;
    const bool eb = found[b].front() == e;
    if (ea != eb) return ea;
    if (found[a].size() != found[b].size()) return found[a].size() < found[b].size();
    return found[a].front() < found[b].front();
  });
  ClassData out;
  out.class_of.assign(n, 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto& cls = found[order[k]];
    for (auto x : cls) out.class_of[x] = static_cast<ClassId>(k);
    out.sizes.push_back(cls.size());
    out.representatives.push_back(cls.front());
    out.classes.push_back(std::move(cls));
  }
  for (std::size_t k = 0; k < out.classes.size(); ++k) {
    out.inverse_class.push_back(out.class_of[group.inv(out.representatives[k])]);
  }
  if (out.classes.size() > 1) {
    out.min_nontrivial_size = *std::min_element(out.sizes.begin() + 1, out.sizes.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subgroups

bool Subgroup::contains(Element x) const { return std::binary_search(members.begin(), members.end(), x); }

namespace {

Subgroup flagged(const GroupTable& group, const ClassData& classes, std::vector<Element> members) {
  Subgroup h;
  h.members = std::move(members);
  h.index = group.order() / h.members.size();
  std::vector<std::size_t> hits(classes.num_classes(), 0);
  for (auto x : h.members) ++hits[classes.class_of[x]];
  h.is_normal = true;
  h.is_central = true;
  for (std::size_t c = 0; c < hits.size(); ++c) {
    if (hits[c] != 0 && hits[c] != classes.sizes[c]) h.is_normal = false;
    if (hits[c] != 0 && classes.sizes[c] != 1) h.is_central = false;
  }
  return h;
}

// Subgroup generated by `base` (a subgroup, as membership flags) and `extra`.
std::vector<char> close_under(const GroupTable& group, std::vector<char> in, std::span<const Element> extra) {
  std::vector<Element> members = sorted_members(in);
  std::vector<Element> gens(members.begin(), members.end());
  gens.insert(gens.end(), extra.begin(), extra.end());
  // Breadth-first right multiplication by generators.
  for (auto x : extra) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  }
  if (!in[group.identity()]) {
    in[group.identity()] = 1;
    members.push_back(group.identity());
  }
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto g : gens) {
      const Element y = group.mul(members[head], g);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  return in;
}

// Product N*M of two normal subgroups given as flags.
std::vector<char> normal_product(const GroupTable& group, const std::vector<char>& n, const std::vector<Element>& m) {
  std::vector<char> out(n);
  std::vector<Element> nm = sorted_members(n);
  for (auto y : m) {
    if (out[y]) continue;
    for (auto x : nm) out[group.mul(x, y)] = 1;
  }
  return out;
}

}  // namespace

Subgroup make_subgroup(const GroupTable& group, const ClassData& classes, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw InvalidArgument("subgroup must be non-empty");
  std::vector<char> in(group.order(), 0);
  for (auto x : members) {
    if (x >= group.order()) throw InvalidArgument("subgroup member out of range");
    in[x] = 1;
  }
  if (!in[group.identity()]) throw InvalidArgument("subgroup must contain the identity");
  if (group.order() % members.size() != 0) throw InvalidArgument("subgroup size does not divide |G|");
  for (auto a : members) {
    if (!in[group.inv(a)]) throw InvalidArgument("subgroup not closed under inverses");
    for (auto b : members) {
      if (!in[group.mul(a, b)]) throw InvalidArgument("subgroup not closed under multiplication");
    }
  }
  return flagged(group, classes, std::move(members));
}

Subgroup generated_subgroup(const GroupTable& group, const ClassData& classes, std::span<const Element> generators) {
  std::vector<char> in(group.order(), 0);
  return flagged(group, classes, sorted_members(close_under(group, std::move(in), generators)));
}

Subgroup trivial_subgroup(const GroupTable& group, const ClassData& classes) {
  return flagged(group, classes, {group.identity()});
}

Subgroup whole_group(const GroupTable& group, const ClassData& classes) {
  std::vector<Element> all(group.order());
  std::iota(all.begin(), all.end(), Element{0});
  return flagged(group, classes, std::move(all));
}

Subgroup center(const GroupTable& group, const ClassData& classes) {
  std::vector<Element> members;
  for (std::size_t c = 0; c < classes.num_classes(); ++c) {
    if (classes.sizes[c] == 1) members.push_back(classes.classes[c][0]);
  }
  std::sort(members.begin(), members.end());
  return flagged(group, classes, std::move(members));
}

Subgroup centralizer(const GroupTable& group, const ClassData& classes, std::span<const Element> set) {
  std::vector<Element> members;
  for (std::size_t g = 0; g < group.order(); ++g) {
    const auto x = static_cast<Element>(g);
    bool ok = true;
    for (auto s : set) {
      if (group.mul(x, s) != group.mul(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(x);
  }
  return flagged(group, classes, std::move(members));
}

Subgroup center_of_subgroup(const GroupTable& group, const ClassData& classes, const Subgroup& h) {
  std::vector<Element> members;
  for (auto x : h.members) {
    bool ok = true;
    for (auto y : h.members) {
      if (group.mul(x, y) != group.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) members.push_back(x);
  }
  return flagged(group, classes, std::move(members));
}

Subgroup intersect(const GroupTable& group, const ClassData& classes, const Subgroup& a, const Subgroup& b) {
  std::vector<Element> members;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(members));
  return flagged(group, classes, std::move(members));
}

Subgroup derived_subgroup(const GroupTable& group, const ClassData& classes, const Subgroup& h) {
  std::vector<char> seen(group.order(), 0);
  std::vector<Element> commutators;
  for (auto x : h.members) {
    for (auto y : h.members) {
      const Element c = group.mul(group.mul(x, y), group.mul(group.inv(x), group.inv(y)));
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  return generated_subgroup(group, classes, commutators);
}

std::vector<Subgroup> normal_subgroups(const GroupTable& group, const ClassData& classes, const Limits& limits) {
  if (group.order() > limits.normal_subgroup_cap) {
    throw CapExceeded("normal subgroup enumeration: order " + std::to_string(group.order()) + " exceeds cap " +
                      std::to_string(limits.normal_subgroup_cap));
  }
  const std::size_t n = group.order();
  // Normal closures of single classes; every normal subgroup is a product of these.
  std::vector<std::vector<Element>> closures;
  for (std::size_t c = 1; c < classes.num_classes(); ++c) {
    std::vector<char> in(n, 0);
    closures.push_back(sorted_members(close_under(group, std::move(in), classes.classes[c])));
  }
  std::set<std::vector<Element>> seen;
  std::vector<std::vector<char>> frontier;
  {
    std::vector<char> triv(n, 0);
    triv[group.identity()] = 1;
    seen.insert(sorted_members(triv));
    frontier.push_back(std::move(triv));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<char>> next;
    for (const auto& cur : frontier) {
      for (const auto& m : closures) {
        if (cur[m.back()] && std::all_of(m.begin(), m.end(), [&](Element x) { return cur[x] != 0; })) continue;
        auto prod = normal_product(group, cur, m);
        auto key = sorted_members(prod);
        if (seen.insert(key).second) next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& members : seen) out.push_back(flagged(group, classes, members));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<Element> coset_map(const GroupTable& group, const Subgroup& normal) {
  std::vector<Element> coset(group.order(), kNone);
  Element next = 0;
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (coset[g] != kNone) continue;
    for (auto x : normal.members) coset[group.mul(static_cast<Element>(g), x)] = next;
    ++next;
  }
  return coset;
}

GroupTable quotient(const GroupTable& group, const ClassData& classes, const Subgroup& normal) {
  (void)classes;
  if (!normal.is_normal) throw InvalidArgument("quotient requires a normal subgroup");
  const auto coset = coset_map(group, normal);
  const std::size_t q = group.order() / normal.size();
  std::vector<Element> reps(q, kNone);
  for (std::size_t g = 0; g < group.order(); ++g) {
    if (reps[coset[g]] == kNone) reps[coset[g]] = static_cast<Element>(g);
  }
  std::vector<Element> t(q * q);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < q; ++a) {
    labels.push_back(group.label(reps[a]) + "N");
    for (std::size_t b = 0; b < q; ++b) t[a * q + b] = coset[group.mul(reps[a], reps[b])];
  }
  return {q, std::move(t), std::move(labels),
          group.descriptor() + "/N" + std::to_string(normal.size())};
}

std::vector<GroupTable> center_free_quotient_chain(const GroupTable& group) {
  std::vector<GroupTable> chain{group};
  while (true) {
    const auto& cur = chain.back();
    const auto classes = conjugacy_classes(cur);
    const auto z = center(cur, classes);
    if (z.size() == 1) break;
    chain.push_back(quotient(cur, classes, z));
  }
  return chain;
}

EmbeddedSubgroup subgroup_as_group(const GroupTable& group, const Subgroup& h) {
  const std::size_t k = h.size();
  std::vector<Element> local(group.order(), kNone);
  for (std::size_t i = 0; i < k; ++i) local[h.members[i]] = static_cast<Element>(i);
  std::vector<Element> t(k * k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(group.label(h.members[i]));
    for (std::size_t j = 0; j < k; ++j) {
      const Element p = local[group.mul(h.members[i], h.members[j])];
      if (p == kNone) throw InvalidArgument("not a subgroup: product leaves the member set");
      t[i * k + j] = p;
    }
  }
  return {GroupTable(k, std::move(t), std::move(labels), group.descriptor() + "|H" + std::to_string(k)),
          h.members};
}

ClassActionStructure class_action_structure(const GroupTable& group, const ClassData& classes, ClassId cls) {
  if (cls >= classes.num_classes()) throw InvalidArgument("class index out of range");
  const auto& c = classes.classes[cls];
  ClassActionStructure out;
  out.class_id = cls;
  out.class_size = c.size();
  std::set<std::vector<Element>> images;
  std::vector<Element> kernel;
  std::vector<Element> pos(group.order(), kNone);
  for (std::size_t i = 0; i < c.size(); ++i) pos[c[i]] = static_cast<Element>(i);
  for (std::size_t g = 0; g < group.order(); ++g) {
    std::vector<Element> perm(c.size());
    bool identity = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      perm[i] = pos[group.conjugate(static_cast<Element>(g), c[i])];
      identity = identity && perm[i] == i;
    }
    if (identity) kernel.push_back(static_cast<Element>(g));
    images.insert(std::move(perm));
  }
  out.kernel = make_subgroup(group, classes, std::move(kernel));
  out.image_order = images.size();
  out.generated = generated_subgroup(group, classes, c);
  out.intersection = intersect(group, classes, out.generated, out.kernel);
  out.intersection_central_in_kernel = true;
  for (auto k : out.intersection.members) {
    for (auto n : out.kernel.members) {
      if (group.mul(k, n) != group.mul(n, k)) out.intersection_central_in_kernel = false;
    }
  }
  return out;
}

}  // namespace tqr
