#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace tqr::oracle {

using C = std::complex<double>;

std::vector<std::size_t> class_labels(const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (Element x = 0; x < n; ++x) {
    if (label[x] != n) continue;
    for (Element y = 0; y < n; ++y) {
      // y x y^-1, with the inverse found by search
      Element yi = 0;
      while (g.mul(y, yi) != g.identity()) ++yi;
      label[g.mul(g.mul(y, x), yi)] = next;
    }
    ++next;
  }
  return label;
}

std::vector<std::size_t> class_sizes(const GroupTable& g) {
  const auto label = class_labels(g);
  std::vector<std::size_t> sizes(*std::max_element(label.begin(), label.end()) + 1, 0);
  for (auto l : label) ++sizes[l];
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<Element> center(const GroupTable& g) {
  std::vector<Element> z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

bool is_subgroup(const GroupTable& g, const std::vector<Element>& members) {
  std::set<Element> s(members.begin(), members.end());
  if (!s.count(g.identity())) return false;
  for (auto a : s)
    for (auto b : s)
      if (!s.count(g.mul(a, b))) return false;
  return true;
}

std::vector<std::vector<Element>> normal_subgroups(const GroupTable& g) {
  const auto label = class_labels(g);
  const std::size_t k = *std::max_element(label.begin(), label.end()) + 1;
  const std::size_t id_class = label[g.identity()];
  std::vector<std::vector<Element>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (!(mask >> id_class & 1)) continue;
    std::vector<Element> members;
    for (Element x = 0; x < g.order(); ++x)
      if (mask >> label[x] & 1) members.push_back(x);
    if (g.order() % members.size() != 0) continue;
    if (is_subgroup(g, members)) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<C> on_elements(const CharTable& t, IrrepId l) {
  std::vector<C> v(t.group_order());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = t.value(l, t.classes().class_of[x]);
  return v;
}

std::vector<C> on_elements(const ClassFunction& f) {
  std::vector<C> v(f.classes().group_order());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = f[f.classes().class_of[x]];
  return v;
}

double irreducibility_residual(const CharTable& t, IrrepId l) {
  const auto& g = t.group();
  const auto chi = on_elements(t, l);
  const double n = static_cast<double>(g.order());
  double worst = 0.0;
  for (auto x : t.classes().representatives) {
    for (auto y : t.classes().representatives) {
      C sum = 0.0;
      for (Element h = 0; h < g.order(); ++h) sum += chi[g.mul(x, g.mul(g.mul(h, y), g.inv(h)))];
      worst = std::max(worst, std::abs(chi[x] * chi[y] - chi[g.identity()] * sum / n));
    }
  }
  return worst;
}

std::vector<C> multiplicities(const CharTable& t, const std::vector<C>& f) {
  std::vector<C> out(t.num_irreps());
  for (IrrepId l = 0; l < t.num_irreps(); ++l) {
    const auto chi = on_elements(t, l);
    C s = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x) s += f[x] * std::conj(chi[x]);
    out[l] = s / static_cast<double>(f.size());
  }
  return out;
}

std::vector<std::int64_t> integer_multiplicities(const CharTable& t, const std::vector<C>& f) {
  std::vector<std::int64_t> out;
  double scale = 1.0;
  for (auto v : f) scale = std::max(scale, std::abs(v));
  for (auto m : multiplicities(t, f)) {
    const double r = std::round(m.real());
    if (std::abs(m - C(r, 0.0)) > 1e-8 * scale || r < 0) return {};
    out.push_back(static_cast<std::int64_t>(r));
  }
  return out;
}

std::vector<C> reduced_on_elements(const CharTable& t, const std::vector<bool>& support) {
  std::vector<C> f(t.group_order(), 0.0);
  for (IrrepId l = 0; l < t.num_irreps(); ++l) {
    if (!support[l]) continue;
    const auto chi = on_elements(t, l);
    for (std::size_t x = 0; x < f.size(); ++x) f[x] += static_cast<double>(t.dim(l)) * chi[x];
  }
  return f;
}

std::vector<std::int64_t> tensor_multiplicities(const CharTable& t, const std::vector<std::vector<bool>>& supports) {
  std::vector<C> f(t.group_order(), 1.0);
  for (const auto& s : supports) {
    const auto r = reduced_on_elements(t, s);
    for (std::size_t x = 0; x < f.size(); ++x) f[x] *= r[x];
  }
  return integer_multiplicities(t, f);
}

std::vector<std::vector<double>> chain_kernel(const CharTable& t, const std::vector<bool>& support) {
  const auto v = reduced_on_elements(t, support);
  const double vdim = v[t.group().identity()].real();
  std::vector<std::vector<double>> k(t.num_irreps(), std::vector<double>(t.num_irreps()));
  for (IrrepId l = 0; l < t.num_irreps(); ++l) {
    auto f = on_elements(t, l);
    for (std::size_t x = 0; x < f.size(); ++x) f[x] *= v[x];
    const auto mult = integer_multiplicities(t, f);
    for (IrrepId mu = 0; mu < t.num_irreps(); ++mu) {
      k[l][mu] = static_cast<double>(mult.at(mu)) * t.dim(mu) / (t.dim(l) * vdim);
    }
  }
  return k;
}

std::vector<double> chain_distribution(const std::vector<std::vector<double>>& kernel, IrrepId start, int steps) {
  std::vector<double> p(kernel.size(), 0.0);
  p[start] = 1.0;
  for (int s = 0; s < steps; ++s) {
    std::vector<double> q(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) q[j] += p[i] * kernel[i][j];
    p = std::move(q);
  }
  return p;
}

std::vector<C> induced_multiplicities(const CharTable& t, const std::vector<Element>& h, const std::vector<C>& theta) {
  std::vector<C> out(t.num_irreps());
  for (IrrepId l = 0; l < t.num_irreps(); ++l) {
    const auto chi = on_elements(t, l);
    C s = 0.0;
    for (std::size_t i = 0; i < h.size(); ++i) s += theta[i] * std::conj(chi[h[i]]);
    out[l] = s / static_cast<double>(h.size());
  }
  return out;
}

std::vector<Element> sumset(const std::vector<std::uint32_t>& factors, const std::vector<Element>& a, int m) {
  auto decode = [&](Element x) {
    std::vector<std::uint32_t> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = x % factors[i];
      x /= factors[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    Element x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i] + c[i];
    return x;
  };
  std::set<Element> cur = {encode(std::vector<std::uint32_t>(factors.size(), 0))};
  for (int s = 0; s < m; ++s) {
    std::set<Element> next;
    for (auto x : cur) {
      for (auto y : a) {
        auto cx = decode(x);
        const auto cy = decode(y);
        for (std::size_t i = 0; i < cx.size(); ++i) cx[i] = (cx[i] + cy[i]) % factors[i];
        next.insert(encode(cx));
      }
    }
    cur = std::move(next);
  }
  return {cur.begin(), cur.end()};
}

std::vector<LatticePoint> lattice_multiple(const std::vector<LatticePoint>& b, int n) {
  std::set<LatticePoint> out;
  const std::size_t d = b.front().size();
  LatticePoint acc(d, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == b.size()) {
      LatticePoint p = acc;
      for (std::size_t j = 0; j < d; ++j) p[j] += left * b[i][j];
      out.insert(p);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      for (std::size_t j = 0; j < d; ++j) acc[j] += c * b[i][j];
      rec(i + 1, left - c);
      for (std::size_t j = 0; j < d; ++j) acc[j] -= c * b[i][j];
    }
  };
  rec(0, n);
  return {out.begin(), out.end()};
}

bool cover_is_valid(const std::vector<LatticePoint>& b, int n, int m, const std::vector<LatticePoint>& translates) {
  const auto nb = lattice_multiple(b, n);
  const std::set<LatticePoint> nbs(nb.begin(), nb.end());
  for (const auto& p : lattice_multiple(b, m * n)) {
    bool hit = false;
    for (const auto& t : translates) {
      LatticePoint q = p;
      for (std::size_t j = 0; j < q.size(); ++j) q[j] -= t[j];
      if (nbs.count(q)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace tqr::oracle
