#include "gkd/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gkd {

namespace {

std::string arrow_list(const std::vector<Arrow>& w) {
  std::string s;
  for (auto a : w) s += (s.empty() ? "" : ",") + std::to_string(a);
  return s;
}

Violation violation(std::string axiom, std::vector<Arrow> witness, std::string detail) {
  return {std::move(axiom), std::move(witness), std::move(detail)};
}

void check_shape(const GroupoidTables& t) {
  const std::size_t m = t.size();
  if (m == 0) throw MalformedTable("groupoid has no arrows");
  if (t.src.size() != m || t.tgt.size() != m || t.inv.size() != m || t.comp.size() != m * m ||
      (!t.ids.empty() && t.ids.size() != m))
    throw MalformedTable("table sizes disagree with arrow count " + std::to_string(m));
  for (Arrow a = 0; a < m; ++a) {
    if (t.src[a] >= m || t.tgt[a] >= m || t.inv[a] >= m)
      throw MalformedTable("arrow " + std::to_string(a) + " refers to an out-of-range index");
    for (Arrow b = 0; b < m; ++b) {
      Arrow c = t.at(a, b);
      if (c != kNoArrow && c >= m)
        throw MalformedTable("product of " + std::to_string(a) + "," + std::to_string(b) + " is out of range");
    }
  }
}

}  // namespace

std::optional<Violation> validate(const GroupoidTables& t) {
  check_shape(t);
  const std::size_t m = t.size();
  for (Arrow a = 0; a < m; ++a) {
    if (!t.is_unit[t.src[a]] || !t.is_unit[t.tgt[a]])
      return violation("unit", {a}, "source or range of " + std::to_string(a) + " is not a unit");
    if (t.is_unit[a] && (t.src[a] != a || t.tgt[a] != a))
      return violation("unit", {a}, "unit " + std::to_string(a) + " is not its own source and range");
  }
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b) {
      bool defined = t.at(a, b) != kNoArrow;
      if (defined != (t.src[a] == t.tgt[b]))
        return violation("composability", {a, b},
                         defined ? "product defined although s(a) != r(b)" : "product missing although s(a) = r(b)");
    }
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b) {
      Arrow ab = t.at(a, b);
      if (ab == kNoArrow) continue;
      if (t.src[ab] != t.src[b] || t.tgt[ab] != t.tgt[a])
        return violation("composability", {a, b}, "endpoints of the product are wrong");
    }
  for (Arrow g = 0; g < m; ++g) {
    if (t.at(t.tgt[g], g) != g) return violation("identity", {g}, "r(g) g != g");
    if (t.at(g, t.src[g]) != g) return violation("identity", {g}, "g s(g) != g");
  }
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b) {
      Arrow ab = t.at(a, b);
      if (ab == kNoArrow) continue;
      for (Arrow c = 0; c < m; ++c) {
        Arrow bc = t.at(b, c);
        if (bc == kNoArrow) continue;
        if (t.at(ab, c) != t.at(a, bc)) return violation("associativity", {a, b, c}, "(ab)c != a(bc)");
      }
    }
  for (Arrow g = 0; g < m; ++g) {
    Arrow h = t.inv[g];
    if (t.src[h] != t.tgt[g] || t.tgt[h] != t.src[g])
      return violation("involution", {g}, "inverse of " + std::to_string(g) + " has wrong endpoints");
  }
  for (Arrow g = 0; g < m; ++g)
    if (t.inv[t.inv[g]] != g) return violation("involution", {g}, "inv(inv(g)) != g");
  for (Arrow g = 0; g < m; ++g) {
    if (t.at(g, t.inv[g]) != t.tgt[g]) return violation("involution", {g}, "g inv(g) != r(g)");
    if (t.at(t.inv[g], g) != t.src[g]) return violation("involution", {g}, "inv(g) g != s(g)");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::size_t GroupTable::inverse(std::size_t g) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (mul[g][h] == identity) return h;
  throw MalformedTable("group element without inverse");
}

void check_group(const GroupTable& g) {
  const std::size_t n = g.order();
  if (n == 0 || g.identity >= n) throw MalformedTable("group table is empty or has no identity");
  for (const auto& row : g.mul) {
    if (row.size() != n) throw MalformedTable("group table is not square");
    std::vector<bool> seen(n, false);
    for (auto v : row) {
      if (v >= n || seen[v]) throw MalformedTable("group table row is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul[g.identity][a] != a || g.mul[a][g.identity] != a) throw MalformedTable("identity is not neutral");
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) throw MalformedTable("group table is not associative");
  }
}

GroupTable cyclic_group(std::size_t n) {
  GroupTable g;
  g.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  return g;
}

GroupTable klein_four() {
  GroupTable g;
  g.mul.assign(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) g.mul[a][b] = a ^ b;
  return g;
}

GroupTable symmetric_group_3() {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable g;
  g.mul.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> c(3);
      for (std::size_t i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      g.mul[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return g;
}

// ---------------------------------------------------------------------------

FiniteGroupoid::FiniteGroupoid(GroupoidTables t) : t_(std::move(t)) {
  if (t_.ids.empty()) {
    t_.ids.resize(t_.size());
    std::iota(t_.ids.begin(), t_.ids.end(), 0LL);
  }
  unit_pos_.assign(size(), kNoArrow);
  for (Arrow a = 0; a < size(); ++a)
    if (t_.is_unit[a]) {
      unit_pos_[a] = units_.size();
      units_.push_back(a);
    }
}

FiniteGroupoid FiniteGroupoid::make(GroupoidTables t) {
  if (auto v = validate(t))
    throw GroupoidError("groupoid axiom '" + v->axiom + "' fails at (" + arrow_list(v->witness) + "): " + v->detail);
  return FiniteGroupoid(std::move(t));
}

std::size_t FiniteGroupoid::unit_index(Arrow u) const {
  require_unit(u);
  return unit_pos_[u];
}

void FiniteGroupoid::require_unit(Arrow x) const {
  if (x >= size() || !t_.is_unit[x]) throw NotAUnit("arrow " + std::to_string(x) + " is not a unit");
}

IsotropyGroup FiniteGroupoid::isotropy_group(Arrow x) const {
  auto arrows = hom_set(x, x);
  // put the unit first so the table's identity is element 0
  std::stable_partition(arrows.begin(), arrows.end(), [&](Arrow a) { return a == x; });
  IsotropyGroup iso{arrows, {}};
  std::map<Arrow, std::size_t> pos;
  for (std::size_t i = 0; i < arrows.size(); ++i) pos[arrows[i]] = i;
  iso.table.mul.assign(arrows.size(), std::vector<std::size_t>(arrows.size()));
  for (std::size_t i = 0; i < arrows.size(); ++i)
    for (std::size_t j = 0; j < arrows.size(); ++j) iso.table.mul[i][j] = pos.at(comp(arrows[i], arrows[j]));
  iso.table.identity = 0;
  return iso;
}

std::vector<Arrow> FiniteGroupoid::orbit(Arrow x) const {
  require_unit(x);
  std::set<Arrow> o;
  for (Arrow g = 0; g < size(); ++g)
    if (src(g) == x) o.insert(tgt(g));
  return {o.begin(), o.end()};
}

std::vector<Arrow> FiniteGroupoid::hom_set(Arrow y, Arrow x) const {
  require_unit(x);
  require_unit(y);
  std::vector<Arrow> h;
  for (Arrow g = 0; g < size(); ++g)
    if (src(g) == x && tgt(g) == y) h.push_back(g);
  return h;
}

std::vector<Arrow> FiniteGroupoid::source_fiber(Arrow x) const {
  require_unit(x);
  std::vector<Arrow> h;
  for (Arrow g = 0; g < size(); ++g)
    if (src(g) == x) h.push_back(g);
  return h;
}

std::vector<std::vector<Arrow>> FiniteGroupoid::orbits() const {
  std::vector<std::vector<Arrow>> out;
  std::vector<bool> seen(size(), false);
  for (Arrow u : units_) {
    if (seen[u]) continue;
    auto o = orbit(u);
    for (Arrow v : o) seen[v] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool FiniteGroupoid::is_bisection(const std::vector<Arrow>& s) const {
  std::set<Arrow> sources, ranges, seen;
  for (Arrow a : s) {
    if (a >= size()) throw MalformedTable("arrow " + std::to_string(a) + " out of range");
    if (!seen.insert(a).second) continue;
    if (!sources.insert(src(a)).second || !ranges.insert(tgt(a)).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Assembles tables from arrow endpoints and a product rule; the rule is only
// consulted for composable pairs.
template <class Product>
GroupoidTables assemble(std::size_t m, const std::vector<bool>& is_unit, const std::vector<Arrow>& src,
                        const std::vector<Arrow>& tgt, Product product) {
  GroupoidTables t;
  t.is_unit = is_unit;
  t.src = src;
  t.tgt = tgt;
  t.comp.assign(m * m, kNoArrow);
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b)
      if (src[a] == tgt[b]) t.at(a, b) = product(a, b);
  t.inv.assign(m, kNoArrow);
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b)
      if (src[a] == tgt[b] && t.at(a, b) == tgt[a] && src[b] == tgt[a]) {
        t.inv[a] = b;
        break;
      }
  for (Arrow a = 0; a < m; ++a)
    if (t.inv[a] == kNoArrow) throw MalformedTable("constructed arrow " + std::to_string(a) + " has no inverse");
  return t;
}

}  // namespace

Arrow pair_arrow(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw MalformedTable("pair groupoid index out of range");
  if (i == j) return i;
  return n + i * (n - 1) + (j < i ? j : j - 1);
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  if (n == 0) throw MalformedTable("pair groupoid needs at least one point");
  const std::size_t m = n * n;
  std::vector<bool> unit(m, false);
  std::vector<Arrow> src(m), tgt(m);
  std::vector<std::pair<std::size_t, std::size_t>> ends(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Arrow a = pair_arrow(n, i, j);
      ends[a] = {i, j};
      tgt[a] = i;
      src[a] = j;
      unit[a] = i == j;
    }
  return FiniteGroupoid::make(
      assemble(m, unit, src, tgt, [&](Arrow a, Arrow b) { return pair_arrow(n, ends[a].first, ends[b].second); }));
}

FiniteGroupoid group_groupoid(const GroupTable& g) {
  check_group(g);
  const std::size_t k = g.order();
  // arrow 0 is the identity; the others follow in table order
  std::vector<std::size_t> elem{g.identity};
  for (std::size_t e = 0; e < k; ++e)
    if (e != g.identity) elem.push_back(e);
  std::vector<Arrow> arrow_of(k);
  for (std::size_t i = 0; i < k; ++i) arrow_of[elem[i]] = i;
  std::vector<bool> unit(k, false);
  unit[0] = true;
  std::vector<Arrow> zero(k, 0);
  return FiniteGroupoid::make(
      assemble(k, unit, zero, zero, [&](Arrow a, Arrow b) { return arrow_of[g.mul[elem[a]][elem[b]]]; }));
}

FiniteGroupoid action_groupoid(const GroupTable& g, const std::vector<std::vector<std::size_t>>& act) {
  check_group(g);
  const std::size_t k = g.order();
  if (act.size() != k || act.empty()) throw MalformedTable("action needs one permutation per group element");
  const std::size_t n = act[0].size();
  if (n == 0) throw MalformedTable("action on an empty set");
  for (std::size_t e = 0; e < k; ++e) {
    if (act[e].size() != n) throw MalformedTable("action permutations have different lengths");
    std::vector<bool> seen(n, false);
    for (auto p : act[e]) {
      if (p >= n || seen[p]) throw MalformedTable("action is not by bijections");
      seen[p] = true;
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (act[g.identity][p] != p) throw MalformedTable("identity does not act trivially");
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        if (act[g.mul[a][b]][p] != act[a][act[b][p]]) throw MalformedTable("action is not compatible with the group law");
  }
  // arrows (g, p): source p, range g.p; units (e, p) first
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (std::size_t p = 0; p < n; ++p) arrows.push_back({g.identity, p});
  for (std::size_t e = 0; e < k; ++e)
    if (e != g.identity)
      for (std::size_t p = 0; p < n; ++p) arrows.push_back({e, p});
  std::map<std::pair<std::size_t, std::size_t>, Arrow> index;
  for (Arrow a = 0; a < arrows.size(); ++a) index[arrows[a]] = a;
  const std::size_t m = arrows.size();
  std::vector<bool> unit(m, false);
  std::vector<Arrow> src(m), tgt(m);
  for (Arrow a = 0; a < m; ++a) {
    auto [e, p] = arrows[a];
    unit[a] = a < n;
    src[a] = p;
    tgt[a] = act[e][p];
  }
  return FiniteGroupoid::make(assemble(m, unit, src, tgt, [&](Arrow a, Arrow b) {
    return index.at({g.mul[arrows[a].first][arrows[b].first], arrows[b].second});
  }));
}

FiniteGroupoid group_bundle(const std::vector<GroupTable>& fibers) {
  if (fibers.empty()) throw MalformedTable("group bundle over an empty unit set");
  for (const auto& f : fibers) check_group(f);
  const std::size_t n = fibers.size();
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (unit, element)
  for (std::size_t u = 0; u < n; ++u) arrows.push_back({u, fibers[u].identity});
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t e = 0; e < fibers[u].order(); ++e)
      if (e != fibers[u].identity) arrows.push_back({u, e});
  std::map<std::pair<std::size_t, std::size_t>, Arrow> index;
  for (Arrow a = 0; a < arrows.size(); ++a) index[arrows[a]] = a;
  const std::size_t m = arrows.size();
  std::vector<bool> unit(m, false);
  std::vector<Arrow> ends(m);
  for (Arrow a = 0; a < m; ++a) {
    unit[a] = a < n;
    ends[a] = arrows[a].first;
  }
  return FiniteGroupoid::make(assemble(m, unit, ends, ends, [&](Arrow a, Arrow b) {
    std::size_t u = arrows[a].first;
    return index.at({u, fibers[u].mul[arrows[a].second][arrows[b].second]});
  }));
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& g1, const FiniteGroupoid& g2) {
  // units of g1, units of g2, then the remaining arrows of g1 and of g2
  const std::size_t m1 = g1.size(), m2 = g2.size(), m = m1 + m2;
  std::vector<Arrow> order;
  for (Arrow a = 0; a < m1; ++a)
    if (g1.is_unit(a)) order.push_back(a);
  for (Arrow a = 0; a < m2; ++a)
    if (g2.is_unit(a)) order.push_back(m1 + a);
  for (Arrow a = 0; a < m1; ++a)
    if (!g1.is_unit(a)) order.push_back(a);
  for (Arrow a = 0; a < m2; ++a)
    if (!g2.is_unit(a)) order.push_back(m1 + a);
  std::vector<Arrow> pos(m);
  for (Arrow i = 0; i < m; ++i) pos[order[i]] = i;
  auto side = [&](Arrow old) { return old < m1; };
  std::vector<bool> unit(m);
  std::vector<Arrow> src(m), tgt(m);
  for (Arrow i = 0; i < m; ++i) {
    Arrow old = order[i];
    if (side(old)) {
      unit[i] = g1.is_unit(old);
      src[i] = pos[g1.src(old)];
      tgt[i] = pos[g1.tgt(old)];
    } else {
      unit[i] = g2.is_unit(old - m1);
      src[i] = pos[m1 + g2.src(old - m1)];
      tgt[i] = pos[m1 + g2.tgt(old - m1)];
    }
  }
  return FiniteGroupoid::make(assemble(m, unit, src, tgt, [&](Arrow a, Arrow b) {
    Arrow oa = order[a], ob = order[b];
    if (side(oa)) return pos[g1.comp(oa, ob)];
    return pos[m1 + g2.comp(oa - m1, ob - m1)];
  }));
}

}  // namespace gkd
