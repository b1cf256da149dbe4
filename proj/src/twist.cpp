#include "gkd/twist.hpp"

namespace gkd {

void Cocycle::set(Arrow a, Arrow b, const Scalar& v) {
  if (!(v.field() == field_)) throw FieldMismatch("cocycle value over " + v.field().name() + " in " + field_.name());
  if (v.is_zero())
    throw ZeroCocycleValue("cocycle value 0 at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  if (v.is_one())
    values_.erase({a, b});
  else
    values_.insert_or_assign({a, b}, v);
}

Scalar Cocycle::value(Arrow a, Arrow b) const {
  auto it = values_.find({a, b});
  return it == values_.end() ? field_.one() : it->second;
}

std::optional<CocycleViolation> validate_cocycle(const FiniteGroupoid& g, const Cocycle& c) {
  const std::size_t m = g.size();
  for (const auto& [key, v] : c.entries()) {
    auto [a, b] = key;
    if (a >= m || b >= m || !g.composable(a, b))
      throw CocycleDomainError("cocycle value on the non-composable pair (" + g.label(a < m ? a : 0) + "," +
                               g.label(b < m ? b : 0) + ")");
    if (v.is_zero()) throw ZeroCocycleValue("cocycle value 0 at (" + g.label(a) + "," + g.label(b) + ")");
  }
  for (Arrow x = 0; x < m; ++x) {
    if (!c.value(x, g.src(x)).is_one()) return CocycleViolation{"normalization", {x, g.src(x)}};
    if (!c.value(g.tgt(x), x).is_one()) return CocycleViolation{"normalization", {g.tgt(x), x}};
  }
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b) {
      if (!g.composable(a, b)) continue;
      Arrow ab = g.comp(a, b);
      for (Arrow k = 0; k < m; ++k) {
        if (!g.composable(b, k)) continue;
        Arrow bk = g.comp(b, k);
        if (!(c.value(a, b) * c.value(ab, k) == c.value(a, bk) * c.value(b, k)))
          return CocycleViolation{"cocycle identity", {a, b, k}};
      }
    }
  return std::nullopt;
}

TwistedGroupoid::TwistedGroupoid(FiniteGroupoid g, Cocycle c)
    : g_(std::move(g)), field_(c.field()), sparse_(std::move(c)) {
  const std::size_t m = g_.size();
  dense_.assign(m * m, field_.zero());
  for (Arrow a = 0; a < m; ++a)
    for (Arrow b = 0; b < m; ++b)
      if (g_.composable(a, b)) dense_[a * m + b] = sparse_.value(a, b);
}

TwistedGroupoid TwistedGroupoid::make(FiniteGroupoid g, const Cocycle& c) {
  if (auto v = validate_cocycle(g, c)) {
    std::string w;
    for (auto a : v->witness) w += (w.empty() ? "" : ",") + g.label(a);
    throw CocycleError("cocycle " + v->condition + " fails at (" + w + ")");
  }
  return TwistedGroupoid(std::move(g), c);
}

TwistedGroupoid TwistedGroupoid::untwisted(FiniteGroupoid g, Field f) { return TwistedGroupoid(std::move(g), Cocycle(f)); }

const Scalar& TwistedGroupoid::omega(Arrow a, Arrow b) const {
  if (!g_.composable(a, b))
    throw CocycleDomainError("omega on the non-composable pair (" + g_.label(a) + "," + g_.label(b) + ")");
  return dense_[a * g_.size() + b];
}

Cocycle trivial_cocycle(Field f) { return Cocycle(f); }

Cocycle coboundary(const FiniteGroupoid& g, const std::vector<Scalar>& b) {
  if (b.size() != g.size()) throw DimensionMismatch("coboundary: one value per arrow required");
  const Field f = b.at(0).field();
  for (Arrow a = 0; a < g.size(); ++a) {
    if (b[a].is_zero()) throw ZeroCocycleValue("coboundary: zero value at arrow " + g.label(a));
    if (g.is_unit(a) && !b[a].is_one()) throw CocycleError("coboundary: value at unit " + g.label(a) + " is not 1");
  }
  Cocycle c(f);
  for (Arrow x = 0; x < g.size(); ++x)
    for (Arrow y = 0; y < g.size(); ++y)
      if (g.composable(x, y)) c.set(x, y, b[x] * b[y] / b[g.comp(x, y)]);
  return c;
}

Cocycle quaternion_cocycle(const FiniteGroupoid& v4, Field f) {
  if (v4.size() != 4 || v4.units().size() != 1) throw MalformedTable("quaternion cocycle needs the one-object Klein group");
  for (Arrow a = 0; a < 4; ++a)
    for (Arrow b = 0; b < 4; ++b)
      if (v4.comp(a, b) != (a ^ b)) throw MalformedTable("quaternion cocycle needs the xor labelling e,a,b,ab");
  // sign of q(x) q(y) for the units 1, i, j, k
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  Cocycle c(f);
  for (Arrow a = 0; a < 4; ++a)
    for (Arrow b = 0; b < 4; ++b) c.set(a, b, f.from_int(sign[a][b]));
  return c;
}

IsotropyTwist restrict_to_isotropy(const TwistedGroupoid& tg, Arrow x) {
  const auto iso = tg.groupoid().isotropy_group(x);
  FiniteGroupoid group = group_groupoid(iso.table);
  // group_groupoid keeps table order since the identity is element 0
  Cocycle c(tg.field());
  for (std::size_t i = 0; i < iso.arrows.size(); ++i)
    for (std::size_t j = 0; j < iso.arrows.size(); ++j) c.set(i, j, tg.omega(iso.arrows[i], iso.arrows[j]));
  return {iso.arrows, TwistedGroupoid::make(std::move(group), c)};
}

Scalar bundle_inverse_coefficient(const TwistedGroupoid& tg, Arrow g, const Scalar& t) {
  if (t.is_zero()) throw DivisionByZero("the zero section has no partial inverse");
  const auto& G = tg.groupoid();
  return (tg.omega(G.inv(g), g) * t).inverse();
}

}  // namespace gkd
