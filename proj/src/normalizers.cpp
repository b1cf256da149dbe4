#include "gkd/normalizers.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gkd {

PartialBijection::PartialBijection(std::map<Arrow, Arrow> m) : m_(std::move(m)) {
  std::set<Arrow> seen;
  for (const auto& [x, y] : m_)
    if (!seen.insert(y).second) throw AlgebraError("partial bijection is not injective");
}

std::vector<Arrow> PartialBijection::domain() const {
  std::vector<Arrow> d;
  for (const auto& [x, y] : m_) d.push_back(x);
  return d;
}

std::vector<Arrow> PartialBijection::range() const {
  std::set<Arrow> r;
  for (const auto& [x, y] : m_) r.insert(y);
  return {r.begin(), r.end()};
}

std::optional<Arrow> PartialBijection::apply(Arrow x) const {
  auto it = m_.find(x);
  if (it == m_.end()) return std::nullopt;
  return it->second;
}

PartialBijection PartialBijection::inverse() const {
  std::map<Arrow, Arrow> r;
  for (const auto& [x, y] : m_) r[y] = x;
  return PartialBijection(std::move(r));
}

std::string PartialBijection::to_string() const {
  std::ostringstream os;
  for (const auto& [x, y] : m_) os << x << " -> " << y << "\n";
  return os.str();
}

PartialBijection compose(const PartialBijection& f, const PartialBijection& g) {
  std::map<Arrow, Arrow> r;
  for (const auto& [x, y] : g.mapping())
    if (auto z = f.apply(y)) r[x] = *z;
  return PartialBijection(std::move(r));
}

// ---------------------------------------------------------------------------

namespace {

bool in_diagonal(const AlgebraElement& e) {
  for (const auto& [a, v] : e.coeffs())
    if (!e.algebra().groupoid().is_unit(a)) return false;
  return true;
}

NormalizerRefusal refuse(std::string condition, AlgebraElement witness, std::string detail) {
  return {std::move(condition), std::move(witness), std::move(detail)};
}

// Reads beta off <n* a n, x> for a = delta_y; nothing when the values are
// not those of a partial bijection.
std::optional<PartialBijection> try_beta(const AlgebraElement& n, const AlgebraElement& n_star, std::string& why) {
  const auto& B = n.algebra();
  const auto& units = B.groupoid().units();
  const AlgebraElement nsn = n_star * n;
  std::map<Arrow, Arrow> m;
  std::vector<AlgebraElement> conj;
  for (Arrow y : units) conj.push_back(n_star * B.delta(y) * n);
  for (Arrow x : units) {
    std::optional<Arrow> hit;
    for (std::size_t i = 0; i < units.size(); ++i) {
      Scalar c = B.pairing(conj[i], x);
      if (c.is_zero()) continue;
      if (!c.is_one() || hit) {
        why = "<n* a n, " + B.groupoid().label(x) + "> is not a point evaluation";
        return std::nullopt;
      }
      hit = units[i];
    }
    bool in_src = !B.pairing(nsn, x).is_zero();
    if (hit.has_value() != in_src) {
      why = "domain of beta differs from supp(n*n) at " + B.groupoid().label(x);
      return std::nullopt;
    }
    if (hit) m[x] = *hit;
  }
  std::set<Arrow> range;
  for (const auto& [x, y] : m)
    if (!range.insert(y).second) {
      why = "beta is not injective";
      return std::nullopt;
    }
  const AlgebraElement nns = n * n_star;
  for (Arrow u : units)
    if (range.count(u) != static_cast<std::size_t>(!B.pairing(nns, u).is_zero())) {
      why = "range of beta differs from supp(nn*) at " + B.groupoid().label(u);
      return std::nullopt;
    }
  return PartialBijection(std::move(m));
}

}  // namespace

PartialBijection beta_of(const AlgebraElement& n, const AlgebraElement& n_star) {
  std::string why;
  auto b = try_beta(n, n_star, why);
  if (!b) throw AlgebraError("beta: " + why);
  return *b;
}

NormalizerResult certify_normalizer(const AlgebraElement& n, const AlgebraElement& n_star) {
  if (&n.algebra() != &n_star.algebra()) throw ParentMismatch("normalizer and partial inverse in different algebras");
  const auto& B = n.algebra();
  AlgebraElement d1 = n * n_star * n - n;
  if (!d1.is_zero()) return refuse("nn*n=n", d1, "nn*n - n is nonzero");
  AlgebraElement d2 = n_star * n * n_star - n_star;
  if (!d2.is_zero()) return refuse("n*nn*=n*", d2, "n*nn* - n* is nonzero");
  for (Arrow u : B.groupoid().units())
    if (!in_diagonal(n * B.delta(u) * n_star)) return refuse("nAn*<=A", B.delta(u), "n a n* leaves A");
  for (Arrow u : B.groupoid().units())
    if (!in_diagonal(n_star * B.delta(u) * n)) return refuse("n*An<=A", B.delta(u), "n* a n leaves A");
  std::string why;
  auto beta = try_beta(n, n_star, why);
  if (!beta) return refuse("beta", B.zero(), why);
  return NormalizerCertificate{n, n_star, std::move(*beta)};
}

NormalizerResult synthesize_normalizer(const AlgebraElement& n) {
  const auto& B = n.algebra();
  const auto& G = B.groupoid();
  const Field& f = B.field();
  const std::size_t d = B.dim();
  std::vector<Arrow> cand;
  for (Arrow a : n.support()) cand.push_back(G.inv(a));
  std::sort(cand.begin(), cand.end());
  const std::size_t k = cand.size();

  // Each block is a linear map of the unknown coefficients on cand; the
  // conditions are appended one unit at a time so that the first
  // inconsistency can be attributed.
  std::vector<Vector> rows;  // augmented: k coefficients then right-hand side
  auto consistent = [&]() {
    auto e = rref(f, k + 1, rows);
    return e.pivots.empty() || e.pivots.back() != k;
  };
  auto add_block = [&](auto image_of, const Vector& rhs, bool non_units_only) {
    std::vector<Vector> cols;
    for (Arrow c : cand) cols.push_back(image_of(B.delta(c)).to_vector());
    for (std::size_t r = 0; r < d; ++r) {
      if (non_units_only && G.is_unit(r)) continue;
      Vector row;
      for (std::size_t j = 0; j < k; ++j) row.push_back(cols[j][r]);
      row.push_back(rhs[r]);
      rows.push_back(std::move(row));
    }
  };
  const Vector zero = zero_vector(f, d);
  add_block([&](const AlgebraElement& m) { return n * m * n; }, n.to_vector(), false);
  if (!consistent()) return refuse("nn*n=n", B.zero(), "no partial inverse supported on supp(n)^-1");
  for (Arrow u : G.units()) {
    add_block([&](const AlgebraElement& m) { return n * B.delta(u) * m; }, zero, true);
    if (!consistent()) return refuse("nAn*<=A", B.delta(u), "nn*n=n and n a n* in A are jointly inconsistent");
  }
  for (Arrow u : G.units()) {
    add_block([&](const AlgebraElement& m) { return m * B.delta(u) * n; }, zero, true);
    if (!consistent()) return refuse("n*An<=A", B.delta(u), "n* a n in A is inconsistent with the other conditions");
  }
  std::vector<Vector> lhs;
  Vector rhs;
  for (auto& r : rows) {
    rhs.push_back(r.back());
    lhs.emplace_back(r.begin(), r.end() - 1);
  }
  auto sol = solve(Matrix::from_rows(f, k, lhs), rhs);
  AlgebraElement m(B);
  for (std::size_t j = 0; j < k; ++j) m.set(cand[j], (*sol)[j]);
  return certify_normalizer(n, m * n * m);
}

NormalizerCertificate certify_section(const AlgebraElement& n) {
  auto r = certify_normalizer(n, n.algebra().partial_inverse(n));
  if (auto* c = std::get_if<NormalizerCertificate>(&r)) return std::move(*c);
  const auto& ref = std::get<NormalizerRefusal>(r);
  throw AlgebraError("section " + n.to_string() + " fails " + ref.condition + ": " + ref.detail);
}

NormalizerCertificate certify_diagonal(const AlgebraElement& a) {
  if (!in_diagonal(a)) throw AlgebraError("certify_diagonal: element is not in A");
  AlgebraElement inv(a.algebra());
  for (const auto& [u, v] : a.coeffs()) inv.set(u, v.inverse());
  auto r = certify_normalizer(a, inv);
  if (auto* c = std::get_if<NormalizerCertificate>(&r)) return std::move(*c);
  throw AlgebraError("diagonal element fails " + std::get<NormalizerRefusal>(r).condition);
}

PartialBijection beta_from_support(const AlgebraElement& n) {
  const auto& G = n.algebra().groupoid();
  std::map<Arrow, Arrow> m;
  for (Arrow a : n.support()) m[G.src(a)] = G.tgt(a);
  return PartialBijection(std::move(m));
}

bool in_N_x(const NormalizerCertificate& c, Arrow x) {
  c.n.algebra().groupoid().require_unit(x);
  return c.beta.apply(x).has_value();
}

bool in_N(const NormalizerCertificate& c, Arrow y, Arrow x) {
  c.n.algebra().groupoid().require_unit(y);
  auto b = in_N_x(c, x) ? c.beta.apply(x) : std::nullopt;
  return b && *b == y;
}

// ---------------------------------------------------------------------------

InverseSemigroupReport verify_inverse_semigroup(const SteinbergAlgebra& b,
                                                const std::vector<NormalizerCertificate>& sample,
                                                std::size_t bound) {
  InverseSemigroupReport rep;
  std::map<AlgebraElement, AlgebraElement> inv;  // element -> tracked partial inverse
  std::vector<AlgebraElement> order;
  auto add = [&](const AlgebraElement& s, const AlgebraElement& s_star) {
    auto [it, fresh] = inv.try_emplace(s, s_star);
    if (fresh) {
      order.push_back(s);
    } else if (!(it->second == s_star)) {
      rep.violations.push_back("two partial inverses tracked for " + s.to_string());
    }
    return fresh;
  };
  add(b.zero(), b.zero());
  for (const auto& c : sample) {
    add(c.n, c.n_star);
    add(c.n_star, c.n);
  }
  // Closure by products with the generators keeps this quadratic in |S|.
  std::vector<AlgebraElement> gens;
  for (const auto& c : sample) {
    gens.push_back(c.n);
    gens.push_back(c.n_star);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order.size() > bound) {
      rep.bounded = false;
      break;
    }
    const AlgebraElement s = order[i];
    const AlgebraElement s_star = inv.at(s);
    for (const auto& g : gens) {
      const AlgebraElement& g_star = inv.at(g);
      add(s * g, g_star * s_star);
      add(g * s, s_star * g_star);
    }
  }
  rep.size = order.size();
  if (!rep.bounded) return rep;

  for (const auto& s : order)
    for (const auto& t : order) {
      AlgebraElement st = s * t;
      auto it = inv.find(st);
      if (it == inv.end()) {
        rep.violations.push_back("product leaves the semigroup: " + st.to_string());
        continue;
      }
      if (!(it->second == inv.at(t) * inv.at(s))) rep.violations.push_back("(st)* != t*s* for s=" + s.to_string());
    }
  for (const auto& s : order) {
    std::size_t count = 0;
    const AlgebraElement& tracked = inv.at(s);
    for (const auto& t : order)
      if (s * t * s == s && t * s * t == t) {
        ++count;
        if (!(t == tracked)) rep.violations.push_back("untracked partial inverse of " + s.to_string());
      }
    if (count != 1) rep.violations.push_back("partial inverse of " + s.to_string() + " is not unique");
  }
  std::vector<AlgebraElement> idem;
  for (const auto& s : order)
    if (s * s == s) idem.push_back(s);
  rep.idempotents = idem.size();
  for (std::size_t i = 0; i < idem.size(); ++i)
    for (std::size_t j = i + 1; j < idem.size(); ++j)
      if (!(idem[i] * idem[j] == idem[j] * idem[i]))
        rep.violations.push_back("idempotents do not commute: " + idem[i].to_string() + ", " + idem[j].to_string());
  return rep;
}

}  // namespace gkd
