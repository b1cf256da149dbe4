#include "gkd/ideals.hpp"

#include <algorithm>
#include <exception>

namespace gkd {

namespace {

// Sparse product e_a e_k e_b as a dense vector.
Vector triple_product(const AlgebraPresentation& p, std::size_t a, std::size_t k, std::size_t b) {
  Vector out = zero_vector(p.field(), p.dim());
  for (const auto& t : p.product(a, k))
    for (const auto& s : p.product(t.k, b)) out[s.k] += t.c * s.c;
  return out;
}

std::vector<Arrow> sorted_units(const FiniteGroupoid& g) {
  std::vector<Arrow> u = g.units();
  std::sort(u.begin(), u.end());
  return u;
}

}  // namespace

Subspace induced_ideal(const IsotropyData& xx, const Subspace& i) {
  const auto& q = *xx.algebra_structure();
  if (i.ambient_dim() != xx.dim() || !is_two_sided(q, i)) throw IdealError("induced_ideal: I is not an ideal of B(x,x)");
  const auto& B = xx.algebra();
  const auto& p = *B.presentation();
  const Field& f = B.field();
  const std::size_t d = B.dim();
  const Matrix& e = xx.E_matrix();
  // (g, h) -> E(g b h) is bilinear and I is a subspace, so E(g b h) lies in I
  // for all g, h exactly when it does for g, h running over the arrow basis.
  std::vector<Vector> rows;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      std::vector<Vector> cols;
      bool any = false;
      for (std::size_t k = 0; k < d; ++k) {
        Vector r = i.residual(e.apply(triple_product(p, a, k, b)));
        any = any || !is_zero(r);
        cols.push_back(std::move(r));
      }
      if (!any) continue;
      for (auto& row : Matrix::from_columns(f, xx.dim(), cols).row_list())
        if (!is_zero(row)) rows.push_back(std::move(row));
    }
  if (rows.empty()) return Subspace::full(f, d);
  return kernel(Matrix::from_rows(f, d, rows));
}

Subspace primitive_from_isotropy(const IsotropyData& xx, const FdModule& w) {
  auto verdict = is_irreducible(w);
  if (!verdict.irreducible()) throw IdealError("primitive_from_isotropy: W is not certified irreducible (" + verdict.reason + ")");
  return induced_ideal(xx, annihilator(w));
}

GermDecomposition germ_annihilator_decomposition(const FdModule& v, const AlgebraPtr& b) {
  const Field& f = b->field();
  const std::size_t d = b->dim();
  if (auto bad = check_module(v)) throw ModuleError("germ decomposition: module fails " + bad->kind);
  const std::vector<Arrow> units = sorted_units(b->groupoid());
  std::vector<std::size_t> dims(units.size());
  std::vector<std::optional<Subspace>> per(units.size());
  std::vector<std::exception_ptr> errors(units.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t n = 0; n < static_cast<std::ptrdiff_t>(units.size()); ++n) {
    const auto i = static_cast<std::size_t>(n);
    try {
      GermSpace gx = germ_space(v, *b, units[i]);
      dims[i] = gx.dim();
      if (gx.dim() == 0) {
        per[i] = Subspace::full(f, d);
      } else {
        IsotropyData xx = IsotropyData::build(b, units[i], units[i]);
        per[i] = induced_ideal(xx, annihilator(germ_module(v, xx, gx)));
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Subspace meet = Subspace::full(f, d);
  std::vector<Subspace> induced;
  for (auto& s : per) {
    meet = intersect(meet, *s);
    induced.push_back(std::move(*s));
  }
  Subspace ann = annihilator(v);
  bool equal = meet == ann;
  return GermDecomposition{units, std::move(dims), std::move(induced), std::move(meet), std::move(ann), equal};
}

FdModule fiber_quotient(const FdModule& v, const IsotropyData& xx, const Subspace& w) {
  if (xx.x() == kNoArrow || xx.x() != xx.y()) throw ModuleError("fiber_quotient needs B(x,x)");
  GermSpace gx = germ_space(v, xx.algebra(), xx.x());
  if (!w.contains(gx.jv)) throw ModuleError("fiber_quotient: W does not contain J_x V");
  for (const auto& c : xx.C().basis()) {
    Matrix r = v.rho(c);
    for (const auto& u : w.basis())
      if (!w.contains(r.apply(u))) throw ModuleError("fiber_quotient: W is not a C(x,x)-submodule");
  }
  const Field& f = v.field();
  QuotientSpace q(Subspace::full(f, v.dim()), w);
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < xx.dim(); ++k) {
    Matrix r = v.rho(xx.lift(unit_vector(f, xx.dim(), k)));
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < q.dim(); ++j) cols.push_back(q.project(r.apply(q.inject(unit_vector(f, q.dim(), j)))));
    action.push_back(Matrix::from_columns(f, q.dim(), cols));
  }
  return FdModule(xx.algebra_structure(), q.dim(), std::move(action));
}

bool multiplies_into(const FdModule& v, const Subspace& w, const Vector& b) {
  const auto& p = v.algebra();
  for (std::size_t d = 0; d < p.dim(); ++d) {
    Matrix r = v.rho(p.multiply(unit_vector(p.field(), p.dim(), d), b));
    for (std::size_t j = 0; j < v.dim(); ++j)
      if (!w.contains(r.column(j))) return false;
  }
  return true;
}

std::vector<Subspace> all_ideals(const AlgebraPresentation& p, std::uint64_t budget) {
  std::vector<Matrix> gens;
  for (std::size_t k = 0; k < p.dim(); ++k) {
    Vector e = unit_vector(p.field(), p.dim(), k);
    gens.push_back(p.left_mult(e));
    gens.push_back(p.right_mult(e));
  }
  return all_invariant_subspaces(p.field(), p.dim(), gens, budget);
}

std::vector<Subspace> maximal_ideals(const std::vector<Subspace>& ideals) {
  std::vector<Subspace> out;
  for (const auto& i : ideals) {
    if (i.dim() == i.ambient_dim()) continue;
    bool maximal = std::none_of(ideals.begin(), ideals.end(), [&](const Subspace& j) {
      return j.dim() < j.ambient_dim() && j.dim() > i.dim() && j.contains(i);
    });
    if (maximal) out.push_back(i);
  }
  return out;
}

FdModule quotient_by_ideal(const SteinbergAlgebra& b, const Subspace& i) {
  if (!is_two_sided(*b.presentation(), i)) throw IdealError("quotient_by_ideal: not a two-sided ideal");
  return quotient_module(regular_module(b.presentation()), i);
}

std::optional<FdModule> primitive_witness(const SteinbergAlgebra& b, const Subspace& i, std::uint64_t budget) {
  FdModule v = quotient_by_ideal(b, i);
  if (v.dim() == 0) return std::nullopt;
  auto subs = all_submodules(v, budget);
  for (const auto& s : subs) {
    if (s.dim() == 0) continue;
    bool minimal = std::none_of(subs.begin(), subs.end(), [&](const Subspace& t) {
      return t.dim() > 0 && t.dim() < s.dim() && s.contains(t);
    });
    if (!minimal) continue;
    FdModule w = submodule(v, s);
    if (annihilator(w) == i) return w;
  }
  return std::nullopt;
}

EffrosHahnReport effros_hahn_check(const AlgebraPtr& b, const Subspace& i, const FdModule* witness) {
  FdModule v = quotient_by_ideal(*b, i);
  GermDecomposition dec = germ_annihilator_decomposition(v, b);
  bool inter = dec.equal && dec.intersection == i;
  EffrosHahnReport r{std::move(dec), inter, std::nullopt, std::nullopt, false};
  if (!witness) return r;
  if (!(annihilator(*witness) == i)) throw IdealError("effros_hahn_check: witness annihilator differs from I");
  for (Arrow x : sorted_units(b->groupoid())) {
    GermSpace gx = germ_space(*witness, *b, x);
    if (gx.dim() == 0) continue;
    IsotropyData xx = IsotropyData::build(b, x, x);
    Subspace ind = induced_ideal(xx, annihilator(germ_module(*witness, xx, gx)));
    r.single_x = x;
    r.single_ok = ind == i;
    r.single_induced = std::move(ind);
    break;
  }
  return r;
}

InducingIdeal inducing_ideal_experiment(const AlgebraPtr& b, const Subspace& i, const FdModule& v) {
  if (!(annihilator(v) == i)) throw IdealError("inducing_ideal_experiment: witness annihilator differs from I");
  InducingIdeal out;
  for (Arrow x : sorted_units(b->groupoid())) {
    GermSpace gx = germ_space(v, *b, x);
    if (gx.dim() == 0) continue;
    IsotropyData xx = IsotropyData::build(b, x, x);
    FdModule fiber = germ_module(v, xx, gx);
    auto verdict = is_irreducible(fiber);
    out.x = x;
    out.fiber_dim = gx.dim();
    out.fiber_irreducible = verdict.irreducible();
    out.inducing = annihilator(fiber);
    // The annihilator of an irreducible module is primitive by definition.
    out.inducing_primitive = out.fiber_irreducible;
    out.induced_equals = induced_ideal(xx, *out.inducing) == i;
    out.answer = out.fiber_irreducible && out.induced_equals;
    if (!out.fiber_irreducible) out.reason = "V[x] not certified irreducible: " + verdict.reason;
    else if (!out.induced_equals) out.reason = "Ind_x(Ann V[x]) differs from I";
    return out;
  }
  out.reason = "V[x] = 0 at every unit";
  return out;
}

}  // namespace gkd
