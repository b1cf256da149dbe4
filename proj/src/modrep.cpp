#include "gkd/modrep.hpp"

#include <algorithm>
#include <set>

#include "gkd/kernels.hpp"

namespace gkd {

FdModule::FdModule(PresentationPtr algebra, std::size_t dim, std::vector<Matrix> action)
    : alg_(std::move(algebra)), dim_(dim), action_(std::move(action)) {
  if (action_.size() != alg_->dim())
    throw ModuleError("module needs one matrix per algebra basis element (" + std::to_string(alg_->dim()) + "), got " +
                      std::to_string(action_.size()));
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("action matrix is not " + std::to_string(dim_) + " square");
    if (!(m.field() == alg_->field())) throw FieldMismatch("action matrix over the wrong field");
  }
}

Matrix FdModule::rho(const Vector& b) const {
  if (b.size() != alg_->dim()) throw DimensionMismatch("rho: algebra element has wrong length");
  Matrix r(field(), dim_, dim_);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero()) r = r + b[i] * action_[i];
  return r;
}

std::optional<ModuleViolation> check_module(const FdModule& m) {
  const auto& P = m.algebra();
  for (std::size_t i = 0; i < P.dim(); ++i)
    for (std::size_t j = 0; j < P.dim(); ++j) {
      Matrix expect(m.field(), m.dim(), m.dim());
      for (const auto& t : P.product(i, j)) expect = expect + t.c * m.action(t.k);
      if (!(m.action(i) * m.action(j) == expect)) return ModuleViolation{"structure constants", i, j};
    }
  std::vector<Vector> image;
  for (const auto& a : m.action())
    for (std::size_t j = 0; j < m.dim(); ++j) image.push_back(a.column(j));
  if (Subspace::span(m.field(), m.dim(), image).dim() != m.dim()) return ModuleViolation{"unitality", 0, 0};
  return std::nullopt;
}

FdModule regular_module(const PresentationPtr& p) {
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < p->dim(); ++i) action.push_back(p->left_mult(unit_vector(p->field(), p->dim(), i)));
  return FdModule(p, p->dim(), std::move(action));
}

FdModule direct_sum(const FdModule& a, const FdModule& b) {
  if (a.algebra_ptr() != b.algebra_ptr() && !(a.algebra() == b.algebra()))
    throw ModuleError("direct sum of modules over different algebras");
  const std::size_t n = a.dim() + b.dim();
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    Matrix m(a.field(), n, n);
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) m(r, c) = a.action(i)(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) m(a.dim() + r, a.dim() + c) = b.action(i)(r, c);
    action.push_back(std::move(m));
  }
  return FdModule(a.algebra_ptr(), n, std::move(action));
}

bool is_submodule(const FdModule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionMismatch("is_submodule: ambient mismatch");
  for (const auto& a : m.action())
    for (const auto& v : s.basis())
      if (!s.contains(a.apply(v))) return false;
  return true;
}

FdModule submodule(const FdModule& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw ModuleError("subspace is not invariant");
  std::vector<Matrix> action;
  for (const auto& a : m.action()) {
    std::vector<Vector> cols;
    for (const auto& v : s.basis()) cols.push_back(*s.coordinates(a.apply(v)));
    action.push_back(Matrix::from_columns(m.field(), s.dim(), cols));
  }
  return FdModule(m.algebra_ptr(), s.dim(), std::move(action));
}

FdModule quotient_module(const FdModule& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw ModuleError("subspace is not invariant");
  QuotientSpace q(Subspace::full(m.field(), m.dim()), s);
  std::vector<Matrix> action;
  for (const auto& a : m.action()) {
    std::vector<Vector> cols;
    for (const auto& v : q.section_basis()) cols.push_back(q.project(a.apply(v)));
    action.push_back(Matrix::from_columns(m.field(), q.dim(), cols));
  }
  return FdModule(m.algebra_ptr(), q.dim(), std::move(action));
}

Subspace generated_submodule(const FdModule& m, const std::vector<Vector>& vectors) {
  Subspace s = Subspace::span(m.field(), m.dim(), vectors);
  std::vector<Vector> frontier = s.basis();
  while (!frontier.empty()) {
    std::vector<Vector> next;
    for (const auto& v : frontier)
      for (const auto& a : m.action()) {
        Vector w = a.apply(v);
        if (s.contains(w)) continue;
        std::vector<Vector> rows = s.basis();
        rows.push_back(w);
        s = Subspace::span(m.field(), m.dim(), rows);
        next.push_back(std::move(w));
      }
    frontier = std::move(next);
  }
  return s;
}

std::vector<Subspace> all_invariant_subspaces(const Field& f, std::size_t n, const std::vector<Matrix>& gens,
                                              std::uint64_t budget) {
  if (!f.is_prime_field()) throw FieldMismatch("submodule enumeration needs a finite field");
  const std::uint32_t p = f.characteristic();
  const std::uint64_t size = kernels::scan_size(p, n);
  if (size > budget)
    throw BudgetExceeded("enumeration of " + f.name() + "^" + std::to_string(n) + " exceeds the budget of " +
                         std::to_string(budget) + " vectors");
  std::vector<kernels::ModPMatrix> mats;
  for (const auto& g : gens) mats.push_back(kernels::to_modp(g));
  const auto cyclic = kernels::cyclic_subspaces_parallel(p, n, mats);
  // every invariant subspace is a sum of cyclic ones
  std::set<kernels::Packed> all{kernels::Packed{}};
  all.insert(cyclic.begin(), cyclic.end());
  std::vector<kernels::Packed> frontier(cyclic.begin(), cyclic.end());
  while (!frontier.empty()) {
    std::vector<kernels::Packed> next;
    for (const auto& a : frontier)
      for (const auto& c : cyclic) {
        auto s = kernels::modp_sum(p, n, a, c);
        if (all.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  std::vector<kernels::Packed> sorted(all.begin(), all.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const kernels::Packed& a, const kernels::Packed& b) { return a.size() < b.size(); });
  std::vector<Subspace> out;
  for (const auto& s : sorted) out.push_back(kernels::unpack(f, n, s));
  return out;
}

std::vector<Subspace> all_submodules(const FdModule& m, std::uint64_t budget) {
  return all_invariant_subspaces(m.field(), m.dim(), m.action(), budget);
}

// ---------------------------------------------------------------------------

namespace {

// Proper nonzero submodule generated by some candidate vector, if any.
std::optional<Subspace> search_witness(const FdModule& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  auto proper = [&](const Vector& v) -> std::optional<Subspace> {
    if (is_zero(v)) return std::nullopt;
    Subspace s = generated_submodule(m, {v});
    if (s.dim() < n) return s;
    return std::nullopt;
  };
  for (std::size_t j = 0; j < n; ++j)
    if (auto s = proper(unit_vector(f, n, j))) return s;
  // eigenvectors of basis actions and of the ones of pairwise sums, for small
  // integer eigenvalues
  std::vector<Matrix> cands = m.action();
  for (std::size_t i = 0; i < m.action().size(); ++i)
    for (std::size_t j = i + 1; j < m.action().size(); ++j) cands.push_back(m.action(i) + m.action(j));
  const Matrix id = Matrix::identity(f, n);
  for (const auto& c : cands)
    for (int lambda = -2; lambda <= 2; ++lambda) {
      Subspace k = kernel(c - f.from_int(lambda) * id);
      if (k.dim() == 0 || k.dim() == n) continue;
      for (const auto& v : k.basis())
        if (auto s = proper(v)) return s;
    }
  return std::nullopt;
}

std::vector<Vector> flattened(const std::vector<Matrix>& ms) {
  std::vector<Vector> out;
  for (const auto& m : ms) {
    Vector v;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    out.push_back(std::move(v));
  }
  return out;
}

// Every nonzero rho(b) is invertible when rho(x)^T rho(x) equals a positive
// definite quadratic form in x times the identity.
bool norm_form_certificate(const FdModule& m) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  if (!f.is_rational()) return false;
  std::vector<Matrix> basis;
  std::vector<Vector> kept;
  for (const auto& a : m.action()) {
    auto flat = flattened({a})[0];
    std::vector<Vector> trial = kept;
    trial.push_back(flat);
    if (Subspace::span(f, n * n, trial).dim() > kept.size()) {
      kept.push_back(flat);
      basis.push_back(a);
    }
  }
  if (basis.size() != n) return false;
  const Matrix id = Matrix::identity(f, n);
  Matrix gram(f, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Matrix s = basis[a].transpose() * basis[b] + basis[b].transpose() * basis[a];
      Scalar c = s(0, 0);
      if (!(s == c * id)) return false;
      gram(a, b) = gram(b, a) = c / f.from_int(2);
    }
  // positive definite iff every pivot of symmetric elimination is positive
  for (std::size_t k = 0; k < n; ++k) {
    if (sgn(gram(k, k).rational()) <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      Scalar factor = gram(i, k) / gram(k, k);
      for (std::size_t j = k; j < n; ++j) gram(i, j) -= factor * gram(k, j);
    }
  }
  return true;
}

}  // namespace

IrreducibilityVerdict is_irreducible(const FdModule& m, std::uint64_t budget) {
  const Field& f = m.field();
  const std::size_t n = m.dim();
  if (n == 0) throw ModuleError("the zero module is not considered irreducible");
  IrreducibilityVerdict v;
  if (f.is_prime_field() && kernels::scan_size(f.characteristic(), n) <= budget) {
    std::vector<kernels::ModPMatrix> mats;
    for (const auto& a : m.action()) mats.push_back(kernels::to_modp(a));
    auto cyclic = kernels::cyclic_subspaces_parallel(f.characteristic(), n, mats);
    v.exact = true;
    for (const auto& c : cyclic)
      if (c.size() < n * n) {
        v.kind = Irreducibility::Reducible;
        v.witness = kernels::unpack(f, n, c);
        v.reason = "a nonzero vector generates a proper submodule";
        return v;
      }
    v.kind = Irreducibility::Irreducible;
    v.reason = "every nonzero vector generates the module";
    return v;
  }
  if (n == 1) {
    v.kind = Irreducibility::Irreducible;
    v.reason = "dimension 1";
    return v;
  }
  if (auto w = search_witness(m)) {
    v.kind = Irreducibility::Reducible;
    v.witness = std::move(w);
    v.reason = "explicit proper submodule";
    return v;
  }
  if (Subspace::span(f, n * n, flattened(m.action())).dim() == n * n) {
    v.kind = Irreducibility::Irreducible;
    v.reason = "the action spans the full matrix algebra";
    return v;
  }
  if (norm_form_certificate(m)) {
    v.kind = Irreducibility::Irreducible;
    v.reason = "the action is a division algebra with an anisotropic norm form";
    return v;
  }
  v.reason = "no witness and no certificate";
  return v;
}

Subspace annihilator(const FdModule& m) {
  const auto flat = flattened(m.action());
  const std::size_t rows = m.dim() * m.dim();
  if (rows == 0) return Subspace::full(m.field(), m.algebra().dim());
  return kernel(Matrix::from_columns(m.field(), rows, flat));
}

Subspace hom_space(const FdModule& a, const FdModule& b) {
  if (a.algebra().dim() != b.algebra().dim()) throw ModuleError("hom_space: modules over different algebras");
  const Field& f = a.field();
  const std::size_t n = a.dim(), m = b.dim(), unknowns = m * n;
  // X is m x n, unknown (i, j) at index i * n + j; equations X A_k - B_k X = 0.
  std::vector<Vector> rows;
  for (std::size_t k = 0; k < a.algebra().dim(); ++k) {
    const Matrix& ak = a.action(k);
    const Matrix& bk = b.action(k);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector r = zero_vector(f, unknowns);
        for (std::size_t l = 0; l < n; ++l) r[i * n + l] += ak(l, j);
        for (std::size_t l = 0; l < m; ++l) r[l * n + j] -= bk(i, l);
        if (!is_zero(r)) rows.push_back(std::move(r));
      }
  }
  if (rows.empty()) return Subspace::full(f, unknowns);
  return kernel(Matrix::from_rows(f, unknowns, rows));
}

// ---------------------------------------------------------------------------

Restriction restriction(const FdModule& m, const IsotropyData& xx) {
  const auto& B = xx.algebra();
  if (m.algebra().dim() != B.dim()) throw ModuleError("restriction needs a module over B");
  const Field& f = m.field();
  const std::size_t n = m.dim();
  std::vector<Vector> rows;
  for (const auto& a : xx.J().basis())
    for (auto& r : m.rho(a).row_list()) rows.push_back(std::move(r));
  Subspace carrier = rows.empty() ? Subspace::full(f, n) : kernel(Matrix::from_rows(f, n, rows));
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < xx.dim(); ++k) {
    Matrix c = m.rho(xx.lift(unit_vector(f, xx.dim(), k)));
    std::vector<Vector> cols;
    for (const auto& w : carrier.basis()) {
      auto coords = carrier.coordinates(c.apply(w));
      if (!coords) throw ModuleError("C(x,x) does not preserve V_x");
      cols.push_back(std::move(*coords));
    }
    action.push_back(Matrix::from_columns(f, carrier.dim(), cols));
  }
  FdModule res(xx.algebra_structure(), carrier.dim(), std::move(action));
  return {std::move(carrier), std::move(res)};
}

GermSpace germ_space(const FdModule& m, const SteinbergAlgebra& b, Arrow x) {
  if (m.algebra().dim() != b.dim()) throw ModuleError("germ space needs a module over B");
  const Field& f = m.field();
  std::vector<Vector> gens;
  const Subspace jx = point_ideal(b, x);
  for (const auto& a : jx.basis()) {
    Matrix r = m.rho(a);
    for (std::size_t j = 0; j < m.dim(); ++j) gens.push_back(r.column(j));
  }
  Subspace jv = Subspace::span(f, m.dim(), gens);
  QuotientSpace q(Subspace::full(f, m.dim()), jv);
  return {x, std::move(jv), std::move(q)};
}

Vector germ_of(const GermSpace& g, const Vector& v) { return g.q.project(v); }

Vector disintegration_action(const FdModule& m, const IsotropyData& yx, const GermSpace& gx, const GermSpace& gy,
                             const Vector& g, const Vector& germ) {
  if (yx.x() != gx.x || yx.y() != gy.x) throw ModuleError("disintegration: germ spaces do not match B(y,x)");
  return gy.q.project(m.act(yx.lift(g), gx.q.inject(germ)));
}

bool disintegration_well_defined(const FdModule& m, const IsotropyData& yx, const GermSpace& gx, const GermSpace& gy) {
  for (const auto& h : yx.H().basis()) {
    Matrix r = m.rho(h);
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!gy.jv.contains(r.column(j))) return false;
  }
  for (const auto& c : yx.C().basis()) {
    Matrix r = m.rho(c);
    for (const auto& w : gx.jv.basis())
      if (!gy.jv.contains(r.apply(w))) return false;
  }
  return true;
}

FdModule germ_module(const FdModule& m, const IsotropyData& xx, const GermSpace& gx) {
  const Field& f = m.field();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < xx.dim(); ++k) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < gx.dim(); ++j)
      cols.push_back(disintegration_action(m, xx, gx, gx, unit_vector(f, xx.dim(), k), unit_vector(f, gx.dim(), j)));
    action.push_back(Matrix::from_columns(f, gx.dim(), cols));
  }
  return FdModule(xx.algebra_structure(), gx.dim(), std::move(action));
}

}  // namespace gkd
