#include "gkd/induction.hpp"

#include <algorithm>
#include <set>

namespace gkd {

namespace {

Matrix columns_of(const Field& f, std::size_t rows, std::size_t count, auto column) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < count; ++j) cols.push_back(column(j));
  return Matrix::from_columns(f, rows, cols);
}

}  // namespace

ImprimitivityBimodule::ImprimitivityBimodule(const IsotropyData& xx)
    : xx_(xx),
      m_(Subspace::full(xx.algebra().field(), xx.algebra().dim()), xx.BJ()),
      mu_(xx.algebra().field(), 0, 0),
      pi_(xx.algebra().field(), 0, 0),
      nu_(xx.algebra().field(), 0, 0),
      zeta_(xx.algebra().field(), 0, 0) {
  const auto& B = xx_.algebra();
  const auto& G = B.groupoid();
  const auto& P = *B.presentation();
  const Field& f = B.field();
  const std::size_t d = B.dim(), n = m_.dim(), q = xx_.dim();
  const Arrow x = xx_.x();
  orbit_ = G.orbit(x);
  for (Arrow y : orbit_) chosen_.push_back(y == x ? x : G.hom_set(y, x).front());

  for (Arrow g = 0; g < d; ++g) {
    Vector e = unit_vector(f, d, g);
    left_.push_back(columns_of(f, n, n, [&](std::size_t j) { return cls(P.multiply(e, rep(unit_vector(f, n, j)))); }));
  }
  for (std::size_t k = 0; k < q; ++k) {
    Vector h = xx_.lift(unit_vector(f, q, k));
    right_.push_back(columns_of(f, n, n, [&](std::size_t j) { return cls(P.multiply(rep(unit_vector(f, n, j)), h)); }));
  }
  mu_ = columns_of(f, n, q, [&](std::size_t k) { return cls(xx_.lift(unit_vector(f, q, k))); });
  const Vector dx = unit_vector(f, d, x);
  pi_ = columns_of(f, n, n, [&](std::size_t j) { return cls(P.multiply(dx, rep(unit_vector(f, n, j)))); });
  nu_ = columns_of(f, q, n, [&](std::size_t j) {
    auto s = solve(mu_, pi_.column(j));
    if (!s) throw AlgebraError("pi_x leaves the range of mu_x");
    return *s;
  });
  std::vector<Vector> zcols;
  for (std::size_t i = 0; i < orbit_.size(); ++i) {
    Vector ny = unit_vector(f, d, chosen_[i]);
    for (std::size_t k = 0; k < q; ++k) zcols.push_back(cls(P.multiply(ny, xx_.lift(unit_vector(f, q, k)))));
  }
  zeta_ = Matrix::from_columns(f, n, zcols);
}

ImprimitivityBimodule ImprimitivityBimodule::build(const IsotropyData& xx) {
  if (xx.x() == kNoArrow || xx.y() != xx.x()) throw AlgebraError("M_x needs the point isotropy data B(x,x)");
  return ImprimitivityBimodule(xx);
}

std::size_t ImprimitivityBimodule::block_of(Arrow y) const {
  auto it = std::find(orbit_.begin(), orbit_.end(), y);
  if (it == orbit_.end()) throw AlgebraError("unit " + std::to_string(y) + " is not in the orbit");
  return static_cast<std::size_t>(it - orbit_.begin());
}

Vector ImprimitivityBimodule::mu(const Vector& h) const { return mu_.apply(h); }
Vector ImprimitivityBimodule::pi(const Vector& xi) const { return pi_.apply(xi); }
Vector ImprimitivityBimodule::nu(const Vector& xi) const { return nu_.apply(xi); }

// ---------------------------------------------------------------------------

std::vector<NamedCheck> check_bimodule(const ImprimitivityBimodule& m) {
  const auto& xx = m.isotropy();
  const auto& B = m.algebra();
  const auto& G = B.groupoid();
  const auto& Q = *xx.algebra_structure();
  const Field& f = B.field();
  const std::size_t d = B.dim(), n = m.dim(), q = xx.dim();
  const Arrow x = m.x();
  std::vector<NamedCheck> out;
  auto record = [&](std::string name, bool pass, std::string witness = {}) {
    out.push_back({std::move(name), pass, pass ? std::string() : std::move(witness)});
  };
  auto arrow = [&](Arrow a) { return "d" + G.label(a); };

  {
    std::string w;
    for (Arrow g = 0; g < d && w.empty(); ++g)
      for (std::size_t k = 0; k < q; ++k)
        if (!(m.left()[g] * m.right()[k] == m.right()[k] * m.left()[g])) {
          w = arrow(g) + " and q" + std::to_string(k);
          break;
        }
    record("bimodule law", w.empty(), w);
  }
  record("mu injective", rank(m.mu_matrix()) == q, "rank deficit");
  {
    std::string w;
    for (std::size_t k = 0; k < q && w.empty(); ++k)
      if (!(m.mu_matrix() * Q.right_mult(unit_vector(f, q, k)) == m.right()[k] * m.mu_matrix())) w = "q" + std::to_string(k);
    record("mu right linear", w.empty(), w);
  }
  {
    std::vector<Vector> rows;
    for (const auto& a : xx.J().basis()) {
      Matrix la(f, n, n);
      for (std::size_t u = 0; u < d; ++u)
        if (!a[u].is_zero()) la = la + a[u] * m.left()[u];
      for (auto& r : la.row_list()) rows.push_back(std::move(r));
    }
    Subspace killed = rows.empty() ? Subspace::full(f, n) : kernel(Matrix::from_rows(f, n, rows));
    bool pass = image(m.mu_matrix()) == image(m.pi_matrix()) && image(m.pi_matrix()) == killed;
    record("range of mu and pi", pass, "dims " + std::to_string(image(m.mu_matrix()).dim()) + "/" +
                                           std::to_string(image(m.pi_matrix()).dim()) + "/" +
                                           std::to_string(killed.dim()));
  }
  {
    bool pass = m.pi_matrix() * m.pi_matrix() == m.pi_matrix();
    for (Arrow u : G.units()) pass = pass && m.pi_matrix() * m.left()[u] == m.left()[u] * m.pi_matrix();
    record("pi idempotent and A-linear", pass, "pi^2 != pi or pi a != a pi");
  }
  {
    std::string w;
    for (Arrow g = 0; g < d && w.empty(); ++g) {
      Vector c = m.cls(unit_vector(f, d, g));
      Vector expect = (G.src(g) == x && G.tgt(g) == x) ? c : zero_vector(f, n);
      if (m.pi(c) != expect) w = arrow(g);
    }
    record("pi on normalizer classes", w.empty(), w);
  }
  {
    std::string w;
    for (Arrow g = 0; g < d && w.empty(); ++g)
      for (Arrow h = 0; h < d; ++h) {
        if (G.src(g) != x || G.src(h) != x || G.tgt(g) == G.tgt(h)) continue;
        Vector prod = (B.partial_inverse(B.delta(g)) * B.delta(h)).to_vector();
        if (!is_zero(m.pi(m.cls(prod)))) {
          w = arrow(g) + "*" + arrow(h);
          break;
        }
      }
    record("pi kills n*m across the orbit", w.empty(), w);
  }
  {
    std::string w;
    for (Arrow g = 0; g < d && w.empty(); ++g) {
      if (G.src(g) != x) continue;
      Vector c = m.cls(unit_vector(f, d, g));
      for (Arrow u : G.units())
        if (m.left()[u].apply(c) != (u == G.tgt(g) ? c : zero_vector(f, n))) {
          w = "d" + G.label(u) + " on " + arrow(g);
          break;
        }
    }
    record("A acts on normalizer classes through beta", w.empty(), w);
  }
  {
    std::size_t total = 0;
    std::string w;
    for (std::size_t i = 0; i < m.orbit().size(); ++i) {
      Arrow y = m.orbit()[i];
      std::vector<Vector> rows;
      for (Arrow u : G.units()) {
        Matrix shifted = m.left()[u] - (u == y ? Matrix::identity(f, n) : Matrix(f, n, n));
        for (auto& r : shifted.row_list()) rows.push_back(std::move(r));
      }
      Subspace myx = kernel(Matrix::from_rows(f, n, rows));
      total += myx.dim();
      std::vector<Vector> block;
      for (std::size_t k = 0; k < q; ++k) block.push_back(m.zeta_matrix().column(i * q + k));
      if (!(myx == Subspace::span(f, n, block)) && w.empty()) w = "M(" + G.label(y) + ",x) != zeta_y B(x,x)";
    }
    if (total != n && w.empty()) w = "summands have total dimension " + std::to_string(total);
    record("direct sum over the orbit", w.empty(), w);
  }
  record("free over B(x,x)", n == m.orbit().size() * q && rank(m.zeta_matrix()) == n,
         "dim M_x = " + std::to_string(n) + ", |orbit| dim B(x,x) = " + std::to_string(m.orbit().size() * q));
  record("mu nu = pi and nu mu = id",
         m.mu_matrix() * m.nu_matrix() == m.pi_matrix() && m.nu_matrix() * m.mu_matrix() == Matrix::identity(f, q),
         "composition mismatch");
  {
    std::string w;
    for (std::size_t k = 0; k < q && w.empty(); ++k)
      if (!(m.nu_matrix() * m.right()[k] == Q.right_mult(unit_vector(f, q, k)) * m.nu_matrix())) w = "q" + std::to_string(k);
    record("nu right linear", w.empty(), w);
  }
  {
    std::string w;
    for (Arrow g = 0; g < d && w.empty(); ++g) {
      Vector e = unit_vector(f, d, g);
      Vector expect = (G.src(g) == x && G.tgt(g) == x) ? xx.p(e) : zero_vector(f, q);
      if (m.nu(m.cls(e)) != expect) w = arrow(g);
    }
    record("nu on arrow classes", w.empty(), w);
  }
  {
    std::string w;
    for (Arrow g = 0; g < d && w.empty(); ++g) {
      Vector e = unit_vector(f, d, g);
      if (m.nu(m.cls(e)) != xx.E(e)) w = arrow(g);
    }
    record("nu equals E", w.empty(), w);
  }
  return out;
}

// ---------------------------------------------------------------------------

Vector induced_coefficient(const ImprimitivityBimodule& m, Arrow gamma) {
  const auto& B = m.algebra();
  const auto& G = B.groupoid();
  const Arrow ny = m.chosen()[m.block_of(G.src(gamma))];
  const Arrow nz = m.chosen()[m.block_of(G.tgt(gamma))];
  AlgebraElement b = B.partial_inverse(B.delta(nz)) * B.delta(gamma) * B.delta(ny);
  return m.nu(m.cls(b.to_vector()));
}

FdModule induce(const ImprimitivityBimodule& m, const FdModule& v) {
  const auto& xx = m.isotropy();
  if (v.algebra_ptr() != xx.algebra_structure() && !(v.algebra() == *xx.algebra_structure()))
    throw ModuleError("induce: module is not over B(x,x)");
  if (auto bad = check_module(v)) throw ModuleError("induce: module fails " + bad->kind);
  const auto& B = m.algebra();
  const auto& G = B.groupoid();
  const Field& f = B.field();
  const std::size_t k = v.dim(), blocks = m.orbit().size(), n = blocks * k;
  const std::set<Arrow> orbit(m.orbit().begin(), m.orbit().end());
  std::vector<Matrix> action;
  for (Arrow g = 0; g < B.dim(); ++g) {
    Matrix a(f, n, n);
    if (orbit.count(G.src(g))) {
      const std::size_t y = m.block_of(G.src(g)), z = m.block_of(G.tgt(g));
      Matrix r = v.rho(induced_coefficient(m, g));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a(z * k + i, y * k + j) = r(i, j);
    }
    action.push_back(std::move(a));
  }
  return FdModule(B.presentation(), n, std::move(action));
}

Subspace induced_subspace(const ImprimitivityBimodule& m, const Subspace& w) {
  const Field& f = w.field();
  const std::size_t k = w.ambient_dim(), blocks = m.orbit().size();
  std::vector<Vector> basis;
  for (std::size_t b = 0; b < blocks; ++b)
    for (const auto& v : w.basis()) {
      Vector e = zero_vector(f, blocks * k);
      for (std::size_t i = 0; i < k; ++i) e[b * k + i] = v[i];
      basis.push_back(std::move(e));
    }
  return Subspace::span(f, blocks * k, basis);
}

namespace {

// v -> the vector with v in the block of x.
Matrix x_block_embedding(const ImprimitivityBimodule& m, std::size_t k) {
  const Field& f = m.algebra().field();
  const std::size_t bx = m.block_of(m.x()), n = m.orbit().size() * k;
  Matrix j(f, n, k);
  for (std::size_t i = 0; i < k; ++i) j(bx * k + i, i) = f.one();
  return j;
}

}  // namespace

RoundtripCertificate verify_res_ind_roundtrip(const ImprimitivityBimodule& m, const FdModule& v) {
  const auto& xx = m.isotropy();
  const Field& f = v.field();
  FdModule ind = induce(m, v);
  Restriction res = restriction(ind, xx);
  Matrix j = x_block_embedding(m, v.dim());
  RoundtripCertificate c;
  c.dim_v = v.dim();
  c.dim_restriction = res.carrier.dim();
  c.lands = true;
  for (std::size_t i = 0; i < v.dim(); ++i) c.lands = c.lands && res.carrier.contains(j.column(i));
  c.injective = rank(j) == v.dim();
  c.onto = c.lands && c.injective && res.carrier.dim() == v.dim();
  c.linear = true;
  for (std::size_t k = 0; k < xx.dim() && c.linear; ++k)
    c.linear = ind.rho(xx.lift(unit_vector(f, xx.dim(), k))) * j == j * v.action(k);
  return c;
}

EmbeddingCertificate verify_ind_res_embedding(const ImprimitivityBimodule& m, const FdModule& v) {
  const auto& xx = m.isotropy();
  const auto& B = m.algebra();
  const Field& f = v.field();
  Restriction res = restriction(v, xx);
  FdModule ind = induce(m, res.module);
  std::vector<Vector> cols;
  for (Arrow ny : m.chosen()) {
    Matrix act = v.action(ny);
    for (const auto& w : res.carrier.basis()) cols.push_back(act.apply(w));
  }
  Matrix r = Matrix::from_columns(f, v.dim(), cols);
  EmbeddingCertificate c;
  c.dim_ind = ind.dim();
  c.dim_v = v.dim();
  c.image_dim = rank(r);
  c.injective = c.image_dim == ind.dim();
  c.onto = c.image_dim == v.dim();
  c.linear = true;
  for (Arrow g = 0; g < B.dim() && c.linear; ++g) c.linear = v.action(g) * r == r * ind.action(g);
  return c;
}

TransferResult submodule_transfer(const ImprimitivityBimodule& m, const FdModule& v, const FdModule& ind,
                                  const Subspace& z) {
  if (!is_submodule(ind, z)) throw ModuleError("submodule_transfer: Z is not invariant");
  const Field& f = v.field();
  Matrix j = x_block_embedding(m, v.dim());
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < v.dim(); ++i) cols.push_back(z.residual(j.column(i)));
  Subspace w = v.dim() == 0 ? Subspace(f, 0) : kernel(Matrix::from_columns(f, ind.dim(), cols));
  bool eq = induced_subspace(m, w) == z;
  return {std::move(w), eq};
}

LatticeCertificate verify_lattice_transfer(const ImprimitivityBimodule& m, const FdModule& v, std::uint64_t budget) {
  FdModule ind = induce(m, v);
  auto subs_v = all_submodules(v, budget);
  auto subs_ind = all_submodules(ind, budget);
  LatticeCertificate c;
  c.submodules_v = subs_v.size();
  c.submodules_ind = subs_ind.size();
  std::vector<Subspace> images;
  std::set<std::vector<Vector>> image_set, ind_set;
  for (const auto& w : subs_v) {
    images.push_back(induced_subspace(m, w));
    image_set.insert(images.back().basis());
  }
  for (const auto& z : subs_ind) ind_set.insert(z.basis());
  c.bijective = image_set.size() == subs_v.size() && image_set == ind_set;
  c.order_preserving = true;
  for (std::size_t a = 0; a < subs_v.size(); ++a)
    for (std::size_t b = 0; b < subs_v.size(); ++b)
      if (subs_v[b].contains(subs_v[a]) != images[b].contains(images[a])) c.order_preserving = false;
  std::set<std::vector<Vector>> v_set;
  for (const auto& w : subs_v) v_set.insert(w.basis());
  c.transfer_inverse = true;
  for (const auto& z : subs_ind) {
    auto t = submodule_transfer(m, v, ind, z);
    if (!t.induced_equals || !v_set.count(t.w.basis())) c.transfer_inverse = false;
  }
  return c;
}

}  // namespace gkd
