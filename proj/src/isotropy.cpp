#include "gkd/isotropy.hpp"

#include <algorithm>
#include <set>

namespace gkd {

Subspace vanishing_ideal(const SteinbergAlgebra& b, const std::vector<Arrow>& s) {
  std::set<Arrow> vanish;
  for (Arrow u : s) {
    b.groupoid().require_unit(u);
    vanish.insert(u);
  }
  std::vector<Vector> basis;
  for (Arrow u : b.groupoid().units())
    if (!vanish.count(u)) basis.push_back(unit_vector(b.field(), b.dim(), u));
  return Subspace::span(b.field(), b.dim(), basis);
}

Subspace left_ideal_span(const SteinbergAlgebra& b, const Subspace& i) {
  const auto& P = *b.presentation();
  std::vector<Vector> gens;
  for (const auto& a : i.basis())
    for (std::size_t k = 0; k < b.dim(); ++k) gens.push_back(P.multiply(a, unit_vector(b.field(), b.dim(), k)));
  return Subspace::span(b.field(), b.dim(), gens);
}

Subspace right_ideal_span(const SteinbergAlgebra& b, const Subspace& j) {
  const auto& P = *b.presentation();
  std::vector<Vector> gens;
  for (const auto& a : j.basis())
    for (std::size_t k = 0; k < b.dim(); ++k) gens.push_back(P.multiply(unit_vector(b.field(), b.dim(), k), a));
  return Subspace::span(b.field(), b.dim(), gens);
}

Subspace compute_C(const SteinbergAlgebra& b, const Subspace& i, const Subspace& j) {
  const auto& P = *b.presentation();
  const Field& f = b.field();
  const std::size_t d = b.dim();
  const Subspace ib = left_ideal_span(b, i);
  const Subspace bj = right_ideal_span(b, j);
  // c -> residual(c a) modulo IB for a in J, and c -> residual(a c) modulo BJ
  // for a in I; both are linear in c, so C is the kernel of the stack.
  std::vector<Vector> rows;
  auto stack = [&](const Subspace& target, const Vector& a, bool right) {
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < d; ++k) {
      Vector e = unit_vector(f, d, k);
      cols.push_back(target.residual(right ? P.multiply(e, a) : P.multiply(a, e)));
    }
    Matrix m = Matrix::from_columns(f, d, cols);
    for (auto& r : m.row_list()) rows.push_back(std::move(r));
  };
  for (const auto& a : j.basis()) stack(ib, a, true);
  for (const auto& a : i.basis()) stack(bj, a, false);
  if (rows.empty()) return Subspace::full(f, d);
  return kernel(Matrix::from_rows(f, d, rows));
}

// ---------------------------------------------------------------------------

namespace {

Subspace sandwich(const SteinbergAlgebra& b, const Subspace& i, const Subspace& j) {
  const auto& P = *b.presentation();
  std::vector<Vector> gens;
  for (const auto& a : i.basis())
    for (std::size_t k = 0; k < b.dim(); ++k) {
      Vector ak = P.multiply(a, unit_vector(b.field(), b.dim(), k));
      for (const auto& c : j.basis()) gens.push_back(P.multiply(ak, c));
    }
  return Subspace::span(b.field(), b.dim(), gens);
}

}  // namespace

IsotropyData::IsotropyData(AlgebraPtr b, Subspace i, Subspace j, Arrow y, Arrow x, std::vector<Arrow> sy)
    : b_(std::move(b)),
      y_(y),
      x_(x),
      i_(std::move(i)),
      j_(std::move(j)),
      ib_(left_ideal_span(*b_, i_)),
      bj_(right_ideal_span(*b_, j_)),
      l_(sum(ib_, bj_)),
      c_(compute_C(*b_, i_, j_)),
      h_(sandwich(*b_, i_, j_)),
      q_(gkd::quotient(c_, h_)) {
  const Field& f = b_->field();
  const std::size_t d = b_->dim();
  regular_ = sum(c_, l_) == Subspace::full(f, d);
  h_meet_ = intersect(c_, l_) == h_;
  if (regular_) {
    Matrix e(f, q_.dim(), d);
    for (std::size_t k = 0; k < d; ++k) {
      Vector v = unit_vector(f, d, k);
      Vector a = decompose(v, true);
      if (a != decompose(v, false))
        throw RegularityViolation("isotropy projection depends on the decomposition at basis element " +
                                  std::to_string(k));
      for (std::size_t r = 0; r < q_.dim(); ++r) e(r, k) = a[r];
    }
    e_ = std::move(e);
  }
  if (i_ == j_) {
    const auto& P = *b_->presentation();
    // well-defined product: H C + C H <= H
    for (const auto& h : h_.basis())
      for (const auto& c : c_.basis())
        if (!h_.contains(P.multiply(h, c)) || !h_.contains(P.multiply(c, h)))
          throw AlgebraError("H is not an ideal of C; the quotient product is not well defined");
    const std::size_t n = q_.dim();
    std::vector<Vector> products;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t c = 0; c < n; ++c) {
        auto pr = q_.try_project(P.multiply(q_.section_basis()[a], q_.section_basis()[c]));
        if (!pr || !c_.contains(P.multiply(q_.section_basis()[a], q_.section_basis()[c])))
          throw AlgebraError("C is not closed under multiplication");
        products.push_back(std::move(*pr));
      }
    // the unit is the class of the indicator of the points where J vanishes
    Vector one = zero_vector(f, d);
    for (Arrow u : sy) one[u] = f.one();
    std::optional<Vector> unit;
    if (c_.contains(one)) unit = q_.project(one);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) labels.push_back("q" + std::to_string(a));
    pres_ = std::make_shared<const AlgebraPresentation>(
        AlgebraPresentation::from_products(f, std::move(labels), products, unit));
  }
}

IsotropyData IsotropyData::build(const AlgebraPtr& b, Arrow y, Arrow x) {
  b->groupoid().require_unit(y);
  b->groupoid().require_unit(x);
  return IsotropyData(b, point_ideal(*b, y), point_ideal(*b, x), y, x, {y});
}

IsotropyData IsotropyData::build_general(const AlgebraPtr& b, std::vector<Arrow> sy, std::vector<Arrow> sx) {
  std::sort(sy.begin(), sy.end());
  sy.erase(std::unique(sy.begin(), sy.end()), sy.end());
  Subspace i = vanishing_ideal(*b, sy);
  Subspace j = vanishing_ideal(*b, sx);
  Arrow y = sy.size() == 1 ? sy[0] : kNoArrow;
  Arrow x = sx.size() == 1 ? sx[0] : kNoArrow;
  return IsotropyData(b, std::move(i), std::move(j), y, x, std::move(sy));
}

Vector IsotropyData::decompose(const Vector& b, bool c_first) const {
  const Field& f = b_->field();
  const std::size_t d = b_->dim();
  std::vector<Vector> cols;
  const auto& first = c_first ? c_.basis() : l_.basis();
  const auto& second = c_first ? l_.basis() : c_.basis();
  cols.insert(cols.end(), first.begin(), first.end());
  cols.insert(cols.end(), second.begin(), second.end());
  auto sol = solve(Matrix::from_columns(f, d, cols), b);
  if (!sol) throw RegularityViolation("B != C + L: element outside C + L");
  const std::size_t offset = c_first ? 0 : l_.dim();
  Vector c = zero_vector(f, d);
  for (std::size_t k = 0; k < c_.dim(); ++k) axpy(c, (*sol)[offset + k], c_.basis()[k]);
  return q_.project(c);
}

const Matrix& IsotropyData::E_matrix() const {
  if (!e_) throw RegularityViolation("B != C + L: the isotropy projection is undefined");
  return *e_;
}

Vector IsotropyData::E_alternate(const Vector& b) const { return decompose(b, false); }

const PresentationPtr& IsotropyData::algebra_structure() const {
  if (!pres_) throw AlgebraError("B(I,J) is an algebra only when I = J");
  return pres_;
}

Vector bimodule_product(const IsotropyData& zy, const IsotropyData& yx, const IsotropyData& zx, const Vector& g,
                        const Vector& h) {
  if (!(zy.J() == yx.I()) || !(zy.I() == zx.I()) || !(yx.J() == zx.J()))
    throw AlgebraError("bimodule_product: the middle or outer ideals do not match");
  const auto& P = *zx.algebra().presentation();
  return zx.p(P.multiply(zy.lift(g), yx.lift(h)));
}

// ---------------------------------------------------------------------------

TwistedGroupAlgebraCertificate identify_with_twisted_group_algebra(const IsotropyData& xx) {
  const auto& B = xx.algebra();
  const Arrow x = xx.x();
  if (x == kNoArrow || xx.y() != x) throw AlgebraError("identification needs a point isotropy algebra B(x,x)");
  const Field& f = B.field();
  const std::size_t d = B.dim();
  auto restricted = restrict_to_isotropy(B.twisted(), x);
  auto tga = make_algebra(restricted.group);
  TwistedGroupAlgebraCertificate cert;
  cert.isotropy_arrows = restricted.arrows;
  cert.group_algebra = tga->presentation();
  const auto& arrows = restricted.arrows;
  const std::size_t g = arrows.size();
  auto restrict = [&](const Vector& b) {
    Vector r;
    for (Arrow a : arrows) r.push_back(b[a]);
    return r;
  };

  std::vector<Vector> vanishing;
  std::set<Arrow> in_group(arrows.begin(), arrows.end());
  for (Arrow a = 0; a < d; ++a)
    if (!in_group.count(a)) vanishing.push_back(unit_vector(f, d, a));
  cert.null_space = xx.L() == Subspace::span(f, d, vanishing);
  if (!cert.null_space) cert.witness = "L(x,x) differs from the functions vanishing on G(x,x)";

  std::vector<Vector> cols;
  for (const auto& s : xx.quotient().section_basis()) cols.push_back(restrict(s));
  const Matrix phi = Matrix::from_columns(f, g, cols);
  cert.bijective = xx.dim() == g && rank(phi) == g;
  if (!cert.bijective) {
    if (cert.witness.empty())
      cert.witness = "dim B(x,x) = " + std::to_string(xx.dim()) + " but |G(x,x)| = " + std::to_string(g);
    return cert;
  }
  const Matrix phi_inv = inverse(phi);

  const auto& Q = *xx.algebra_structure();
  const auto& T = *cert.group_algebra;
  cert.multiplicative = true;
  for (std::size_t i = 0; i < g && cert.multiplicative; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      Vector a = phi_inv.apply(unit_vector(f, g, i));
      Vector b = phi_inv.apply(unit_vector(f, g, j));
      if (phi.apply(Q.multiply(a, b)) != T.basis_product(i, j)) {
        cert.multiplicative = false;
        cert.witness = "product of group elements " + std::to_string(i) + "," + std::to_string(j) + " differs";
        break;
      }
    }
  cert.projection = true;
  for (std::size_t k = 0; k < d; ++k) {
    Vector e = unit_vector(f, d, k);
    if (phi.apply(xx.E(e)) != restrict(e)) {
      cert.projection = false;
      if (cert.witness.empty()) cert.witness = "E(d" + B.groupoid().label(k) + ") is not the restriction";
      break;
    }
  }
  return cert;
}

}  // namespace gkd
