#include "gkd/steinberg.hpp"

#include <set>
#include <sstream>

namespace gkd {

AlgebraPresentation::AlgebraPresentation(Field f, std::vector<std::string> labels,
                                         std::vector<std::vector<Term>> table, std::optional<Vector> unit)
    : field_(f), labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  if (table_.size() != d * d) throw DimensionMismatch("structure table must have dim^2 entries");
  for (const auto& terms : table_)
    for (const auto& t : terms)
      if (t.k >= d) throw DimensionMismatch("structure constant refers to basis index out of range");
  if (unit_ && unit_->size() != d) throw DimensionMismatch("unit has wrong length");
}

AlgebraPresentation AlgebraPresentation::from_products(Field f, std::vector<std::string> labels,
                                                       const std::vector<Vector>& products,
                                                       std::optional<Vector> unit) {
  const std::size_t d = labels.size();
  if (products.size() != d * d) throw DimensionMismatch("need dim^2 basis products");
  std::vector<std::vector<Term>> table(d * d);
  for (std::size_t ij = 0; ij < d * d; ++ij) {
    if (products[ij].size() != d) throw DimensionMismatch("basis product has wrong length");
    for (std::size_t k = 0; k < d; ++k)
      if (!products[ij][k].is_zero()) table[ij].push_back({k, products[ij][k]});
  }
  return AlgebraPresentation(f, std::move(labels), std::move(table), std::move(unit));
}

Vector AlgebraPresentation::basis_product(std::size_t i, std::size_t j) const {
  Vector v = zero_vector(field_, dim());
  for (const auto& t : product(i, j)) v[t.k] += t.c;
  return v;
}

Vector AlgebraPresentation::multiply(const Vector& a, const Vector& b) const {
  const std::size_t d = dim();
  if (a.size() != d || b.size() != d) throw DimensionMismatch("multiply: operand length mismatch");
  Vector r = zero_vector(field_, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      Scalar ab = a[i] * b[j];
      for (const auto& t : product(i, j)) r[t.k] += ab * t.c;
    }
  }
  return r;
}

Matrix AlgebraPresentation::left_mult(const Vector& a) const {
  const std::size_t d = dim();
  Matrix m(field_, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& t : product(i, j)) m(t.k, j) += a[i] * t.c;
  }
  return m;
}

Matrix AlgebraPresentation::right_mult(const Vector& a) const {
  const std::size_t d = dim();
  Matrix m(field_, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t i = 0; i < d; ++i)
      for (const auto& t : product(i, j)) m(t.k, i) += a[j] * t.c;
  }
  return m;
}

bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (!(a.field_ == b.field_) || a.dim() != b.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
  return true;
}

Subspace center(const AlgebraPresentation& p) {
  const std::size_t d = p.dim();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < d; ++i) {
    Vector e = unit_vector(p.field(), d, i);
    Matrix c = p.left_mult(e) - p.right_mult(e);
    for (auto& r : c.row_list()) rows.push_back(std::move(r));
  }
  return kernel(Matrix::from_rows(p.field(), d, rows));
}

bool is_two_sided(const AlgebraPresentation& p, const Subspace& s) {
  for (std::size_t i = 0; i < p.dim(); ++i) {
    Vector e = unit_vector(p.field(), p.dim(), i);
    for (const auto& v : s.basis())
      if (!s.contains(p.multiply(e, v)) || !s.contains(p.multiply(v, e))) return false;
  }
  return true;
}

AlgebraPresentation matrix_algebra(Field f, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i) + std::to_string(j));
  const std::size_t d = n * n;
  std::vector<std::vector<Term>> table(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (a % n == b / n) table[a * d + b].push_back({(a / n) * n + b % n, f.one()});
  Vector unit = zero_vector(f, d);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = f.one();
  return AlgebraPresentation(f, std::move(labels), std::move(table), unit);
}

// ---------------------------------------------------------------------------

Scalar AlgebraElement::coeff(Arrow a) const {
  if (a >= b_->dim()) throw DimensionMismatch("arrow " + std::to_string(a) + " out of range");
  auto it = c_.find(a);
  return it == c_.end() ? b_->field().zero() : it->second;
}

void AlgebraElement::set(Arrow a, const Scalar& v) {
  if (a >= b_->dim()) throw DimensionMismatch("arrow " + std::to_string(a) + " out of range");
  if (!(v.field() == b_->field())) throw FieldMismatch("coefficient over the wrong field");
  if (v.is_zero())
    c_.erase(a);
  else
    c_.insert_or_assign(a, v);
}

std::vector<Arrow> AlgebraElement::support() const {
  std::vector<Arrow> s;
  for (const auto& [a, v] : c_) s.push_back(a);
  return s;
}

Vector AlgebraElement::to_vector() const {
  Vector v = zero_vector(b_->field(), b_->dim());
  for (const auto& [a, c] : c_) v[a] = c;
  return v;
}

std::string AlgebraElement::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : c_) {
    os << (first ? "" : " + ") << c << "*d" << b_->groupoid().label(a);
    first = false;
  }
  return os.str();
}

void AlgebraElement::same_parent(const AlgebraElement& o) const {
  if (b_ != o.b_) throw ParentMismatch("elements of different algebras");
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  a.same_parent(b);
  AlgebraElement r = a;
  for (const auto& [k, v] : b.c_) r.set(k, r.coeff(k) + v);
  return r;
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  a.same_parent(b);
  AlgebraElement r = a;
  for (const auto& [k, v] : b.c_) r.set(k, r.coeff(k) - v);
  return r;
}

AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
  AlgebraElement r(*a.b_);
  for (const auto& [k, v] : a.c_) r.set(k, s * v);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return a.b_->convolve(a, b); }

// ---------------------------------------------------------------------------

SteinbergAlgebra::SteinbergAlgebra(TwistedGroupoid tg) : tg_(std::move(tg)) {
  const auto& g = groupoid();
  const std::size_t d = g.size();
  std::vector<std::string> labels;
  for (Arrow a = 0; a < d; ++a) labels.push_back("d" + g.label(a));
  std::vector<std::vector<Term>> table(d * d);
  for (Arrow a = 0; a < d; ++a)
    for (Arrow b = 0; b < d; ++b)
      if (g.composable(a, b)) table[a * d + b].push_back({g.comp(a, b), tg_.omega(a, b)});
  Vector unit = zero_vector(field(), d);
  for (Arrow u : g.units()) unit[u] = field().one();
  pres_ = std::make_shared<const AlgebraPresentation>(field(), std::move(labels), std::move(table), unit);
}

std::shared_ptr<const SteinbergAlgebra> SteinbergAlgebra::make(TwistedGroupoid tg) {
  return std::shared_ptr<const SteinbergAlgebra>(new SteinbergAlgebra(std::move(tg)));
}

AlgebraPtr make_algebra(TwistedGroupoid tg) { return SteinbergAlgebra::make(std::move(tg)); }

AlgebraElement SteinbergAlgebra::delta(Arrow a) const {
  AlgebraElement e(*this);
  e.set(a, field().one());
  return e;
}

AlgebraElement SteinbergAlgebra::one() const {
  AlgebraElement e(*this);
  for (Arrow u : groupoid().units()) e.set(u, field().one());
  return e;
}

AlgebraElement SteinbergAlgebra::from_vector(const Vector& v) const {
  if (v.size() != dim()) throw DimensionMismatch("from_vector: length mismatch");
  AlgebraElement e(*this);
  for (Arrow a = 0; a < dim(); ++a) e.set(a, v[a]);
  return e;
}

AlgebraElement SteinbergAlgebra::convolve(const AlgebraElement& f, const AlgebraElement& h) const {
  if (&f.algebra() != this || &h.algebra() != this) throw ParentMismatch("convolution of foreign elements");
  const auto& g = groupoid();
  std::map<Arrow, Scalar> acc;
  for (const auto& [a, fa] : f.coeffs())
    for (const auto& [b, hb] : h.coeffs()) {
      if (!g.composable(a, b)) continue;
      Scalar term = tg_.omega(a, b) * fa * hb;
      auto [it, fresh] = acc.try_emplace(g.comp(a, b), term);
      if (!fresh) it->second += term;
    }
  AlgebraElement r(*this);
  for (const auto& [k, v] : acc) r.set(k, v);
  return r;
}

AlgebraElement SteinbergAlgebra::embed_unit_function(const std::map<Arrow, Scalar>& a) const {
  AlgebraElement e(*this);
  for (const auto& [u, v] : a) {
    groupoid().require_unit(u);
    e.set(u, v);
  }
  return e;
}

AlgebraElement SteinbergAlgebra::delta_section(const std::vector<Arrow>& s, const std::vector<Scalar>& values) const {
  if (s.size() != values.size()) throw DimensionMismatch("delta_section: one value per arrow required");
  if (!groupoid().is_bisection(s)) throw BisectionRequired("delta_section: support is not a bisection");
  std::set<Arrow> seen;
  AlgebraElement e(*this);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (values[i].is_zero()) throw DivisionByZero("delta_section: zero value on the bisection");
    if (!seen.insert(s[i]).second) throw BisectionRequired("delta_section: repeated arrow");
    e.set(s[i], values[i]);
  }
  return e;
}

AlgebraElement SteinbergAlgebra::partial_inverse(const AlgebraElement& n) const {
  if (&n.algebra() != this) throw ParentMismatch("partial_inverse of a foreign element");
  if (!groupoid().is_bisection(n.support())) throw BisectionRequired("partial_inverse: support is not a bisection");
  AlgebraElement r(*this);
  for (const auto& [a, v] : n.coeffs()) r.set(groupoid().inv(a), bundle_inverse_coefficient(tg_, a, v));
  return r;
}

AlgebraElement SteinbergAlgebra::dedicated_unit(const std::vector<AlgebraElement>& f) const {
  AlgebraElement u(*this);
  for (const auto& b : f) {
    if (&b.algebra() != this) throw ParentMismatch("dedicated_unit of a foreign element");
    for (const auto& [a, v] : b.coeffs()) {
      u.set(groupoid().src(a), field().one());
      u.set(groupoid().tgt(a), field().one());
    }
  }
  return u;
}

Subspace SteinbergAlgebra::unit_subalgebra() const {
  std::vector<Vector> basis;
  for (Arrow u : groupoid().units()) basis.push_back(unit_vector(field(), dim(), u));
  return Subspace::span(field(), dim(), basis);
}

}  // namespace gkd
