#include "gkd/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gkd {

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw AlgebraError("GF(" + std::to_string(p) + "): modulus is not prime");
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r), p_);
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (is_rational()) return Scalar(q);
  mpz_class num = q.get_num() % p_;
  mpz_class den = q.get_den() % p_;
  if (num < 0) num += p_;
  if (den == 0) throw DivisionByZero("denominator divisible by " + std::to_string(p_));
  Scalar n(static_cast<std::uint32_t>(num.get_ui()), p_);
  Scalar d(static_cast<std::uint32_t>(den.get_ui()), p_);
  return n / d;
}

Scalar Field::parse(std::string_view text) const {
  std::string s(text);
  if (s.empty()) throw AlgebraError("empty scalar");
  if (is_rational()) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw AlgebraError("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(q);
  }
  mpz_class z;
  if (s.find('/') != std::string::npos || z.set_str(s, 10) != 0)
    throw AlgebraError("malformed GF(" + std::to_string(p_) + ") residue '" + s + "'");
  mpz_class r = z % p_;
  if (r < 0) r += p_;
  return Scalar(static_cast<std::uint32_t>(r.get_ui()), p_);
}

Scalar Field::element(std::uint64_t i) const {
  if (is_rational()) throw AlgebraError("cannot enumerate the rationals");
  return Scalar(static_cast<std::uint32_t>(i % p_), p_);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

// ---------------------------------------------------------------------------

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return Field::prime(r->modulus);
  return Field::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw FieldMismatch("residue accessed as rational");
}

std::uint32_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw FieldMismatch("rational accessed as residue");
}

void Scalar::check_same(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&v_);
  const auto* b = std::get_if<Residue>(&o.v_);
  if ((a == nullptr) != (b == nullptr) || (a && a->modulus != b->modulus))
    throw FieldMismatch("scalars from different fields: " + to_string() + ", " + o.to_string());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&v_)) return Scalar(mod_inverse(r->value, r->modulus), r->modulus);
  mpq_class q = 1 / std::get<mpq_class>(v_);
  return Scalar(q);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t s = std::uint64_t(r->value) + std::get<Residue>(o.v_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t s = std::uint64_t(r->value) + r->modulus - std::get<Residue>(o.v_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t s = std::uint64_t(r->value) * std::get<Residue>(o.v_).value;
    r->value = static_cast<std::uint32_t>(s % r->modulus);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&v_))
    return Scalar(r->value == 0 ? 0 : r->modulus - r->value, r->modulus);
  mpq_class q = -std::get<mpq_class>(v_);
  return Scalar(q);
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.v_)) return r->value == std::get<Scalar::Residue>(b.v_).value;
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.v_)) return r->value < std::get<Scalar::Residue>(b.v_).value;
  return std::get<mpq_class>(a.v_) < std::get<mpq_class>(b.v_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

// ---------------------------------------------------------------------------

Vector zero_vector(const Field& f, std::size_t n) { return Vector(n, f.zero()); }

Vector unit_vector(const Field& f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector add: length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sub: length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("axpy: length mismatch");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += s * b[i];
}

std::string format_vector(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, f.zero()) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionMismatch("from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> r;
  r.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
  Vector r = zero_vector(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product: inner dimension mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j) += x * y;
      }
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference: shape mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------------------

EchelonForm rref(const Field& f, std::size_t cols, std::vector<Vector> rows) {
  for (const auto& r : rows)
    if (r.size() != cols) throw DimensionMismatch("rref: row length mismatch");
  EchelonForm out;
  std::size_t lead = 0;  // rows [0, lead) are finished pivot rows
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t pick = rows.size();
    for (std::size_t i = lead; i < rows.size(); ++i)
      if (!rows[i][c].is_zero()) {
        pick = i;
        break;
      }
    if (pick == rows.size()) continue;
    std::swap(rows[lead], rows[pick]);
    Scalar inv = rows[lead][c].inverse();
    for (std::size_t j = c; j < cols; ++j) rows[lead][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == lead || rows[i][c].is_zero()) continue;
      Scalar factor = rows[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (!rows[lead][j].is_zero()) rows[i][j] -= factor * rows[lead][j];
    }
    out.pivots.push_back(c);
    ++lead;
  }
  rows.resize(lead);
  out.rows = std::move(rows);
  (void)f;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m.field(), m.cols(), m.row_list()).rows.size(); }

// ---------------------------------------------------------------------------

Subspace::Subspace(Field f, std::size_t ambient_dim) : field_(f), n_(ambient_dim) {}

Subspace Subspace::span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim)
      throw DimensionMismatch("span: vector of length " + std::to_string(v.size()) + " in ambient dimension " +
                              std::to_string(ambient_dim));
    for (const auto& s : v)
      if (!(s.field() == f)) throw FieldMismatch("span: vector over " + s.field().name() + " in " + f.name());
  }
  Subspace s(f, ambient_dim);
  auto e = rref(f, ambient_dim, vectors);
  s.basis_ = std::move(e.rows);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::full(const Field& f, std::size_t ambient_dim) {
  Subspace s(f, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(f, ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::residual(const Vector& v) const {
  if (v.size() != n_) throw DimensionMismatch("residual: vector length mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(residual(v)); }

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(basis_.size());
  for (std::size_t p : pivots_) c.push_back(v[p]);
  return c;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) throw DimensionMismatch("containment: ambient mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.n_ == b.n_ && a.field_ == b.field_ && a.basis_ == b.basis_;
}

Subspace span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  return Subspace::span(f, ambient_dim, vectors);
}

MembershipResult membership(const Vector& v, const Subspace& s) {
  if (v.size() != s.ambient_dim()) throw DimensionMismatch("membership: vector length mismatch");
  auto c = s.coordinates(v);
  if (!c) return {false, {}};
  return {true, std::move(*c)};
}

Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw DimensionMismatch("sum: ambient mismatch");
  std::vector<Vector> rows = s.basis();
  rows.insert(rows.end(), t.basis().begin(), t.basis().end());
  return Subspace::span(s.field(), s.ambient_dim(), rows);
}

Subspace intersect(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim()) throw DimensionMismatch("intersect: ambient mismatch");
  const std::size_t n = s.ambient_dim();
  const Field& f = s.field();
  // Zassenhaus: rows (u | u) for u in S, (w | 0) for w in T; the rows of the
  // echelon form with zero left half carry S ∩ T in their right half.
  std::vector<Vector> rows;
  for (const auto& u : s.basis()) {
    Vector r = u;
    r.insert(r.end(), u.begin(), u.end());
    rows.push_back(std::move(r));
  }
  for (const auto& w : t.basis()) {
    Vector r = w;
    r.resize(2 * n, f.zero());
    rows.push_back(std::move(r));
  }
  auto e = rref(f, 2 * n, std::move(rows));
  std::vector<Vector> meet;
  for (std::size_t i = 0; i < e.rows.size(); ++i)
    if (e.pivots[i] >= n) meet.emplace_back(e.rows[i].begin() + n, e.rows[i].end());
  return Subspace::span(f, n, meet);
}

Subspace kernel(const Matrix& m) {
  const Field& f = m.field();
  auto e = rref(f, m.cols(), m.row_list());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Subspace::span(m.field(), m.rows(), cols);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  const Field& f = m.field();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector r = m.row(i);
    r.push_back(b[i]);
    rows.push_back(std::move(r));
  }
  auto e = rref(f, m.cols() + 1, std::move(rows));
  Vector x = zero_vector(f, m.cols());
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][m.cols()];
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = m.rows();
  const Field& f = m.field();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = m.row(i);
    Vector e = unit_vector(f, n, i);
    r.insert(r.end(), e.begin(), e.end());
    rows.push_back(std::move(r));
  }
  auto e = rref(f, 2 * n, std::move(rows));
  if (e.rows.size() < n || e.pivots[n - 1] >= n) throw DivisionByZero("inverse: singular matrix");
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

// ---------------------------------------------------------------------------

QuotientSpace::QuotientSpace(Subspace numerator, Subspace kernel)
    : numerator_(std::move(numerator)), kernel_(std::move(kernel)),
      section_(numerator_.field(), numerator_.ambient_dim()) {
  if (kernel_.ambient_dim() != numerator_.ambient_dim()) throw DimensionMismatch("quotient: ambient mismatch");
  if (!numerator_.contains(kernel_)) throw ContainmentError("quotient: kernel not contained in numerator");
  std::vector<Vector> reps;
  for (const auto& v : numerator_.basis()) reps.push_back(kernel_.residual(v));
  section_ = Subspace::span(numerator_.field(), numerator_.ambient_dim(), reps);
}

Vector QuotientSpace::project(const Vector& v) const {
  if (!numerator_.contains(v)) throw ContainmentError("project: vector outside the numerator");
  return *try_project(v);
}

std::optional<Vector> QuotientSpace::try_project(const Vector& v) const {
  return section_.coordinates(kernel_.residual(v));
}

Vector QuotientSpace::inject(const Vector& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("inject: coordinate length mismatch");
  Vector v = zero_vector(numerator_.field(), numerator_.ambient_dim());
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(v, coords[i], section_.basis()[i]);
  return v;
}

QuotientSpace quotient(const Subspace& numerator, const Subspace& kernel) { return QuotientSpace(numerator, kernel); }

}  // namespace gkd
