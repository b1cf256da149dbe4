#pragma once

// Exact scalars over Q and GF(p), dense vectors/matrices, and subspace
// calculus in reduced row-echelon form.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace gkd {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct FieldMismatch : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct ContainmentError : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct DivisionByZero : AlgebraError {
  using AlgebraError::AlgebraError;
};

class Scalar;

/// The coefficient field: the rationals or a prime field GF(p).
class Field {
public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;

  /// Parses "a/b" or "a" over Q, a decimal integer over GF(p).
  Scalar parse(std::string_view text) const;

  /// Number of elements; only meaningful for prime fields.
  std::uint64_t order() const { return p_; }

  /// Enumerates the i-th element in the canonical order 0,1,..,p-1 (GF(p) only).
  Scalar element(std::uint64_t i) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept reduced with positive
/// denominator by GMP; residues lie in [0, p).
class Scalar {
public:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
    friend bool operator==(const Residue&, const Residue&) = default;
  };

  Scalar() : v_(mpq_class(0)) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  Scalar(std::uint32_t value, std::uint32_t modulus) : v_(Residue{value % modulus, modulus}) {}

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint32_t residue() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used only for deterministic containers (not field order).
  friend bool operator<(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
  void check_same(const Scalar& o) const;
  std::variant<mpq_class, Residue> v_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);
std::string format_vector(const Vector& v);

/// Dense row-major matrix.
class Matrix {
public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_list() const;

  Matrix transpose() const;
  Vector apply(const Vector& v) const;  // M v (column convention)

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_zero() const;

private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  std::vector<Vector> rows;          // nonzero rows, RREF
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Gauss-Jordan elimination to reduced row-echelon form.
EchelonForm rref(const Field& f, std::size_t cols, std::vector<Vector> rows);
std::size_t rank(const Matrix& m);

/// A linear subspace of K^n stored by its canonical RREF basis.
class Subspace {
public:
  Subspace(Field f, std::size_t ambient_dim);  // zero subspace

  static Subspace span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors);
  static Subspace full(const Field& f, std::size_t ambient_dim);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vector& v) const;
  /// Unique coordinates over basis() when v is a member.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// v minus its components along the pivot columns; zero iff v is a member.
  Vector residual(const Vector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

private:
  Field field_;
  std::size_t n_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

struct MembershipResult {
  bool member;
  Vector coordinates;  // empty unless member
};

Subspace span(const Field& f, std::size_t ambient_dim, const std::vector<Vector>& vectors);
MembershipResult membership(const Vector& v, const Subspace& s);
Subspace sum(const Subspace& s, const Subspace& t);
/// Zassenhaus intersection.
Subspace intersect(const Subspace& s, const Subspace& t);
/// Null space {x : M x = 0} as a subspace of K^cols.
Subspace kernel(const Matrix& m);
/// Column space of M.
Subspace image(const Matrix& m);
/// A particular solution of M x = b, or nothing when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
Matrix inverse(const Matrix& m);  // throws DivisionByZero when singular

/// numerator / kernel with a deterministic section: representatives vanish
/// on the kernel's pivot columns.
class QuotientSpace {
public:
  QuotientSpace(Subspace numerator, Subspace kernel);

  std::size_t dim() const { return section_.dim(); }
  const Subspace& numerator() const { return numerator_; }
  const Subspace& kernel() const { return kernel_; }
  const std::vector<Vector>& section_basis() const { return section_.basis(); }

  /// Coordinates of the class of v (v must lie in the numerator).
  Vector project(const Vector& v) const;
  /// Coordinates of the class of v for any v whose residual modulo the kernel
  /// lies in the section span; returns nothing otherwise.
  std::optional<Vector> try_project(const Vector& v) const;
  Vector inject(const Vector& coords) const;

private:
  Subspace numerator_;
  Subspace kernel_;
  Subspace section_;
};

QuotientSpace quotient(const Subspace& numerator, const Subspace& kernel);

}  // namespace gkd
