#pragma once

// The twisted convolution algebra of a finite twisted groupoid, and the
// structure-constant presentation shared by every finite-dimensional
// algebra in the library.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gkd/linalg.hpp"
#include "gkd/twist.hpp"

namespace gkd {

struct Term {
  std::size_t k;
  Scalar c;
};

/// Basis, structure constants e_i e_j = sum c e_k, optional unit.
class AlgebraPresentation {
public:
  AlgebraPresentation(Field f, std::vector<std::string> labels, std::vector<std::vector<Term>> table,
                      std::optional<Vector> unit);
  /// Builds the sparse table from dense basis products.
  static AlgebraPresentation from_products(Field f, std::vector<std::string> labels,
                                           const std::vector<Vector>& products, std::optional<Vector> unit);

  const Field& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Term>& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const std::optional<Vector>& unit() const { return unit_; }

  Vector basis_product(std::size_t i, std::size_t j) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  /// Matrix of b -> a b.
  Matrix left_mult(const Vector& a) const;
  /// Matrix of b -> b a.
  Matrix right_mult(const Vector& a) const;

  friend bool operator==(const AlgebraPresentation& a, const AlgebraPresentation& b);

private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Term>> table_;
  std::optional<Vector> unit_;
};

using PresentationPtr = std::shared_ptr<const AlgebraPresentation>;

Subspace center(const AlgebraPresentation& p);
/// Two-sided closure under left and right multiplication by basis elements.
bool is_two_sided(const AlgebraPresentation& p, const Subspace& s);

/// Structure constants of the n x n matrix units, E_ij at index i*n + j.
AlgebraPresentation matrix_algebra(Field f, std::size_t n);

struct BisectionRequired : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct ParentMismatch : AlgebraError {
  using AlgebraError::AlgebraError;
};

class SteinbergAlgebra;

/// Finitely supported coefficient function on arrows; zeros are never stored.
class AlgebraElement {
public:
  explicit AlgebraElement(const SteinbergAlgebra& b) : b_(&b) {}

  const SteinbergAlgebra& algebra() const { return *b_; }
  Scalar coeff(Arrow a) const;
  void set(Arrow a, const Scalar& v);
  const std::map<Arrow, Scalar>& coeffs() const { return c_; }
  std::vector<Arrow> support() const;
  bool is_zero() const { return c_.empty(); }
  Vector to_vector() const;
  std::string to_string() const;

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a);
  /// Twisted convolution.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.b_ == b.b_ && a.c_ == b.c_; }
  friend bool operator<(const AlgebraElement& a, const AlgebraElement& b) { return a.c_ < b.c_; }

private:
  void same_parent(const AlgebraElement& o) const;
  const SteinbergAlgebra* b_;
  std::map<Arrow, Scalar> c_;
};

class SteinbergAlgebra {
public:
  static std::shared_ptr<const SteinbergAlgebra> make(TwistedGroupoid tg);

  const TwistedGroupoid& twisted() const { return tg_; }
  const FiniteGroupoid& groupoid() const { return tg_.groupoid(); }
  const Field& field() const { return tg_.field(); }
  std::size_t dim() const { return groupoid().size(); }
  const PresentationPtr& presentation() const { return pres_; }

  AlgebraElement zero() const { return AlgebraElement(*this); }
  AlgebraElement delta(Arrow a) const;
  /// Indicator of all units, the identity of B.
  AlgebraElement one() const;
  AlgebraElement from_vector(const Vector& v) const;

  AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) const;
  /// Unit-space function as an element of A inside B.
  AlgebraElement embed_unit_function(const std::map<Arrow, Scalar>& a) const;
  AlgebraElement delta_section(const std::vector<Arrow>& s, const std::vector<Scalar>& values) const;
  /// Bundle inverse on a bisection-supported element.
  AlgebraElement partial_inverse(const AlgebraElement& n) const;
  /// An element u of A with u b = b = b u for every b in F.
  AlgebraElement dedicated_unit(const std::vector<AlgebraElement>& f) const;

  /// The value of a at the unit x, for a in A.
  Scalar pairing(const AlgebraElement& a, Arrow x) const { return a.coeff(x); }
  /// A = span of unit deltas, as a subspace of B.
  Subspace unit_subalgebra() const;

private:
  explicit SteinbergAlgebra(TwistedGroupoid tg);
  TwistedGroupoid tg_;
  PresentationPtr pres_;
};

using AlgebraPtr = std::shared_ptr<const SteinbergAlgebra>;

AlgebraPtr make_algebra(TwistedGroupoid tg);

}  // namespace gkd
