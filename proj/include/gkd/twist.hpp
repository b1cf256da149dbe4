#pragma once

// Normalized 2-cocycles on a finite groupoid.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkd/groupoid.hpp"
#include "gkd/linalg.hpp"

namespace gkd {

struct CocycleError : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct ZeroCocycleValue : CocycleError {
  using CocycleError::CocycleError;
};

struct CocycleDomainError : CocycleError {
  using CocycleError::CocycleError;
};

/// Sparse storage; pairs that are not stored have value 1.
class Cocycle {
public:
  explicit Cocycle(Field f) : field_(f) {}

  const Field& field() const { return field_; }
  void set(Arrow a, Arrow b, const Scalar& v);
  Scalar value(Arrow a, Arrow b) const;
  const std::map<std::pair<Arrow, Arrow>, Scalar>& entries() const { return values_; }

private:
  Field field_;
  std::map<std::pair<Arrow, Arrow>, Scalar> values_;
};

struct CocycleViolation {
  std::string condition;  // "normalization" or "cocycle identity"
  std::vector<Arrow> witness;
};

/// Throws ZeroCocycleValue / CocycleDomainError for bad entries.
std::optional<CocycleViolation> validate_cocycle(const FiniteGroupoid& g, const Cocycle& c);

/// A groupoid together with a validated cocycle; the only twist type the
/// algebra layers accept.
class TwistedGroupoid {
public:
  static TwistedGroupoid make(FiniteGroupoid g, const Cocycle& c);
  static TwistedGroupoid untwisted(FiniteGroupoid g, Field f);

  const FiniteGroupoid& groupoid() const { return g_; }
  const Field& field() const { return field_; }
  /// omega(a,b) for a composable pair.
  const Scalar& omega(Arrow a, Arrow b) const;
  const Cocycle& cocycle() const { return sparse_; }

private:
  TwistedGroupoid(FiniteGroupoid g, Cocycle c);
  FiniteGroupoid g_;
  Field field_;
  Cocycle sparse_;
  std::vector<Scalar> dense_;
};

Cocycle trivial_cocycle(Field f);
/// omega(a,b) = b(a) b(b) / b(ab); b must be 1 on units and nonzero.
Cocycle coboundary(const FiniteGroupoid& g, const std::vector<Scalar>& b);
/// Sign cocycle on group_groupoid(klein_four()) from the lift e,a,b,ab -> 1,i,j,k.
Cocycle quaternion_cocycle(const FiniteGroupoid& v4, Field f);

/// The restriction to G(x,x) as a twisted one-object groupoid;
/// arrows[i] is the arrow of the ambient groupoid carried by element i.
struct IsotropyTwist {
  std::vector<Arrow> arrows;
  TwistedGroupoid group;
};

IsotropyTwist restrict_to_isotropy(const TwistedGroupoid& tg, Arrow x);

/// The coefficient s with (s, inv g)(t, g) = (1, s(g)), i.e. (omega(inv g, g) t)^-1.
Scalar bundle_inverse_coefficient(const TwistedGroupoid& tg, Arrow g, const Scalar& t);

}  // namespace gkd
