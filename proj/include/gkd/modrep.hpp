#pragma once

// Finite-dimensional left modules given by action matrices on a basis of the
// algebra.

#include <optional>
#include <string>
#include <vector>

#include "gkd/isotropy.hpp"
#include "gkd/linalg.hpp"
#include "gkd/steinberg.hpp"

namespace gkd {

struct ModuleError : AlgebraError {
  using AlgebraError::AlgebraError;
};

struct BudgetExceeded : AlgebraError {
  using AlgebraError::AlgebraError;
};

inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t(1) << 20;

class FdModule {
public:
  /// action[i] is the matrix of basis element i of the algebra.
  FdModule(PresentationPtr algebra, std::size_t dim, std::vector<Matrix> action);

  const AlgebraPresentation& algebra() const { return *alg_; }
  const PresentationPtr& algebra_ptr() const { return alg_; }
  const Field& field() const { return alg_->field(); }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_.at(i); }

  /// Matrix of an algebra element given in basis coordinates.
  Matrix rho(const Vector& b) const;
  Vector act(const Vector& b, const Vector& v) const { return rho(b).apply(v); }

private:
  PresentationPtr alg_;
  std::size_t dim_;
  std::vector<Matrix> action_;
};

struct ModuleViolation {
  std::string kind;  // "structure constants" or "unitality"
  std::size_t i = 0, j = 0;
};

std::optional<ModuleViolation> check_module(const FdModule& m);

FdModule regular_module(const PresentationPtr& p);
FdModule direct_sum(const FdModule& a, const FdModule& b);
/// The module on an invariant subspace, in the coordinates of its RREF basis.
FdModule submodule(const FdModule& m, const Subspace& s);
/// V / S in the coordinates of the quotient section.
FdModule quotient_module(const FdModule& m, const Subspace& s);

bool is_submodule(const FdModule& m, const Subspace& s);
Subspace generated_submodule(const FdModule& m, const std::vector<Vector>& vectors);

/// Every invariant subspace under the given matrices over GF(p), sorted by
/// dimension then basis. Throws BudgetExceeded when p^n exceeds the budget.
std::vector<Subspace> all_invariant_subspaces(const Field& f, std::size_t n, const std::vector<Matrix>& gens,
                                              std::uint64_t budget = kEnumerationBudget);
std::vector<Subspace> all_submodules(const FdModule& m, std::uint64_t budget = kEnumerationBudget);

enum class Irreducibility { Irreducible, Reducible, Inconclusive };

struct IrreducibilityVerdict {
  Irreducibility kind = Irreducibility::Inconclusive;
  bool exact = false;               // decided by exhaustive scan
  std::optional<Subspace> witness;  // proper nonzero submodule when reducible
  std::string reason;

  bool irreducible() const { return kind == Irreducibility::Irreducible; }
  bool reducible() const { return kind == Irreducibility::Reducible; }
};

/// Over GF(p) within budget: exact. Otherwise a witness search and two
/// sufficient certificates (full matrix algebra; anisotropic norm form).
IrreducibilityVerdict is_irreducible(const FdModule& m, std::uint64_t budget = kEnumerationBudget);

/// {b : rho(b) = 0} in algebra coordinates.
Subspace annihilator(const FdModule& m);

/// Module maps a -> b as row-major dim(b) x dim(a) matrices.
Subspace hom_space(const FdModule& a, const FdModule& b);

struct Restriction {
  Subspace carrier;  // V_x inside V
  FdModule module;   // over B(x,x), in carrier basis coordinates
};

/// V_x = {v : J_x v = 0} with (c + H) v = c v; m must be a module over B.
Restriction restriction(const FdModule& m, const IsotropyData& xx);

struct GermSpace {
  Arrow x;
  Subspace jv;      // J_x V
  QuotientSpace q;  // V / J_x V
  std::size_t dim() const { return q.dim(); }
};

GermSpace germ_space(const FdModule& m, const SteinbergAlgebra& b, Arrow x);
Vector germ_of(const GermSpace& g, const Vector& v);
/// (c + H(y,x)) (v + J_x V) = c v + J_y V, with g in B(y,x) coordinates.
Vector disintegration_action(const FdModule& m, const IsotropyData& yx, const GermSpace& gx, const GermSpace& gy,
                             const Vector& g, const Vector& germ);
/// True when c H-changes and J_x V-changes of representatives land in J_y V.
bool disintegration_well_defined(const FdModule& m, const IsotropyData& yx, const GermSpace& gx, const GermSpace& gy);
/// V[x] as a left B(x,x)-module.
FdModule germ_module(const FdModule& m, const IsotropyData& xx, const GermSpace& gx);

}  // namespace gkd
