#pragma once

// Induced ideals, primitive ideals, and the germ decomposition of annihilators.

#include <optional>
#include <string>
#include <vector>

#include "gkd/induction.hpp"
#include "gkd/modrep.hpp"

namespace gkd {

struct IdealError : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// Ind_x I = {b : E(g b h) in I for all g, h}; i is a two-sided ideal of B(x,x).
Subspace induced_ideal(const IsotropyData& xx, const Subspace& i);

/// Ind_x(Ann W); throws IdealError unless W has an exact irreducible verdict.
Subspace primitive_from_isotropy(const IsotropyData& xx, const FdModule& w);

struct GermDecomposition {
  std::vector<Arrow> units;
  std::vector<std::size_t> germ_dims;  // dim V[x]
  std::vector<Subspace> induced;       // Ann(Ind_x V[x]), one per unit
  Subspace intersection;
  Subspace annihilator;                // Ann(V)
  bool equal = false;
};

/// Per-unit annihilators of Ind_x V[x] intersected in ascending unit order.
GermDecomposition germ_annihilator_decomposition(const FdModule& v, const AlgebraPtr& b);

/// V/W as a B(x,x)-module, for a C(x,x)-submodule W of V containing J_x V.
FdModule fiber_quotient(const FdModule& v, const IsotropyData& xx, const Subspace& w);

/// d b V <= W for every basis element d.
bool multiplies_into(const FdModule& v, const Subspace& w, const Vector& b);

/// Every two-sided ideal of a presentation over GF(p).
std::vector<Subspace> all_ideals(const AlgebraPresentation& p, std::uint64_t budget = kEnumerationBudget);

/// Maximal proper ideals among an enumerated list. For a finite-dimensional
/// unital algebra these are exactly the primitive ideals.
std::vector<Subspace> maximal_ideals(const std::vector<Subspace>& ideals);

/// B / I as a left B-module.
FdModule quotient_by_ideal(const SteinbergAlgebra& b, const Subspace& i);

/// A faithful irreducible module of B/I over GF(p): a minimal nonzero
/// submodule of B/I with annihilator I. Empty when none exists.
std::optional<FdModule> primitive_witness(const SteinbergAlgebra& b, const Subspace& i,
                                          std::uint64_t budget = kEnumerationBudget);

struct EffrosHahnReport {
  GermDecomposition decomposition;  // for V = B/I
  bool intersection_ok = false;
  // Filled when an irreducible module with annihilator I was supplied.
  std::optional<Arrow> single_x;
  std::optional<Subspace> single_induced;
  bool single_ok = false;
  bool ok() const { return intersection_ok && (!single_x || single_ok); }
};

EffrosHahnReport effros_hahn_check(const AlgebraPtr& b, const Subspace& i,
                                   const FdModule* witness = nullptr);

struct InducingIdeal {
  bool answer = false;  // the experiment answers YES
  Arrow x = kNoArrow;
  std::size_t fiber_dim = 0;
  std::optional<Subspace> inducing;  // Ann V[x] inside B(x,x)
  bool fiber_irreducible = false;
  bool inducing_primitive = false;
  bool induced_equals = false;
  std::string reason;
};

/// Looks for a unit x and a primitive ideal of B(x,x) inducing I = Ann(V).
/// Every unit here is isolated, so the first x with V[x] != 0 is tried.
InducingIdeal inducing_ideal_experiment(const AlgebraPtr& b, const Subspace& i, const FdModule& v);

}  // namespace gkd
