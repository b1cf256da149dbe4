#pragma once

// Quotients attached to a pair of ideals of A. Every ideal of A = K^units is
// J_S, the functions vanishing on a unit set S; the point ideal J_x is S = {x}.

#include <optional>
#include <string>
#include <vector>

#include "gkd/linalg.hpp"
#include "gkd/steinberg.hpp"

namespace gkd {

struct RegularityViolation : AlgebraError {
  using AlgebraError::AlgebraError;
};

/// J_S as a subspace of B.
Subspace vanishing_ideal(const SteinbergAlgebra& b, const std::vector<Arrow>& s);
inline Subspace point_ideal(const SteinbergAlgebra& b, Arrow x) { return vanishing_ideal(b, {x}); }

/// span{a b : a in I basis, b in B basis} and span{b a}.
Subspace left_ideal_span(const SteinbergAlgebra& b, const Subspace& i);
Subspace right_ideal_span(const SteinbergAlgebra& b, const Subspace& j);

/// C(I,J) = {c : c J <= I B, I c <= B J} by one kernel computation.
Subspace compute_C(const SteinbergAlgebra& b, const Subspace& i, const Subspace& j);

class IsotropyData {
public:
  /// B(y,x) for the point ideals J_y, J_x.
  static IsotropyData build(const AlgebraPtr& b, Arrow y, Arrow x);
  /// B(I,J) for I = J_{sy}, J = J_{sx}.
  static IsotropyData build_general(const AlgebraPtr& b, std::vector<Arrow> sy, std::vector<Arrow> sx);

  const SteinbergAlgebra& algebra() const { return *b_; }
  const AlgebraPtr& algebra_ptr() const { return b_; }
  /// The points for point ideals; kNoArrow otherwise.
  Arrow y() const { return y_; }
  Arrow x() const { return x_; }

  const Subspace& I() const { return i_; }
  const Subspace& J() const { return j_; }
  const Subspace& IB() const { return ib_; }
  const Subspace& BJ() const { return bj_; }
  const Subspace& L() const { return l_; }
  const Subspace& C() const { return c_; }
  const Subspace& H() const { return h_; }
  const QuotientSpace& quotient() const { return q_; }
  std::size_t dim() const { return q_.dim(); }

  /// B = C + L.
  bool regular() const { return regular_; }
  /// H = C cap L.
  bool h_is_meet() const { return h_meet_; }

  /// Class p(c) of c in C.
  Vector p(const Vector& c) const { return q_.project(c); }
  Vector lift(const Vector& q) const { return q_.inject(q); }

  /// The isotropy projection, as a dim x dim(B) matrix.
  const Matrix& E_matrix() const;
  Vector E(const Vector& b) const { return E_matrix().apply(b); }
  /// E computed from the decomposition with the L columns first.
  Vector E_alternate(const Vector& b) const;

  /// Product table of B(x,x); only for equal ideals on both sides.
  const PresentationPtr& algebra_structure() const;
  bool is_algebra() const { return static_cast<bool>(pres_); }

private:
  IsotropyData(AlgebraPtr b, Subspace i, Subspace j, Arrow y, Arrow x, std::vector<Arrow> sy);
  Vector decompose(const Vector& b, bool c_first) const;

  AlgebraPtr b_;
  Arrow y_, x_;
  Subspace i_, j_, ib_, bj_, l_, c_, h_;
  QuotientSpace q_;
  bool regular_ = false, h_meet_ = false;
  std::optional<Matrix> e_;
  PresentationPtr pres_;
};

/// p_zx(lift g * lift h) for g in B(z,y), h in B(y,x).
Vector bimodule_product(const IsotropyData& zy, const IsotropyData& yx, const IsotropyData& zx, const Vector& g,
                        const Vector& h);

struct TwistedGroupAlgebraCertificate {
  std::vector<Arrow> isotropy_arrows;
  bool null_space = false;      // L(x,x) = {b : b vanishes on G(x,x)}
  bool bijective = false;       // b + L -> b restricted to G(x,x)
  bool multiplicative = false;  // transported table = twisted group algebra table
  bool projection = false;      // E(b) corresponds to b restricted to G(x,x)
  std::string witness;
  PresentationPtr group_algebra;

  bool ok() const { return null_space && bijective && multiplicative && projection; }
};

TwistedGroupAlgebraCertificate identify_with_twisted_group_algebra(const IsotropyData& xx);

}  // namespace gkd
