#pragma once

// The bimodule M_x = B / B J_x, induction from B(x,x) to B, and the checks
// relating induction and restriction.

#include <string>
#include <vector>

#include "gkd/isotropy.hpp"
#include "gkd/modrep.hpp"
#include "gkd/normalizers.hpp"

namespace gkd {

class ImprimitivityBimodule {
public:
  /// xx must be the point isotropy data B(x,x).
  static ImprimitivityBimodule build(const IsotropyData& xx);

  const IsotropyData& isotropy() const { return xx_; }
  const SteinbergAlgebra& algebra() const { return xx_.algebra(); }
  Arrow x() const { return xx_.x(); }
  const std::vector<Arrow>& orbit() const { return orbit_; }
  /// The arrow carrying n_y, one per orbit point; n_x is the unit x.
  const std::vector<Arrow>& chosen() const { return chosen_; }
  std::size_t block_of(Arrow y) const;

  const QuotientSpace& space() const { return m_; }
  std::size_t dim() const { return m_.dim(); }

  /// Class of b in M_x.
  Vector cls(const Vector& b) const { return m_.project(b); }
  Vector rep(const Vector& xi) const { return m_.inject(xi); }

  /// Left action of the arrow basis of B; right action of the basis of B(x,x).
  const std::vector<Matrix>& left() const { return left_; }
  const std::vector<Matrix>& right() const { return right_; }

  Vector mu(const Vector& h) const;   // B(x,x) -> M_x
  Vector pi(const Vector& xi) const;  // left multiplication by delta_x
  Vector nu(const Vector& xi) const;  // mu^-1 pi
  const Matrix& mu_matrix() const { return mu_; }
  const Matrix& pi_matrix() const { return pi_; }
  const Matrix& nu_matrix() const { return nu_; }
  /// Columns zeta_y h_k, block by block.
  const Matrix& zeta_matrix() const { return zeta_; }

private:
  explicit ImprimitivityBimodule(const IsotropyData& xx);
  IsotropyData xx_;
  std::vector<Arrow> orbit_, chosen_;
  QuotientSpace m_;
  std::vector<Matrix> left_, right_;
  Matrix mu_, pi_, nu_, zeta_;
};

struct NamedCheck {
  std::string name;
  bool pass = false;
  std::string witness;
};

/// Bimodule law, mu/pi/nu identities, the direct sum over the orbit, freeness,
/// and the normalizer-class formulas.
std::vector<NamedCheck> check_bimodule(const ImprimitivityBimodule& m);

/// Ind_x V on the carrier of one copy of V per orbit point.
FdModule induce(const ImprimitivityBimodule& m, const FdModule& v);

/// Coefficient of delta_gamma from block y to block r(gamma): nu(n_z* delta_gamma n_y).
Vector induced_coefficient(const ImprimitivityBimodule& m, Arrow gamma);

/// The block embedding of W <= V into Ind_x V.
Subspace induced_subspace(const ImprimitivityBimodule& m, const Subspace& w);

struct RoundtripCertificate {
  bool lands = false, injective = false, onto = false, linear = false;
  std::size_t dim_v = 0, dim_restriction = 0;
  bool ok() const { return lands && injective && onto && linear; }
};

/// v -> zeta_x (x) v is a B(x,x)-isomorphism V -> Res_x Ind_x V.
RoundtripCertificate verify_res_ind_roundtrip(const ImprimitivityBimodule& m, const FdModule& v);

struct EmbeddingCertificate {
  bool injective = false, linear = false, onto = false;
  std::size_t dim_ind = 0, dim_v = 0, image_dim = 0;
};

/// rho((b + B J_x) (x) w) = b w from Ind_x Res_x V into V, for V over B.
EmbeddingCertificate verify_ind_res_embedding(const ImprimitivityBimodule& m, const FdModule& v);

struct TransferResult {
  Subspace w;           // in V
  bool induced_equals;  // Ind(W) = Z
};

/// W = {v : zeta_x (x) v in Z}; throws ModuleError if Z is not invariant.
TransferResult submodule_transfer(const ImprimitivityBimodule& m, const FdModule& v, const FdModule& ind,
                                  const Subspace& z);

struct LatticeCertificate {
  std::size_t submodules_v = 0, submodules_ind = 0;
  bool bijective = false, order_preserving = false, transfer_inverse = false;
  bool ok() const { return bijective && order_preserving && transfer_inverse; }
};

/// Compares the full submodule lattices of V and Ind_x V over GF(p).
LatticeCertificate verify_lattice_transfer(const ImprimitivityBimodule& m, const FdModule& v,
                                           std::uint64_t budget = kEnumerationBudget);

}  // namespace gkd
