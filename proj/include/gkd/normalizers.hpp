#pragma once

// Normalizers of the diagonal subalgebra A in B, their partial bijections of
// the unit space, and inverse-semigroup checks.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gkd/steinberg.hpp"

namespace gkd {

/// A partial bijection of the unit space, stored as an explicit mapping.
class PartialBijection {
public:
  PartialBijection() = default;
  explicit PartialBijection(std::map<Arrow, Arrow> m);

  const std::map<Arrow, Arrow>& mapping() const { return m_; }
  std::vector<Arrow> domain() const;
  std::vector<Arrow> range() const;
  std::optional<Arrow> apply(Arrow x) const;
  PartialBijection inverse() const;
  /// "x -> y" lines sorted by x.
  std::string to_string() const;

  friend bool operator==(const PartialBijection&, const PartialBijection&) = default;

private:
  std::map<Arrow, Arrow> m_;
};

/// f after g on the largest domain where that makes sense.
PartialBijection compose(const PartialBijection& f, const PartialBijection& g);

struct NormalizerCertificate {
  AlgebraElement n;
  AlgebraElement n_star;
  PartialBijection beta;
};

struct NormalizerRefusal {
  std::string condition;  // "nn*n=n", "n*nn*=n*", "nAn*<=A", "n*An<=A", ...
  AlgebraElement witness;
  std::string detail;
};

using NormalizerResult = std::variant<NormalizerCertificate, NormalizerRefusal>;

NormalizerResult certify_normalizer(const AlgebraElement& n, const AlgebraElement& n_star);

/// Searches for n* supported on supp(n)^-1 by one joint linear solve.
NormalizerResult synthesize_normalizer(const AlgebraElement& n);

/// Certificate for a bisection-supported element with its bundle inverse;
/// throws when the certificate fails.
NormalizerCertificate certify_section(const AlgebraElement& n);

/// Certificate for a in A with the pointwise inverse on its support.
NormalizerCertificate certify_diagonal(const AlgebraElement& a);

/// beta from the defining property <n* a n, x> = <a, beta(x)> over A's basis.
/// Throws AlgebraError when no partial bijection satisfies it.
PartialBijection beta_of(const AlgebraElement& n, const AlgebraElement& n_star);

/// s(g) -> r(g) over the support.
PartialBijection beta_from_support(const AlgebraElement& n);

bool in_N_x(const NormalizerCertificate& c, Arrow x);
bool in_N(const NormalizerCertificate& c, Arrow y, Arrow x);

struct InverseSemigroupReport {
  std::size_t size = 0;
  std::size_t idempotents = 0;
  bool bounded = true;  // closure finished inside the size bound
  std::vector<std::string> violations;

  bool ok() const { return bounded && violations.empty(); }
};

/// Generates the semigroup of the sample, their partial inverses and 0, then
/// checks closure, (nm)* = m*n*, uniqueness of inverses and that idempotents commute.
InverseSemigroupReport verify_inverse_semigroup(const SteinbergAlgebra& b,
                                                const std::vector<NormalizerCertificate>& sample,
                                                std::size_t bound = 4096);

}  // namespace gkd
