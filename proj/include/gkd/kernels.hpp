#pragma once

// The two exhaustive scans that dominate running time, each with a serial
// reference and an OpenMP version. Results are identical by construction:
// parallel workers only produce partial results that are merged in a fixed
// order.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gkd/linalg.hpp"
#include "gkd/steinberg.hpp"

namespace gkd::kernels {

struct AssociativityScan {
  std::size_t defects = 0;
  std::optional<std::array<std::size_t, 3>> first;  // lexicographically least defect

  friend bool operator==(const AssociativityScan&, const AssociativityScan&) = default;
};

AssociativityScan associativity_serial(const AlgebraPresentation& p);
AssociativityScan associativity_parallel(const AlgebraPresentation& p);

/// Square matrix over GF(p) with entries in [0, p), row-major.
struct ModPMatrix {
  std::size_t n = 0;
  std::vector<std::uint32_t> a;
};

ModPMatrix to_modp(const Matrix& m);

/// A subspace of GF(p)^n as its RREF rows laid end to end.
using Packed = std::vector<std::uint32_t>;

/// RREF of the given rows (each of length n), packed.
Packed modp_rref(std::uint32_t p, std::size_t n, std::vector<std::vector<std::uint32_t>> rows);
/// Smallest subspace containing v and invariant under every generator.
Packed modp_generated(std::uint32_t p, const std::vector<ModPMatrix>& gens, std::size_t n,
                      const std::vector<std::uint32_t>& v);
Packed modp_sum(std::uint32_t p, std::size_t n, const Packed& a, const Packed& b);
Subspace unpack(const Field& f, std::size_t n, const Packed& s);

/// Number of vectors a scan over GF(p)^n visits, saturating at 2^63.
std::uint64_t scan_size(std::uint32_t p, std::size_t n);

/// All distinct cyclic invariant subspaces generated by one nonzero vector,
/// sorted. Only vectors whose first nonzero entry is 1 are visited.
std::vector<Packed> cyclic_subspaces_serial(std::uint32_t p, std::size_t n, const std::vector<ModPMatrix>& gens);
std::vector<Packed> cyclic_subspaces_parallel(std::uint32_t p, std::size_t n, const std::vector<ModPMatrix>& gens);

}  // namespace gkd::kernels
