#pragma once

// Brute-force helpers shared by the tests. Nothing here calls the library's
// elimination routines, so the helpers can act as oracles.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "gkd/linalg.hpp"

namespace gkd::test {

using Raw = std::vector<std::uint32_t>;

inline Raw raw(const Vector& v) {
  Raw out;
  for (const auto& s : v) out.push_back(s.residue());
  return out;
}

inline Vector cooked(const Field& f, const Raw& r) {
  Vector v;
  for (auto x : r) v.push_back(f.from_int(x));
  return v;
}

/// Every vector of GF(p)^n, in base-p counting order.
inline std::vector<Raw> all_vectors(std::uint32_t p, std::size_t n) {
  std::vector<Raw> out;
  Raw cur(n, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] == p) cur[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// The set of all linear combinations of gens, by enumerating coefficients.
inline std::set<Raw> span_set(std::uint32_t p, std::size_t n, const std::vector<Raw>& gens) {
  std::set<Raw> out;
  for (const auto& coeffs : all_vectors(p, gens.size())) {
    Raw v(n, 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i < n; ++i) v[i] = (v[i] + coeffs[g] * gens[g][i]) % p;
    out.insert(v);
  }
  return out;
}

inline Vector random_vector(const Field& f, std::size_t n, std::mt19937& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(f.from_int(d(rng)));
  return v;
}

inline Scalar random_nonzero(const Field& f, std::mt19937& rng) {
  while (true) {
    Scalar s = random_vector(f, 1, rng, -6, 6)[0];
    if (!s.is_zero()) return s;
  }
}

/// Plain matrix product, written out so tests need not trust Matrix::operator*.
inline std::vector<std::vector<Scalar>> naive_product(const Matrix& a, const Matrix& b) {
  std::vector<std::vector<Scalar>> out(a.rows(), std::vector<Scalar>(b.cols(), a.field().zero()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out[i][j] += a(i, k) * b(k, j);
  return out;
}

}  // namespace gkd::test
