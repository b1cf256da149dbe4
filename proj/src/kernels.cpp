#include "gkd/kernels.hpp"

#include <algorithm>
#include <set>

#include <omp.h>

namespace gkd::kernels {

namespace {

// Defects of all triples (i, j, k) for one fixed i, in (j, k) order.
void scan_row(const AlgebraPresentation& p, std::size_t i, AssociativityScan& out) {
  const std::size_t d = p.dim();
  for (std::size_t j = 0; j < d; ++j) {
    const Vector ij = p.basis_product(i, j);
    for (std::size_t k = 0; k < d; ++k) {
      Vector left = zero_vector(p.field(), d);
      for (std::size_t m = 0; m < d; ++m)
        if (!ij[m].is_zero())
          for (const auto& t : p.product(m, k)) left[t.k] += ij[m] * t.c;
      Vector right = zero_vector(p.field(), d);
      for (const auto& t : p.product(j, k))
        for (const auto& s : p.product(i, t.k)) right[s.k] += t.c * s.c;
      if (left != right) {
        if (!out.first) out.first = std::array<std::size_t, 3>{i, j, k};
        ++out.defects;
      }
    }
  }
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Incremental RREF basis used by the closure loop.
struct Basis {
  std::uint32_t p;
  std::size_t n;
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::size_t> pivots;

  // Reduces v against the basis; true when v was independent (then added).
  bool insert(std::vector<std::uint32_t> v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        v[j] = static_cast<std::uint32_t>((v[j] + std::uint64_t(p - c) * rows[r][j]) % p);
    }
    std::size_t piv = 0;
    while (piv < n && v[piv] == 0) ++piv;
    if (piv == n) return false;
    std::uint32_t s = inv_mod(v[piv], p);
    for (auto& x : v) x = static_cast<std::uint32_t>(std::uint64_t(x) * s % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t c = rows[r][piv];
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        rows[r][j] = static_cast<std::uint32_t>((rows[r][j] + std::uint64_t(p - c) * v[j]) % p);
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }

  Packed pack() const {
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    Packed out;
    for (auto i : order) out.insert(out.end(), rows[i].begin(), rows[i].end());
    return out;
  }
};

std::vector<std::uint32_t> apply(std::uint32_t p, const ModPMatrix& m, const std::vector<std::uint32_t>& v) {
  std::vector<std::uint32_t> r(m.n, 0);
  for (std::size_t i = 0; i < m.n; ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < m.n; ++j) s = (s + std::uint64_t(m.a[i * m.n + j]) * v[j]) % p;
    r[i] = static_cast<std::uint32_t>(s);
  }
  return r;
}

// Decodes index i as base-p digits; false unless the leading nonzero digit is 1.
bool decode(std::uint64_t i, std::uint32_t p, std::size_t n, std::vector<std::uint32_t>& v) {
  for (std::size_t j = n; j-- > 0;) {
    v[j] = static_cast<std::uint32_t>(i % p);
    i /= p;
  }
  for (auto x : v)
    if (x != 0) return x == 1;
  return false;
}

}  // namespace

AssociativityScan associativity_serial(const AlgebraPresentation& p) {
  AssociativityScan out;
  for (std::size_t i = 0; i < p.dim(); ++i) scan_row(p, i, out);
  return out;
}

AssociativityScan associativity_parallel(const AlgebraPresentation& p) {
  const std::size_t d = p.dim();
  std::vector<AssociativityScan> rows(d);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(d); ++i) scan_row(p, static_cast<std::size_t>(i), rows[i]);
  AssociativityScan out;
  for (const auto& r : rows) {
    if (!out.first && r.first) out.first = r.first;
    out.defects += r.defects;
  }
  return out;
}

ModPMatrix to_modp(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("to_modp: matrix not square");
  if (!m.field().is_prime_field()) throw FieldMismatch("to_modp: matrix over " + m.field().name());
  ModPMatrix r{m.rows(), std::vector<std::uint32_t>(m.rows() * m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.a[i * m.cols() + j] = m(i, j).residue();
  return r;
}

Packed modp_rref(std::uint32_t p, std::size_t n, std::vector<std::vector<std::uint32_t>> rows) {
  Basis b{p, n, {}, {}};
  for (auto& r : rows) b.insert(std::move(r));
  return b.pack();
}

Packed modp_generated(std::uint32_t p, const std::vector<ModPMatrix>& gens, std::size_t n,
                      const std::vector<std::uint32_t>& v) {
  Basis b{p, n, {}, {}};
  std::vector<std::vector<std::uint32_t>> queue{v};
  while (!queue.empty()) {
    auto w = std::move(queue.back());
    queue.pop_back();
    if (!b.insert(w)) continue;
    if (b.rows.size() == n) break;
    for (const auto& g : gens) queue.push_back(apply(p, g, w));
  }
  return b.pack();
}

Packed modp_sum(std::uint32_t p, std::size_t n, const Packed& a, const Packed& b) {
  Basis s{p, n, {}, {}};
  for (std::size_t i = 0; i < a.size(); i += n) s.insert({a.begin() + i, a.begin() + i + n});
  for (std::size_t i = 0; i < b.size(); i += n) s.insert({b.begin() + i, b.begin() + i + n});
  return s.pack();
}

Subspace unpack(const Field& f, std::size_t n, const Packed& s) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < s.size(); i += n) {
    Vector r;
    for (std::size_t j = 0; j < n; ++j) r.push_back(f.from_int(s[i + j]));
    rows.push_back(std::move(r));
  }
  return Subspace::span(f, n, rows);
}

std::uint64_t scan_size(std::uint32_t p, std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > (std::uint64_t(1) << 63) / p) return std::uint64_t(1) << 63;
    total *= p;
  }
  return total;
}

std::vector<Packed> cyclic_subspaces_serial(std::uint32_t p, std::size_t n, const std::vector<ModPMatrix>& gens) {
  const std::uint64_t total = scan_size(p, n);
  std::set<Packed> found;
  std::vector<std::uint32_t> v(n);
  for (std::uint64_t i = 1; i < total; ++i)
    if (decode(i, p, n, v)) found.insert(modp_generated(p, gens, n, v));
  return {found.begin(), found.end()};
}

std::vector<Packed> cyclic_subspaces_parallel(std::uint32_t p, std::size_t n, const std::vector<ModPMatrix>& gens) {
  const std::uint64_t total = scan_size(p, n);
  std::vector<std::set<Packed>> partial(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
  {
    auto& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
    std::vector<std::uint32_t> v(n);
#pragma omp for schedule(static)
    for (std::int64_t i = 1; i < static_cast<std::int64_t>(total); ++i)
      if (decode(static_cast<std::uint64_t>(i), p, n, v)) mine.insert(modp_generated(p, gens, n, v));
  }
  std::set<Packed> found;
  for (auto& s : partial) found.insert(s.begin(), s.end());
  return {found.begin(), found.end()};
}

}  // namespace gkd::kernels
