#pragma once

// Brute-force reference computations used only by the test suites. None of
// these call into the code path they are checking.

#include <algorithm>
#include <array>
#include <bit>
#include <iterator>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace nilrep::oracle {

/// Lyndon words of length `len` over an alphabet of size n: words strictly
/// smaller than each of their proper rotations.
inline std::uint64_t count_lyndon_words(unsigned n, unsigned len) {
  std::uint64_t count = 0;
  std::vector<unsigned> w(len, 0);
  for (;;) {
    bool lyndon = true;
    for (unsigned s = 1; s < len && lyndon; ++s) {
      std::vector<unsigned> rot(w.begin() + s, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + s);
      if (!(w < rot))
        lyndon = false;
    }
    count += lyndon;
    unsigned i = len;
    while (i > 0 && w[i - 1] == n - 1)
      w[--i] = 0;
    if (i == 0)
      break;
    ++w[i - 1];
  }
  return count;
}

/// Determinant by permutation expansion (small matrices only).
inline mpz_class permutation_det(const std::vector<std::vector<long>> &m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class det = 0;
  do {
    long sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j])
          sign = -sign;
    mpz_class term = sign;
    for (std::size_t i = 0; i < n; ++i)
      term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Coefficients of det(I + t w): the k-th coefficient is the sum of the
/// principal k x k minors of w.
inline std::vector<mpz_class> det_one_plus_tw(const std::vector<std::vector<long>> &w) {
  const std::size_t n = w.size();
  std::vector<mpz_class> c(n + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1)
        idx.push_back(i);
    std::vector<std::vector<long>> minor(idx.size(), std::vector<long>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b)
        minor[a][b] = w[idx[a]][idx[b]];
    c[idx.size()] += idx.empty() ? mpz_class(1) : permutation_det(minor);
  }
  while (c.size() > 1 && c.back() == 0)
    c.pop_back();
  return c;
}

/// Hamilton quaternions with integer coordinates 1, i, j, k.
using Quaternion = std::array<long, 4>;

inline Quaternion quaternion_mul(const Quaternion &p, const Quaternion &q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

/// The eight units, in the order 1, -1, i, -i, j, -j, k, -k.
inline std::vector<Quaternion> quaternion_units() {
  return {{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0},  {0, -1, 0, 0},
          {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1},  {0, 0, 0, -1}};
}

/// Multiplication table built from quaternion arithmetic.
inline std::vector<std::vector<std::size_t>> quaternion_table() {
  const auto u = quaternion_units();
  std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      const auto p = quaternion_mul(u[a], u[b]);
      for (std::size_t c = 0; c < 8; ++c)
        if (u[c] == p)
          t[a][b] = c;
    }
  return t;
}

using Table = std::vector<std::vector<std::size_t>>;

inline std::size_t table_identity(const Table &t) {
  for (std::size_t e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < t.size(); ++x)
      ok = ok && t[e][x] == x;
    if (ok)
      return e;
  }
  return t.size();
}

/// Number of ordered commuting pairs, by a double loop.
inline std::uint64_t commuting_pairs(const Table &t) {
  std::uint64_t n = 0;
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      n += t[a][b] == t[b][a];
  return n;
}

/// Closure of a generating set under multiplication (finite group).
inline std::set<std::size_t> closure(const Table &t, std::vector<std::size_t> gens) {
  std::set<std::size_t> s{table_identity(t)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> current(s.begin(), s.end());
    for (auto a : current)
      for (auto g : gens)
        if (s.insert(t[a][g]).second)
          grew = true;
  }
  return s;
}

/// Ordered pairs (a, b) generating the whole group, by inclusion-exclusion
/// over maximal subgroups: pairs inside a subgroup H number |H|^2, and the
/// non-generating pairs are the union over maximal H.
inline std::int64_t generating_pairs_inclusion_exclusion(const Table &t) {
  const std::size_t n = t.size();
  std::set<std::set<std::size_t>> proper;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto h = closure(t, {a, b});
      if (h.size() < n)
        proper.insert(h);
    }
  std::vector<std::set<std::size_t>> maximal;
  for (const auto &h : proper) {
    bool is_max = true;
    for (const auto &k : proper)
      if (k.size() > h.size() && std::includes(k.begin(), k.end(), h.begin(), h.end()))
        is_max = false;
    if (is_max)
      maximal.push_back(h);
  }
  std::int64_t non_generating = 0;
  const std::size_t m = maximal.size();
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::set<std::size_t> inter;
    bool first = true;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1))
        continue;
      if (first) {
        inter = maximal[i];
        first = false;
      } else {
        std::set<std::size_t> next;
        std::set_intersection(inter.begin(), inter.end(), maximal[i].begin(), maximal[i].end(),
                              std::inserter(next, next.begin()));
        inter = std::move(next);
      }
    }
    const auto sz = static_cast<std::int64_t>(inter.size());
    non_generating += (std::popcount(mask) % 2 ? 1 : -1) * sz * sz;
  }
  return static_cast<std::int64_t>(n * n) - non_generating;
}

/// Euler phi by counting.
inline unsigned long phi(unsigned long k) {
  unsigned long c = 0;
  for (unsigned long j = 1; j <= k; ++j)
    c += std::gcd(j, k) == 1;
  return c;
}

/// Count of diagonal m x m matrices whose entries are roots of unity of
/// order <= m, enumerated as tuples of (order, exponent) labels.
inline mpz_class diagonal_root_matrices(unsigned m) {
  // Distinct roots of unity of order <= m are e^{2 pi i a/b} with
  // gcd(a, b) = 1, 0 <= a < b <= m.
  std::set<std::pair<unsigned, unsigned>> roots;
  for (unsigned b = 1; b <= m; ++b)
    for (unsigned a = 0; a < b; ++a)
      if (std::gcd(a, b) == 1)
        roots.insert({a, b});
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), roots.size(), m);
  return out;
}

} // namespace nilrep::oracle
