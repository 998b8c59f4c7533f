#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilrep/int_matrix.hpp"

namespace nilrep {

/// A finitely generated abelian group Z^rank + Z/t1 + ... + Z/tk with
/// t1 | t2 | ... | tk and every ti >= 2.
struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  static AbelianInvariants free(std::size_t rank) { return {rank, {}}; }
  /// Normalizes an arbitrary list of cyclic orders (entries 0 mean Z,
  /// entries 1 are dropped) into invariant-factor form.
  static AbelianInvariants from_cyclic_orders(const std::vector<Integer> &orders);
  /// Z^generators modulo the row span of `relations`.
  static AbelianInvariants cokernel_of_rows(const IntMatrix &relations);

  bool is_trivial() const noexcept { return rank == 0 && torsion.empty(); }
  bool is_torsion_free() const noexcept { return torsion.empty(); }

  std::string to_string() const;

  friend bool operator==(const AbelianInvariants &, const AbelianInvariants &) = default;
};

AbelianInvariants direct_sum(const AbelianInvariants &a, const AbelianInvariants &b);
/// r-fold direct sum of a with itself; power(a, 0) is trivial.
AbelianInvariants power(const AbelianInvariants &a, std::size_t r);

/// True when the divisor list satisfies d1 | d2 | ... with all di >= 2.
bool is_divisor_chain(const std::vector<Integer> &divisors);

} // namespace nilrep
