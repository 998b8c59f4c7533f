#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nilrep/poly.hpp"
#include "nilrep/root_datum.hpp"

namespace nilrep {

/// Graded trace of w on the cohomology of T^r: det(I + t w)^r.
GradedPoly exterior_char(const LatticeMap &w, std::size_t r);

/// Graded trace of w on H*(G/T): prod(1 - t^{2 d_i}) / det(I - t^2 w).
/// Throws InexactDivision if (w, degrees) are inconsistent.
GradedPoly coinvariant_char(const LatticeMap &w, std::span<const unsigned> degrees);

/// Poincare polynomial of H*(T^r)^W, i.e. of the identity component of the
/// character variety of a group with rank H1 = r.
GradedPoly poincare_char_variety(const RootDatum &rd, std::size_t r);
/// Poincare polynomial of H*(G/T x T^r)^W, i.e. of the identity component
/// of the representation variety.
GradedPoly poincare_hom_component(const RootDatum &rd, std::size_t r);

/// Same sums over an explicit element list, in the order given. Exposed so
/// callers can check order independence.
GradedPoly molien_char_variety(std::span<const LatticeMap> elements, std::size_t r);
GradedPoly molien_hom_component(std::span<const LatticeMap> elements,
                                std::span<const unsigned> degrees, std::size_t r);

inline constexpr std::size_t kMaxOracleBasis = 12;

/// Brute force: builds every exterior power of the r-fold sum of the
/// reflection representation, averages the W action, and returns the rank
/// of the resulting projector in each degree. Requires rank * r <= 12.
std::vector<std::size_t> exterior_invariant_dims_oracle(const WeylGroup &w, std::size_t r);

} // namespace nilrep
