#include "nilrep/invariants.hpp"

#include <bit>
#include <cstdint>

#include "nilrep/error.hpp"

namespace nilrep {

namespace {

// det(I + s * w) as a polynomial in s.
GradedPoly det_identity_plus(const LatticeMap &w, long s_sign) {
  const std::size_t n = w.dim();
  PolyMatrix m(n, std::vector<GradedPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Integer> c(2);
      c[0] = i == j ? 1 : 0;
      c[1] = s_sign * static_cast<long>(w(i, j));
      m[i][j] = GradedPoly(std::move(c));
    }
  return determinant(std::move(m));
}

void check_exported(const GradedPoly &p, const char *what) {
  if (!p.has_nonnegative_coefficients() || p.coefficient(0) != 1)
    throw Error(ErrorKind::InexactDivision,
                std::string(what) + " produced an invalid Poincare polynomial " + p.to_string());
}

} // namespace

GradedPoly exterior_char(const LatticeMap &w, std::size_t r) {
  return det_identity_plus(w, 1).pow(r);
}

GradedPoly coinvariant_char(const LatticeMap &w, std::span<const unsigned> degrees) {
  if (degrees.size() != w.dim())
    throw Error(ErrorKind::InvalidArgument, "degree count must equal the lattice rank");
  GradedPoly numerator{1};
  for (unsigned d : degrees)
    numerator = numerator * (GradedPoly{1} - GradedPoly::monomial(2 * d));
  const GradedPoly denominator = det_identity_plus(w, -1).substitute_power(2);
  return numerator.divide_exact(denominator);
}

GradedPoly molien_char_variety(std::span<const LatticeMap> elements, std::size_t r) {
  GradedPoly sum;
  for (const auto &w : elements)
    sum += exterior_char(w, r);
  return RationalPoly(sum, Integer(static_cast<unsigned long>(elements.size()))).to_integer_poly();
}

GradedPoly molien_hom_component(std::span<const LatticeMap> elements,
                                std::span<const unsigned> degrees, std::size_t r) {
  GradedPoly sum;
  for (const auto &w : elements)
    sum += coinvariant_char(w, degrees) * exterior_char(w, r);
  return RationalPoly(sum, Integer(static_cast<unsigned long>(elements.size()))).to_integer_poly();
}

GradedPoly poincare_char_variety(const RootDatum &rd, std::size_t r) {
  const WeylGroup w = enumerate_weyl(rd);
  GradedPoly p = molien_char_variety(w.elements, r);
  check_exported(p, "character variety sum");
  return p;
}

GradedPoly poincare_hom_component(const RootDatum &rd, std::size_t r) {
  const WeylGroup w = enumerate_weyl(rd);
  GradedPoly p = molien_hom_component(w.elements, rd.degrees, r);
  check_exported(p, "representation variety sum");
  const long bound = static_cast<long>(2 * rd.positive_coroot_count() + r * rd.rank);
  if (p.degree() > bound)
    throw Error(ErrorKind::InexactDivision, "Poincare polynomial exceeds the dimension bound");
  return p;
}

namespace {

// Square-free monomials of a given degree, as bitmasks over the basis.
std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == k)
      out.push_back(mask);
  return out;
}

std::vector<std::size_t> members(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1)
      out.push_back(i);
  return out;
}

} // namespace

std::vector<std::size_t> exterior_invariant_dims_oracle(const WeylGroup &group, std::size_t r) {
  const std::size_t n = group.rank;
  const std::size_t basis = n * r;
  if (basis > kMaxOracleBasis)
    throw Error(ErrorKind::TooLarge, "oracle basis 2^" + std::to_string(basis) + " too large");

  // w acting on r copies of the lattice, block diagonally.
  auto block_entry = [&](const LatticeMap &w, std::size_t row, std::size_t col) -> long {
    if (row / n != col / n)
      return 0;
    return w(row % n, col % n);
  };

  std::vector<std::size_t> dims;
  for (std::size_t degree = 0; degree <= basis; ++degree) {
    const auto monomials = subsets_of_size(basis, degree);
    const std::size_t dim = monomials.size();
    // Sum over W of the matrix of w on the degree-th exterior power: the
    // coefficient of e_T in w(e_S) is the minor of w on rows T, columns S.
    IntMatrix average(dim, dim);
    for (const auto &w : group.elements) {
      for (std::size_t a = 0; a < dim; ++a) {
        const auto rows = members(monomials[a]);
        for (std::size_t b = 0; b < dim; ++b) {
          const auto cols = members(monomials[b]);
          IntMatrix minor(degree, degree);
          for (std::size_t i = 0; i < degree; ++i)
            for (std::size_t j = 0; j < degree; ++j)
              minor(i, j) = block_entry(w, rows[i], cols[j]);
          average(a, b) += determinant(minor);
        }
      }
    }
    dims.push_back(rational_rank(std::move(average)));
  }
  while (dims.size() > 1 && dims.back() == 0)
    dims.pop_back();
  return dims;
}

} // namespace nilrep
