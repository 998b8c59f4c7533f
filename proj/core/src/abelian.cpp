#include "nilrep/abelian.hpp"

#include <sstream>

#include "nilrep/smith.hpp"

namespace nilrep {

AbelianInvariants AbelianInvariants::from_cyclic_orders(const std::vector<Integer> &orders) {
  IntMatrix relations(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i)
    relations(i, i) = abs(orders[i]);
  return cokernel_of_rows(relations);
}

AbelianInvariants AbelianInvariants::cokernel_of_rows(const IntMatrix &relations) {
  const auto factors = smith_normal_form(relations).invariant_factors();
  AbelianInvariants out;
  std::size_t nonzero = 0;
  for (const auto &d : factors) {
    if (d == 0)
      continue;
    ++nonzero;
    if (d != 1)
      out.torsion.push_back(d);
  }
  out.rank = relations.cols() - nonzero;
  return out;
}

std::string AbelianInvariants::to_string() const {
  if (is_trivial())
    return "0";
  std::ostringstream os;
  bool first = true;
  if (rank > 0) {
    os << "Z^" << rank;
    first = false;
  }
  for (const auto &t : torsion) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  return os.str();
}

AbelianInvariants direct_sum(const AbelianInvariants &a, const AbelianInvariants &b) {
  std::vector<Integer> orders = a.torsion;
  orders.insert(orders.end(), b.torsion.begin(), b.torsion.end());
  auto out = AbelianInvariants::from_cyclic_orders(orders);
  out.rank = a.rank + b.rank;
  return out;
}

AbelianInvariants power(const AbelianInvariants &a, std::size_t r) {
  AbelianInvariants out;
  for (std::size_t i = 0; i < r; ++i)
    out = direct_sum(out, a);
  return out;
}

bool is_divisor_chain(const std::vector<Integer> &divisors) {
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] < 2)
      return false;
    if (i > 0 && !mpz_divisible_p(divisors[i].get_mpz_t(), divisors[i - 1].get_mpz_t()))
      return false;
  }
  return true;
}

} // namespace nilrep
