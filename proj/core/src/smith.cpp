#include "nilrep/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace nilrep {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest non-zero entry (by absolute value) in the trailing block.
std::optional<Position> smallest_entry(const IntMatrix &d, std::size_t from) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = from; i < d.rows(); ++i)
    for (std::size_t j = from; j < d.cols(); ++j) {
      if (d(i, j) == 0)
        continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

} // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  const std::size_t k = std::min(diagonal.rows(), diagonal.cols());
  std::vector<Integer> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix &m) {
  SmithForm f{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix &d = f.diagonal;
  const std::size_t steps = std::min(d.rows(), d.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = smallest_entry(d, t);
      if (!pivot)
        break;
      d.swap_rows(t, pivot->row);
      f.left.swap_rows(t, pivot->row);
      d.swap_cols(t, pivot->col);
      f.right.swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0)
          continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_row_multiple(i, t, q);
        f.left.add_row_multiple(i, t, q);
        if (d(i, t) != 0)
          cleared = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0)
          continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        q = -q;
        d.add_col_multiple(j, t, q);
        f.right.add_col_multiple(j, t, q);
        if (d(t, j) != 0)
          cleared = false;
      }
      if (!cleared)
        continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and reduce again.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < d.rows() && !offending; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            offending = i;
            break;
          }
      if (!offending)
        break;
      d.add_row_multiple(t, *offending, 1);
      f.left.add_row_multiple(t, *offending, 1);
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.left.negate_row(t);
    }
  }
  return f;
}

} // namespace nilrep
