#pragma once

#include "nilrep/int_matrix.hpp"

namespace nilrep {

/// U * input * V == diagonal, with U and V unimodular.
struct SmithForm {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;

  /// The min(rows, cols) diagonal entries, non-negative, each dividing the next.
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix &m);

} // namespace nilrep
