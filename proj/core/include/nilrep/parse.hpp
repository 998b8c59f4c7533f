#pragma once

#include <string>
#include <string_view>

#include "nilrep/finite_group.hpp"
#include "nilrep/group.hpp"
#include "nilrep/root_datum.hpp"

namespace nilrep {

/// Grammar (see docs/grammar.md):
///   H3 | F(n,c) | Z | Z^n | Z/d | <g1,...,gk | w1, ...> [class N]
/// joined by `x`, with parentheses for grouping. A product made only of
/// bare Z/d factors is normalized to invariant-factor form.
GroupSpec parse_group_spec(std::string_view text);
std::string render_group_spec(const GroupSpec &g);

/// Factors SLn, GLn, PGLn, Sp2n, SOn, Spinn, Tk, G2, F4 joined by `x`.
ReductiveSpec parse_reductive_spec(std::string_view text);
std::string render_reductive_spec(const ReductiveSpec &spec);

/// Q8, Cn (cyclic), Dn (dihedral of order 2n), Sn, joined by `x`.
FiniteGroup parse_finite_group(std::string_view text);

} // namespace nilrep
