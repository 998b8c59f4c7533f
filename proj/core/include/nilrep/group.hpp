#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "nilrep/abelian.hpp"
#include "nilrep/word.hpp"

namespace nilrep {

struct GroupSpec;

/// Free nilpotent group of rank n and class c.
struct FreeNilpotent {
  unsigned n;
  unsigned c;
  friend bool operator==(const FreeNilpotent &, const FreeNilpotent &) = default;
};
/// The discrete Heisenberg group H3(Z).
struct Heisenberg {
  friend bool operator==(const Heisenberg &, const Heisenberg &) = default;
};
struct FreeAbelian {
  unsigned n;
  friend bool operator==(const FreeAbelian &, const FreeAbelian &) = default;
};
struct FiniteAbelian {
  std::vector<Integer> divisors;
  friend bool operator==(const FiniteAbelian &, const FiniteAbelian &) = default;
};
struct DirectProduct {
  std::vector<GroupSpec> factors;
  friend bool operator==(const DirectProduct &, const DirectProduct &);
};
/// A finite presentation whose nilpotency is taken on trust.
struct Presented {
  Presentation presentation;
  std::optional<unsigned> declared_class;
  friend bool operator==(const Presented &, const Presented &) = default;
};

struct GroupSpec {
  using Variant =
      std::variant<FreeNilpotent, Heisenberg, FreeAbelian, FiniteAbelian, DirectProduct, Presented>;
  Variant value;

  static GroupSpec free_nilpotent(unsigned n, unsigned c);
  static GroupSpec heisenberg();
  static GroupSpec free_abelian(unsigned n);
  static GroupSpec finite_abelian(std::vector<Integer> divisors);
  static GroupSpec product(std::vector<GroupSpec> factors);
  static GroupSpec presented(Presentation p, std::optional<unsigned> declared_class = {});

  template <class T> const T *get_if() const noexcept { return std::get_if<T>(&value); }
  /// True for every variant except Presented (and products containing one).
  bool is_catalog() const;

  friend bool operator==(const GroupSpec &, const GroupSpec &) = default;
};

/// Per-layer data of the lower central series: layer i is G_(i) / G_(i+1).
struct LowerCentralData {
  std::vector<AbelianInvariants> per_layer;
  unsigned nilpotency_class = 0;
};

/// <x,y,z | [x,y]z^-1, [x,z], [y,z]>
Presentation heisenberg_presentation();
/// Generators x1..xn with every [[xi,xj],xk] trivial.
Presentation free_nilpotent_class2_presentation(unsigned n);
Presentation free_abelian_presentation(unsigned n);

AbelianInvariants abelianize(const GroupSpec &g);

/// Witt ranks of G_(i)/G_(i+1) for the free nilpotent group, i = 1..c.
std::vector<Integer> free_nilpotent_lcs_ranks(unsigned n, unsigned c);

/// Catalog variants only; Presented input throws UnsupportedQuotient.
GroupSpec quotient_by_lcs(const GroupSpec &g, unsigned i);
LowerCentralData lower_central_data(const GroupSpec &g);

/// Whether g is abelian, when that can be decided from the spec alone.
std::optional<bool> is_abelian(const GroupSpec &g);
/// Nilpotency class when known (0 for the trivial group).
std::optional<unsigned> nilpotency_class(const GroupSpec &g);

/// Free nilpotent groups of rank >= 2 and class >= 2, and H3.
bool is_free_nilpotent_nonabelian_or_heisenberg(const GroupSpec &g);

} // namespace nilrep
