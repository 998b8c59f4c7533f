#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nilrep/abelian.hpp"
#include "nilrep/int_matrix.hpp"

namespace nilrep {

enum class Family { SL, GL, PGL, Sp, SO, Spin, G2, F4, Torus };

/// One simple or torus factor. `n` is the number in the usual name:
/// SL3 -> 3, Sp4 -> 4, Spin7 -> 7, G2 -> 2, T5 -> 5.
struct ReductiveFactor {
  Family family;
  unsigned n;

  std::string name() const;
  friend bool operator==(const ReductiveFactor &, const ReductiveFactor &) = default;
};

struct ReductiveSpec {
  std::vector<ReductiveFactor> factors;

  /// Throws UnsupportedType for out-of-catalog parameters and TooLarge when
  /// the total rank is beyond what the library handles.
  void validate() const;
  bool is_torus() const;
  std::string to_string() const;

  friend bool operator==(const ReductiveSpec &, const ReductiveSpec &) = default;
};

using LatticeVector = std::vector<std::int64_t>;

/// Square integer matrix acting on the cocharacter lattice Z^n.
class LatticeMap {
public:
  LatticeMap() = default;
  explicit LatticeMap(std::size_t n) : n_(n), a_(n * n, 0) {}
  static LatticeMap identity(std::size_t n);

  std::size_t dim() const noexcept { return n_; }
  std::int32_t &operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  std::int32_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  LatticeVector apply(const LatticeVector &v) const;
  IntMatrix to_int_matrix() const;
  bool is_identity() const;

  friend LatticeMap operator*(const LatticeMap &a, const LatticeMap &b);
  friend bool operator==(const LatticeMap &, const LatticeMap &) = default;
  friend auto operator<=>(const LatticeMap &a, const LatticeMap &b) { return a.a_ <=> b.a_; }

private:
  std::size_t n_ = 0;
  std::vector<std::int32_t> a_;
};

/// Root datum on the cocharacter lattice Z^rank. Roots are linear forms on
/// that lattice (dual coordinates), coroots are lattice vectors, and the
/// simple reflection s_j maps v to v - <alpha_j, v> alpha_j^vee.
struct RootDatum {
  std::size_t rank = 0;
  std::vector<LatticeVector> simple_coroots;
  std::vector<LatticeVector> simple_roots;
  /// Every coroot, positive and negative, sorted.
  std::vector<LatticeVector> coroots;
  std::vector<LatticeMap> simple_reflections;
  /// Weyl degrees, one per lattice dimension; central torus directions
  /// contribute 1.
  std::vector<unsigned> degrees;

  std::size_t positive_coroot_count() const noexcept { return coroots.size() / 2; }
  Integer weyl_order() const;
};

struct WeylGroup {
  std::size_t rank = 0;
  /// Deduplicated and sorted lexicographically by entries.
  std::vector<LatticeMap> elements;

  std::size_t order() const noexcept { return elements.size(); }
};

inline constexpr std::size_t kMaxWeylOrder = 1'000'000;
inline constexpr std::size_t kMaxRank = 64;

RootDatum build_root_datum(const ReductiveSpec &spec);
/// Closure of the simple reflections; throws TooLarge above kMaxWeylOrder.
WeylGroup enumerate_weyl(const RootDatum &rd);

/// Cocharacter lattice modulo the coroot lattice.
AbelianInvariants pi1_G(const RootDatum &rd);
/// Dimension of the torus G/[G,G].
std::size_t pi1_G_ab(const RootDatum &rd);

/// Whether the factor is in the catalog of groups known to contain the
/// quaternion group (those containing a copy of SL2(C)).
bool contains_quaternion_subgroup(const ReductiveFactor &f);
/// True when the factor is semisimple (everything but GL and tori).
bool is_semisimple(const ReductiveFactor &f);

} // namespace nilrep
