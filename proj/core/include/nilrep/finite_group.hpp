#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nilrep {

using Element = std::size_t;

/// A finite group given by its full multiplication table.
class FiniteGroup {
public:
  /// Validates identity, inverses and (for order <= 24) associativity.
  static FiniteGroup from_table(std::vector<std::vector<Element>> table,
                                std::vector<std::string> labels = {});
  /// Closure of the given permutations of {0..degree-1}.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::size_t>> &generators);
  static FiniteGroup cyclic(std::size_t n);
  /// Dihedral group of order 2n.
  static FiniteGroup dihedral(std::size_t n);
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);

  std::size_t order() const noexcept { return table_.size(); }
  Element identity() const noexcept { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element power(Element a, long k) const;
  /// a^-1 b^-1 a b
  Element commutator(Element a, Element b) const;
  const std::string &label(Element a) const { return labels_[a]; }
  std::optional<Element> find(const std::string &label) const;

  bool is_abelian() const;
  std::size_t centralizer_size(Element g) const;
  /// Membership mask of the subgroup generated by `generators`.
  std::vector<bool> generated_subgroup(std::span<const Element> generators) const;
  /// Subgroup generated by all [a, b] with a in the group and b in `mask`.
  std::vector<bool> commutator_with(const std::vector<bool> &mask) const;
  /// Nilpotency class, or nothing if the group is not nilpotent.
  std::optional<unsigned> nilpotency_class() const;
  std::vector<bool> center() const;

private:
  FiniteGroup() = default;

  std::vector<std::vector<Element>> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  Element identity_ = 0;
};

/// The quaternion group of order 8, generated inside SL2(C) by diag(i, -i)
/// and [[0, 1], [-1, 0]]. Elements are labelled 1, -1, i, -i, j, -j, k, -k
/// in that index order.
FiniteGroup q8();

} // namespace nilrep
