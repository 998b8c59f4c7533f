#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nilrep/finite_group.hpp"
#include "nilrep/group.hpp"
#include "nilrep/root_datum.hpp"

namespace nilrep {

inline constexpr std::size_t kMaxHomGenerators = 6;
inline constexpr std::uint64_t kMaxHomSearchSpace = 100'000'000;

struct HomSearchResult {
  std::uint64_t total = 0;
  /// Homomorphisms whose image is the whole target.
  std::uint64_t surjective = 0;
  /// Generator images of the first surjection found (target non-abelian).
  std::optional<std::vector<Element>> witness;
};

/// Presentation used to enumerate homomorphisms from g into `target`.
/// Free nilpotent groups of class >= 3 are handled through the class-2
/// quotient when the target has class <= 2, and with no relators when the
/// target's class does not exceed c; anything else is UnsupportedGroup.
Presentation presentation_for_homs(const GroupSpec &g, const FiniteGroup &target);

Element evaluate(const Word &w, const FiniteGroup &f, std::span<const Element> images);
bool is_homomorphism(const Presentation &p, const FiniteGroup &f,
                     std::span<const Element> images);

/// Depth-first search over generator images in element-index order, pruning
/// on each relator as soon as its last generator is assigned.
HomSearchResult enumerate_homs(const Presentation &p, const FiniteGroup &target);
HomSearchResult enumerate_homs(const GroupSpec &g, const FiniteGroup &target);

/// First surjection onto a non-abelian target in search order.
std::optional<std::vector<Element>> surjection_witness(const GroupSpec &g,
                                                       const FiniteGroup &target);

enum class Connectivity { Connected, Disconnected, Unknown };

enum class VerdictRule {
  TorsionCharacters,
  TorusTarget,
  AbelianSource,
  QuaternionQuotient,
  FreeNilpotentOrHeisenberg,
  Undetermined,
};

std::string_view to_string(Connectivity c) noexcept;
std::string_view to_string(VerdictRule r) noexcept;

/// Connectivity of Hom(Gamma, G); the same verdict holds for the character
/// variety.
struct Verdict {
  Connectivity status = Connectivity::Unknown;
  VerdictRule rule = VerdictRule::Undetermined;
  std::string reason;
  /// Generator images in Q8 when rule == QuaternionQuotient.
  std::vector<std::string> witness;
  /// The factor of G that contains Q8.
  std::optional<std::string> embedding_factor;
};

Verdict connectivity_verdict(const GroupSpec &g, const ReductiveSpec &spec);

/// (phi(1) + ... + phi(m))^m: the number of diagonal m x m matrices whose
/// entries are roots of unity of order at most m.
Integer central_image_order_bound(unsigned m);

} // namespace nilrep
