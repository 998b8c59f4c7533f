#include "nilrep/finite_hom.hpp"

#include <algorithm>
#include <numeric>

#include "nilrep/error.hpp"

namespace nilrep {

namespace {

Presentation finite_abelian_presentation(const std::vector<Integer> &divisors) {
  Presentation p = free_abelian_presentation(static_cast<unsigned>(divisors.size()));
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (!divisors[i].fits_slong_p())
      throw Error(ErrorKind::TooLarge, "cyclic order too large for a presentation");
    p.relators.push_back(Word::generator(i, divisors[i].get_si()));
  }
  return p;
}

Presentation combine(const std::vector<Presentation> &parts) {
  Presentation out;
  std::vector<std::size_t> offsets;
  for (const auto &part : parts) {
    offsets.push_back(out.generator_count);
    for (const auto &r : part.relators) {
      std::vector<Letter> shifted = r.letters();
      for (auto &l : shifted)
        l.generator += out.generator_count;
      out.relators.emplace_back(std::move(shifted));
    }
    out.generator_count += part.generator_count;
  }
  for (std::size_t a = 0; a < parts.size(); ++a)
    for (std::size_t b = a + 1; b < parts.size(); ++b)
      for (std::size_t i = 0; i < parts[a].generator_count; ++i)
        for (std::size_t j = 0; j < parts[b].generator_count; ++j)
          out.relators.push_back(Word::commutator(Word::generator(offsets[a] + i),
                                                  Word::generator(offsets[b] + j)));
  return out;
}

} // namespace

Presentation presentation_for_homs(const GroupSpec &g, const FiniteGroup &target) {
  return std::visit(
      [&](const auto &v) -> Presentation {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FreeNilpotent>) {
          if (v.n == 1 || v.c == 1)
            return free_abelian_presentation(v.n);
          if (v.c == 2)
            return free_nilpotent_class2_presentation(v.n);
          const auto cls = target.nilpotency_class();
          if (cls && *cls <= 2)
            return free_nilpotent_class2_presentation(v.n);
          if (cls && *cls <= v.c) {
            Presentation free;
            free.generator_count = v.n;
            return free;
          }
          throw Error(ErrorKind::UnsupportedGroup,
                      "no finite presentation of F(" + std::to_string(v.n) + "," +
                          std::to_string(v.c) + ") available for this target");
        } else if constexpr (std::is_same_v<T, Heisenberg>) {
          return heisenberg_presentation();
        } else if constexpr (std::is_same_v<T, FreeAbelian>) {
          return free_abelian_presentation(v.n);
        } else if constexpr (std::is_same_v<T, FiniteAbelian>) {
          return finite_abelian_presentation(v.divisors);
        } else if constexpr (std::is_same_v<T, DirectProduct>) {
          std::vector<Presentation> parts;
          for (const auto &f : v.factors)
            parts.push_back(presentation_for_homs(f, target));
          return combine(parts);
        } else {
          return v.presentation;
        }
      },
      g.value);
}

Element evaluate(const Word &w, const FiniteGroup &f, std::span<const Element> images) {
  Element acc = f.identity();
  for (const auto &l : w.letters())
    acc = f.multiply(acc, f.power(images[l.generator], l.exponent));
  return acc;
}

bool is_homomorphism(const Presentation &p, const FiniteGroup &f,
                     std::span<const Element> images) {
  if (images.size() != p.generator_count)
    return false;
  return std::all_of(p.relators.begin(), p.relators.end(), [&](const Word &r) {
    return evaluate(r, f, images) == f.identity();
  });
}

namespace {

class HomSearch {
public:
  HomSearch(const Presentation &p, const FiniteGroup &target, bool stop_at_witness)
      : p_(p), f_(target), stop_(stop_at_witness), non_abelian_(!target.is_abelian()),
        by_last_(std::max<std::size_t>(p.generator_count, 1)), images_(p.generator_count) {
    if (p.generator_count > kMaxHomGenerators)
      throw Error(ErrorKind::TooLarge, "homomorphism search limited to " +
                                           std::to_string(kMaxHomGenerators) + " generators");
    Integer space;
    mpz_ui_pow_ui(space.get_mpz_t(), target.order(), p.generator_count);
    if (space > kMaxHomSearchSpace)
      throw Error(ErrorKind::TooLarge, "search space " + space.get_str() + " exceeds 10^8");
    for (const auto &r : p.relators)
      if (!r.empty())
        by_last_[r.max_generator()].push_back(&r);
  }

  HomSearchResult run() {
    dfs(0);
    return result_;
  }

private:
  void dfs(std::size_t k) {
    if (k == p_.generator_count) {
      leaf();
      return;
    }
    for (Element e = 0; e < f_.order() && !done_; ++e) {
      images_[k] = e;
      const bool ok = std::all_of(by_last_[k].begin(), by_last_[k].end(), [&](const Word *r) {
        return evaluate(*r, f_, images_) == f_.identity();
      });
      if (ok)
        dfs(k + 1);
    }
  }

  void leaf() {
    ++result_.total;
    const auto image = f_.generated_subgroup(images_);
    if (static_cast<std::size_t>(std::count(image.begin(), image.end(), true)) != f_.order())
      return;
    ++result_.surjective;
    if (non_abelian_ && !result_.witness) {
      result_.witness = images_;
      done_ = stop_;
    }
  }

  const Presentation &p_;
  const FiniteGroup &f_;
  bool stop_;
  bool non_abelian_;
  bool done_ = false;
  std::vector<std::vector<const Word *>> by_last_;
  std::vector<Element> images_;
  HomSearchResult result_;
};

} // namespace

HomSearchResult enumerate_homs(const Presentation &p, const FiniteGroup &target) {
  return HomSearch(p, target, false).run();
}

HomSearchResult enumerate_homs(const GroupSpec &g, const FiniteGroup &target) {
  return enumerate_homs(presentation_for_homs(g, target), target);
}

std::optional<std::vector<Element>> surjection_witness(const GroupSpec &g,
                                                       const FiniteGroup &target) {
  const Presentation p = presentation_for_homs(g, target);
  return HomSearch(p, target, true).run().witness;
}

std::string_view to_string(Connectivity c) noexcept {
  switch (c) {
  case Connectivity::Connected:
    return "Connected";
  case Connectivity::Disconnected:
    return "Disconnected";
  case Connectivity::Unknown:
    return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(VerdictRule r) noexcept {
  switch (r) {
  case VerdictRule::TorsionCharacters:
    return "torsion-characters";
  case VerdictRule::TorusTarget:
    return "torus-target";
  case VerdictRule::AbelianSource:
    return "abelian-source";
  case VerdictRule::QuaternionQuotient:
    return "finite-non-abelian-quotient";
  case VerdictRule::FreeNilpotentOrHeisenberg:
    return "free-nilpotent-or-heisenberg";
  case VerdictRule::Undetermined:
    return "undetermined";
  }
  return "undetermined";
}

Verdict connectivity_verdict(const GroupSpec &g, const ReductiveSpec &spec) {
  spec.validate();
  const AbelianInvariants h1 = abelianize(g);
  const auto &factors = spec.factors;
  auto all_factors = [&](auto pred) { return std::all_of(factors.begin(), factors.end(), pred); };

  // Characters of the torsion of H1 land in a maximal torus; a non-trivial
  // finite image cannot be deformed to the trivial representation.
  if (!h1.is_torsion_free())
    return {Connectivity::Disconnected, VerdictRule::TorsionCharacters,
            "H1(Gamma;Z) = " + h1.to_string() +
                " has torsion; a non-trivial character of its torsion part into a maximal "
                "torus of G is a representation outside the identity component",
            {}, std::nullopt};

  if (spec.is_torus())
    return {Connectivity::Connected, VerdictRule::TorusTarget,
            "G is an algebraic torus T, so Hom(Gamma,T) = Hom(H1(Gamma;Z),T) = T^(k*" +
                std::to_string(h1.rank) + ") is connected",
            {}, std::nullopt};

  if (is_abelian(g) == std::optional<bool>(true)) {
    const std::size_t r = h1.rank;
    if (r <= 1)
      return {Connectivity::Connected, VerdictRule::AbelianSource,
              "Gamma = Z^" + std::to_string(r) + " and Hom(Z^" + std::to_string(r) +
                  ",G) is a point or G itself, which is connected",
              {}, std::nullopt};
    if (r == 2 && all_factors([](const ReductiveFactor &f) {
          return is_semisimple(f) || f.family == Family::Torus;
        }))
      return {Connectivity::Connected, VerdictRule::AbelianSource,
              "commuting pairs in a connected semisimple group form an irreducible variety, "
              "so Hom(Z^2,G) is connected",
              {}, std::nullopt};
    if (all_factors([](const ReductiveFactor &f) {
          return f.family == Family::SL || f.family == Family::Sp || f.family == Family::Torus;
        }))
      return {Connectivity::Connected, VerdictRule::AbelianSource,
              "Hom(Z^" + std::to_string(r) +
                  ",G) is connected for products of SL_n, Sp_2n and tori, for every rank",
              {}, std::nullopt};
  }

  const auto host = std::find_if(factors.begin(), factors.end(), contains_quaternion_subgroup);
  if (host != factors.end()) {
    const FiniteGroup q = q8();
    std::optional<std::vector<Element>> witness;
    try {
      witness = surjection_witness(g, q);
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::TooLarge && e.kind() != ErrorKind::UnsupportedGroup)
        throw;
    }
    if (witness) {
      Verdict v{Connectivity::Disconnected, VerdictRule::QuaternionQuotient, {}, {},
                host->name()};
      std::string images;
      for (Element e : *witness) {
        v.witness.push_back(q.label(e));
        images += (images.empty() ? "" : ", ") + q.label(e);
      }
      v.reason = "Gamma surjects onto the quaternion group Q8 (generator images " + images +
                 "), and Q8 lies in SL2(C) inside the factor " + host->name() +
                 "; a surjection onto a finite non-abelian subgroup disconnects Hom(Gamma,G)";
      return v;
    }
  }

  if (is_free_nilpotent_nonabelian_or_heisenberg(g))
    return {Connectivity::Disconnected, VerdictRule::FreeNilpotentOrHeisenberg,
            "Gamma is a non-abelian free nilpotent group or the Heisenberg group, and for "
            "such groups Hom(Gamma,G) is connected only when G is a torus",
            {}, std::nullopt};

  return {Connectivity::Unknown, VerdictRule::Undetermined,
          "no rule applies: Gamma is torsion-free in H1, G is not a torus, no surjection onto "
          "Q8 inside G was found, and Gamma is not a named free nilpotent or Heisenberg group",
          {}, std::nullopt};
}

Integer central_image_order_bound(unsigned m) {
  if (m == 0)
    throw Error(ErrorKind::InvalidArgument, "order bound needs m >= 1");
  unsigned long roots = 0;
  for (unsigned k = 1; k <= m; ++k) {
    unsigned long phi = 0;
    for (unsigned j = 1; j <= k; ++j)
      phi += std::gcd(j, k) == 1;
    roots += phi;
  }
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), roots, m);
  return out;
}

} // namespace nilrep
