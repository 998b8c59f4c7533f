#include "nilrep/group.hpp"

#include <algorithm>

#include "nilrep/error.hpp"

namespace nilrep {

bool operator==(const DirectProduct &a, const DirectProduct &b) { return a.factors == b.factors; }

GroupSpec GroupSpec::free_nilpotent(unsigned n, unsigned c) {
  if (n == 0 || c == 0)
    throw Error(ErrorKind::InvalidArgument, "free nilpotent group needs n >= 1 and c >= 1");
  return {FreeNilpotent{n, c}};
}

GroupSpec GroupSpec::heisenberg() { return {Heisenberg{}}; }

GroupSpec GroupSpec::free_abelian(unsigned n) { return {FreeAbelian{n}}; }

GroupSpec GroupSpec::finite_abelian(std::vector<Integer> divisors) {
  if (divisors.empty() || !is_divisor_chain(divisors))
    throw Error(ErrorKind::InvalidArgument,
                "finite abelian divisors must be >= 2 and form a divisibility chain");
  return {FiniteAbelian{std::move(divisors)}};
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
  if (factors.empty())
    throw Error(ErrorKind::InvalidArgument, "direct product needs at least one factor");
  return {DirectProduct{std::move(factors)}};
}

GroupSpec GroupSpec::presented(Presentation p, std::optional<unsigned> declared_class) {
  p.validate();
  return {Presented{std::move(p), declared_class}};
}

bool GroupSpec::is_catalog() const {
  if (get_if<Presented>())
    return false;
  if (const auto *dp = get_if<DirectProduct>())
    return std::all_of(dp->factors.begin(), dp->factors.end(),
                       [](const GroupSpec &f) { return f.is_catalog(); });
  return true;
}

Presentation heisenberg_presentation() {
  const Word x = Word::generator(0), y = Word::generator(1), z = Word::generator(2);
  Presentation p;
  p.generator_count = 3;
  p.generator_names = {"x", "y", "z"};
  p.relators = {Word::commutator(x, y) * z.inverse(), Word::commutator(x, z),
                Word::commutator(y, z)};
  return p;
}

namespace {

std::vector<std::string> indexed_names(unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i)
    names.push_back("x" + std::to_string(i + 1));
  return names;
}

} // namespace

Presentation free_nilpotent_class2_presentation(unsigned n) {
  Presentation p;
  p.generator_count = n;
  p.generator_names = indexed_names(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      const Word c = Word::commutator(Word::generator(i), Word::generator(j));
      for (unsigned k = 0; k < n; ++k)
        p.relators.push_back(Word::commutator(c, Word::generator(k)));
    }
  return p;
}

Presentation free_abelian_presentation(unsigned n) {
  Presentation p;
  p.generator_count = n;
  p.generator_names = indexed_names(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      p.relators.push_back(Word::commutator(Word::generator(i), Word::generator(j)));
  return p;
}

AbelianInvariants abelianize(const GroupSpec &g) {
  return std::visit(
      [](const auto &v) -> AbelianInvariants {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FreeNilpotent>) {
          return AbelianInvariants::free(v.n);
        } else if constexpr (std::is_same_v<T, Heisenberg>) {
          return AbelianInvariants::free(2);
        } else if constexpr (std::is_same_v<T, FreeAbelian>) {
          return AbelianInvariants::free(v.n);
        } else if constexpr (std::is_same_v<T, FiniteAbelian>) {
          return AbelianInvariants{0, v.divisors};
        } else if constexpr (std::is_same_v<T, DirectProduct>) {
          AbelianInvariants sum;
          for (const auto &f : v.factors)
            sum = direct_sum(sum, abelianize(f));
          return sum;
        } else {
          return AbelianInvariants::cokernel_of_rows(v.presentation.exponent_matrix());
        }
      },
      g.value);
}

namespace {

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

} // namespace

std::vector<Integer> free_nilpotent_lcs_ranks(unsigned n, unsigned c) {
  if (n == 0 || c == 0)
    throw Error(ErrorKind::InvalidArgument, "Witt ranks need n >= 1 and c >= 1");
  std::vector<Integer> ranks;
  ranks.reserve(c);
  for (unsigned i = 1; i <= c; ++i) {
    Integer sum = 0;
    for (unsigned d = 1; d <= i; ++d) {
      if (i % d)
        continue;
      Integer term;
      mpz_ui_pow_ui(term.get_mpz_t(), n, i / d);
      sum += mobius(d) * term;
    }
    ranks.push_back(sum / i);
  }
  return ranks;
}

GroupSpec quotient_by_lcs(const GroupSpec &g, unsigned i) {
  if (i < 2)
    throw Error(ErrorKind::InvalidArgument, "lower central quotient index must be >= 2");
  return std::visit(
      [&](const auto &v) -> GroupSpec {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FreeNilpotent>) {
          return GroupSpec::free_nilpotent(v.n, std::min(v.c, i - 1));
        } else if constexpr (std::is_same_v<T, Heisenberg>) {
          return i == 2 ? GroupSpec::free_abelian(2) : g;
        } else if constexpr (std::is_same_v<T, DirectProduct>) {
          std::vector<GroupSpec> factors;
          for (const auto &f : v.factors)
            factors.push_back(quotient_by_lcs(f, i));
          return GroupSpec::product(std::move(factors));
        } else if constexpr (std::is_same_v<T, Presented>) {
          throw Error(ErrorKind::UnsupportedQuotient,
                      "lower central quotients are only available for catalog groups");
        } else {
          return g;
        }
      },
      g.value);
}

LowerCentralData lower_central_data(const GroupSpec &g) {
  return std::visit(
      [&](const auto &v) -> LowerCentralData {
        using T = std::decay_t<decltype(v)>;
        LowerCentralData out;
        if constexpr (std::is_same_v<T, FreeNilpotent>) {
          if (v.n == 1) {
            out.per_layer = {AbelianInvariants::free(1)};
          } else {
            for (const auto &w : free_nilpotent_lcs_ranks(v.n, v.c))
              out.per_layer.push_back(AbelianInvariants::free(w.get_ui()));
          }
        } else if constexpr (std::is_same_v<T, Heisenberg>) {
          out.per_layer = {AbelianInvariants::free(2), AbelianInvariants::free(1)};
        } else if constexpr (std::is_same_v<T, FreeAbelian>) {
          if (v.n > 0)
            out.per_layer = {AbelianInvariants::free(v.n)};
        } else if constexpr (std::is_same_v<T, FiniteAbelian>) {
          if (!v.divisors.empty())
            out.per_layer = {AbelianInvariants{0, v.divisors}};
        } else if constexpr (std::is_same_v<T, DirectProduct>) {
          for (const auto &f : v.factors) {
            auto part = lower_central_data(f);
            if (part.per_layer.size() > out.per_layer.size())
              out.per_layer.resize(part.per_layer.size());
            for (std::size_t k = 0; k < part.per_layer.size(); ++k)
              out.per_layer[k] = direct_sum(out.per_layer[k], part.per_layer[k]);
          }
        } else {
          throw Error(ErrorKind::UnsupportedQuotient,
                      "lower central series data is only available for catalog groups");
        }
        out.nilpotency_class = static_cast<unsigned>(out.per_layer.size());
        return out;
      },
      g.value);
}

std::optional<bool> is_abelian(const GroupSpec &g) {
  if (const auto *p = g.get_if<Presented>()) {
    if (p->declared_class)
      return *p->declared_class <= 1;
    if (p->presentation.generator_count == 1)
      return true;
    return std::nullopt;
  }
  if (const auto *dp = g.get_if<DirectProduct>()) {
    bool all = true;
    for (const auto &f : dp->factors) {
      auto a = is_abelian(f);
      if (!a)
        all = false;
      else if (!*a)
        return false;
    }
    return all ? std::optional<bool>(true) : std::nullopt;
  }
  return lower_central_data(g).nilpotency_class <= 1;
}

std::optional<unsigned> nilpotency_class(const GroupSpec &g) {
  if (const auto *p = g.get_if<Presented>()) {
    if (p->presentation.generator_count == 1)
      return abelianize(g).is_trivial() ? 0u : 1u;
    return p->declared_class;
  }
  if (!g.is_catalog()) {
    const auto &dp = std::get<DirectProduct>(g.value);
    unsigned cls = 0;
    for (const auto &f : dp.factors) {
      auto c = nilpotency_class(f);
      if (!c)
        return std::nullopt;
      cls = std::max(cls, *c);
    }
    return cls;
  }
  return lower_central_data(g).nilpotency_class;
}

bool is_free_nilpotent_nonabelian_or_heisenberg(const GroupSpec &g) {
  if (g.get_if<Heisenberg>())
    return true;
  if (const auto *fn = g.get_if<FreeNilpotent>())
    return fn->n >= 2 && fn->c >= 2;
  return false;
}

} // namespace nilrep
