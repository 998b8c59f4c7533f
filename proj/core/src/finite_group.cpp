#include "nilrep/finite_group.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <deque>
#include <map>

#include "nilrep/error.hpp"

namespace nilrep {

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> table,
                                    std::vector<std::string> labels) {
  const std::size_t n = table.size();
  auto invalid = [](const std::string &why) {
    throw Error(ErrorKind::InvalidArgument, "invalid group table: " + why);
  };
  if (n == 0)
    invalid("empty");
  for (const auto &row : table) {
    if (row.size() != n)
      invalid("not square");
    for (Element e : row)
      if (e >= n)
        invalid("entry out of range");
  }
  FiniteGroup g;
  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok)
      identity = e;
  }
  if (!identity)
    invalid("no identity element");
  g.identity_ = *identity;
  g.inverse_.assign(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (table[a][b] == g.identity_ && table[b][a] == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] == n)
      invalid("element without inverse");
  }
  if (n <= 24) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            invalid("not associative");
  }
  if (labels.empty())
    for (Element a = 0; a < n; ++a)
      labels.push_back("g" + std::to_string(a));
  if (labels.size() != n)
    invalid("label count mismatch");
  g.table_ = std::move(table);
  g.labels_ = std::move(labels);
  return g;
}

FiniteGroup
FiniteGroup::from_permutations(const std::vector<std::vector<std::size_t>> &generators) {
  if (generators.empty())
    throw Error(ErrorKind::InvalidArgument, "need at least one permutation");
  const std::size_t degree = generators.front().size();
  using Perm = std::vector<std::size_t>;
  auto compose = [](const Perm &p, const Perm &q) { // (p*q)(x) = p(q(x))
    Perm out(q.size());
    for (std::size_t x = 0; x < q.size(); ++x)
      out[x] = p[q[x]];
    return out;
  };
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i)
    id[i] = i;
  for (const auto &p : generators) {
    Perm sorted = p;
    std::sort(sorted.begin(), sorted.end());
    if (p.size() != degree || sorted != id)
      throw Error(ErrorKind::InvalidArgument, "not a permutation of the common degree");
  }
  std::map<Perm, Element> index{{id, 0}};
  std::vector<Perm> elements{id};
  for (std::size_t head = 0; head < elements.size(); ++head)
    for (const auto &g : generators) {
      Perm next = compose(g, elements[head]);
      if (index.emplace(next, elements.size()).second)
        elements.push_back(std::move(next));
    }
  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      table[a][b] = index.at(compose(elements[a], elements[b]));
  std::vector<std::string> labels;
  for (const auto &p : elements) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i)
      s += (i ? " " : "") + std::to_string(p[i]);
    labels.push_back(s + ")");
  }
  return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0)
    throw Error(ErrorKind::InvalidArgument, "cyclic group needs n >= 1");
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (Element a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (Element b = 0; b < n; ++b)
      table[a][b] = (a + b) % n;
  }
  return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
  if (n < 1)
    throw Error(ErrorKind::InvalidArgument, "dihedral group needs n >= 1");
  // Elements r^a s^b encoded as b * n + a.
  const std::size_t order = 2 * n;
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  std::vector<std::string> labels;
  for (Element x = 0; x < order; ++x) {
    const std::size_t a1 = x % n, b1 = x / n;
    labels.push_back("r" + std::to_string(a1) + (b1 ? "s" : ""));
    for (Element y = 0; y < order; ++y) {
      const std::size_t a2 = y % n, b2 = y / n;
      // r^a1 s^b1 r^a2 s^b2 = r^(a1 +- a2) s^(b1 + b2)
      const std::size_t a = b1 ? (a1 + n - a2) % n : (a1 + a2) % n;
      table[x][y] = ((b1 + b2) % 2) * n + a;
    }
  }
  return from_table(std::move(table), std::move(labels));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n < 1 || n > 6)
    throw Error(ErrorKind::InvalidArgument, "symmetric group supported for 1 <= n <= 6");
  std::vector<std::size_t> cycle(n), swap(n);
  for (std::size_t i = 0; i < n; ++i) {
    cycle[i] = (i + 1) % n;
    swap[i] = i;
  }
  if (n >= 2)
    std::swap(swap[0], swap[1]);
  return from_permutations({cycle, swap});
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  const std::size_t n = a.order() * b.order();
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  std::vector<std::string> labels;
  for (Element x = 0; x < n; ++x) {
    labels.push_back("(" + a.label(x / b.order()) + "," + b.label(x % b.order()) + ")");
    for (Element y = 0; y < n; ++y)
      table[x][y] = a.multiply(x / b.order(), y / b.order()) * b.order() +
                    b.multiply(x % b.order(), y % b.order());
  }
  return from_table(std::move(table), std::move(labels));
}

Element FiniteGroup::power(Element a, long k) const {
  Element base = k < 0 ? inverse(a) : a;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  e %= order();
  Element result = identity_;
  while (e) {
    if (e & 1)
      result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

std::optional<Element> FiniteGroup::find(const std::string &label) const {
  for (Element a = 0; a < order(); ++a)
    if (labels_[a] == label)
      return a;
  return std::nullopt;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a)
    for (Element b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a])
        return false;
  return true;
}

std::size_t FiniteGroup::centralizer_size(Element g) const {
  std::size_t count = 0;
  for (Element x = 0; x < order(); ++x)
    count += table_[g][x] == table_[x][g];
  return count;
}

std::vector<bool> FiniteGroup::generated_subgroup(std::span<const Element> generators) const {
  std::vector<bool> in(order(), false);
  std::deque<Element> queue{identity_};
  in[identity_] = true;
  while (!queue.empty()) {
    const Element x = queue.front();
    queue.pop_front();
    for (Element g : generators) {
      const Element y = multiply(x, g);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

std::vector<bool> FiniteGroup::commutator_with(const std::vector<bool> &mask) const {
  std::vector<Element> gens;
  for (Element a = 0; a < order(); ++a)
    for (Element b = 0; b < order(); ++b)
      if (mask[b])
        gens.push_back(commutator(a, b));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generated_subgroup(gens);
}

std::optional<unsigned> FiniteGroup::nilpotency_class() const {
  std::vector<bool> term(order(), true);
  unsigned cls = 0;
  for (;;) {
    if (std::count(term.begin(), term.end(), true) == 1)
      return cls;
    auto next = commutator_with(term);
    if (next == term)
      return std::nullopt;
    term = std::move(next);
    ++cls;
  }
}

std::vector<bool> FiniteGroup::center() const {
  std::vector<bool> z(order());
  for (Element g = 0; g < order(); ++g)
    z[g] = centralizer_size(g) == order();
  return z;
}

namespace {

using Gaussian = std::complex<long>;
using Mat2 = std::array<Gaussian, 4>;

Mat2 mul(const Mat2 &a, const Mat2 &b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat2 neg(const Mat2 &a) { return {-a[0], -a[1], -a[2], -a[3]}; }

} // namespace

FiniteGroup q8() {
  const Gaussian i(0, 1);
  const Mat2 one{1, 0, 0, 1};
  const Mat2 qi{i, 0, 0, -i};
  const Mat2 qj{0, 1, -1, 0};
  const Mat2 qk = mul(qi, qj);
  const std::vector<Mat2> elements{one, neg(one), qi, neg(qi), qj, neg(qj), qk, neg(qk)};
  const std::vector<std::string> labels{"1", "-1", "i", "-i", "j", "-j", "k", "-k"};

  auto index_of = [&](const Mat2 &m) -> Element {
    for (Element e = 0; e < elements.size(); ++e)
      if (elements[e] == m)
        return e;
    throw Error(ErrorKind::InvalidArgument, "quaternion matrices are not closed");
  };
  std::vector<std::vector<Element>> table(8, std::vector<Element>(8));
  for (Element a = 0; a < 8; ++a)
    for (Element b = 0; b < 8; ++b)
      table[a][b] = index_of(mul(elements[a], elements[b]));
  return FiniteGroup::from_table(std::move(table), labels);
}

} // namespace nilrep
