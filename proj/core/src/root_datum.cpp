#include "nilrep/root_datum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "nilrep/error.hpp"

namespace nilrep {

std::string ReductiveFactor::name() const {
  switch (family) {
  case Family::SL:
    return "SL" + std::to_string(n);
  case Family::GL:
    return "GL" + std::to_string(n);
  case Family::PGL:
    return "PGL" + std::to_string(n);
  case Family::Sp:
    return "Sp" + std::to_string(n);
  case Family::SO:
    return "SO" + std::to_string(n);
  case Family::Spin:
    return "Spin" + std::to_string(n);
  case Family::G2:
    return "G2";
  case Family::F4:
    return "F4";
  case Family::Torus:
    return "T" + std::to_string(n);
  }
  return "?";
}

namespace {

std::size_t factor_rank(const ReductiveFactor &f) {
  switch (f.family) {
  case Family::SL:
  case Family::PGL:
    return f.n - 1;
  case Family::GL:
  case Family::Torus:
    return f.n;
  case Family::Sp:
  case Family::SO:
  case Family::Spin:
    return f.n / 2;
  case Family::G2:
    return 2;
  case Family::F4:
    return 4;
  }
  return 0;
}

void check_factor(const ReductiveFactor &f) {
  auto unsupported = [&](const std::string &why) {
    throw Error(ErrorKind::UnsupportedType, f.name() + ": " + why);
  };
  switch (f.family) {
  case Family::SL:
  case Family::PGL:
    if (f.n < 2)
      unsupported("needs n >= 2");
    break;
  case Family::GL:
  case Family::Torus:
    if (f.n < 1)
      unsupported("needs n >= 1");
    break;
  case Family::Sp:
    if (f.n < 2 || f.n % 2)
      unsupported("symplectic groups need an even size >= 2");
    break;
  case Family::SO:
  case Family::Spin:
    if (f.n < 3)
      unsupported("needs n >= 3");
    break;
  case Family::G2:
    if (f.n != 2)
      unsupported("bad exceptional label");
    break;
  case Family::F4:
    if (f.n != 4)
      unsupported("bad exceptional label");
    break;
  }
}

} // namespace

void ReductiveSpec::validate() const {
  if (factors.empty())
    throw Error(ErrorKind::UnsupportedType, "reductive group needs at least one factor");
  std::size_t rank = 0;
  for (const auto &f : factors) {
    check_factor(f);
    rank += factor_rank(f);
  }
  if (rank > kMaxRank)
    throw Error(ErrorKind::TooLarge, "total rank " + std::to_string(rank) + " exceeds " +
                                         std::to_string(kMaxRank));
}

bool ReductiveSpec::is_torus() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const ReductiveFactor &f) { return f.family == Family::Torus; });
}

std::string ReductiveSpec::to_string() const {
  std::string out;
  for (const auto &f : factors)
    out += (out.empty() ? "" : " x ") + f.name();
  return out;
}

LatticeMap LatticeMap::identity(std::size_t n) {
  LatticeMap m(n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

LatticeVector LatticeMap::apply(const LatticeVector &v) const {
  LatticeVector out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      out[i] += static_cast<std::int64_t>((*this)(i, j)) * v[j];
  return out;
}

IntMatrix LatticeMap::to_int_matrix() const {
  IntMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      m(i, j) = static_cast<long>((*this)(i, j));
  return m;
}

bool LatticeMap::is_identity() const { return *this == identity(n_); }

LatticeMap operator*(const LatticeMap &a, const LatticeMap &b) {
  if (a.n_ != b.n_)
    throw Error(ErrorKind::InvalidArgument, "lattice map dimension mismatch");
  LatticeMap c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < a.n_; ++j) {
        const std::int64_t v = c(i, j) + aik * b(k, j);
        if (v > INT32_MAX || v < INT32_MIN)
          throw Error(ErrorKind::TooLarge, "lattice map entry overflow");
        c(i, j) = static_cast<std::int32_t>(v);
      }
    }
  return c;
}

Integer RootDatum::weyl_order() const {
  Integer order = 1;
  for (unsigned d : degrees)
    order *= d;
  return order;
}

namespace {

// Simple roots and coroots of one factor in its own coordinates.
struct FactorDatum {
  std::size_t rank = 0;
  std::vector<LatticeVector> coroots;
  std::vector<LatticeVector> roots;
  std::vector<unsigned> degrees;
};

LatticeVector unit(std::size_t n, std::size_t i, std::int64_t scale = 1) {
  LatticeVector v(n, 0);
  v[i] = scale;
  return v;
}

LatticeVector difference(std::size_t n, std::size_t i, std::size_t j) {
  LatticeVector v(n, 0);
  v[i] = 1;
  v[j] = -1;
  return v;
}

enum class ClassicalType { A, B, C, D };

// Root system realized in the standard coordinates of the matrix group
// (GL_n for type A, SO_{2n+1}, Sp_{2n}, SO_{2n} for B, C, D).
FactorDatum classical_coordinates(ClassicalType type, std::size_t n) {
  FactorDatum f;
  f.rank = n;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    f.roots.push_back(difference(n, i, i + 1));
    f.coroots.push_back(difference(n, i, i + 1));
  }
  switch (type) {
  case ClassicalType::A:
    for (unsigned d = 2; d <= n; ++d)
      f.degrees.push_back(d);
    break;
  case ClassicalType::B:
    f.roots.push_back(unit(n, n - 1));
    f.coroots.push_back(unit(n, n - 1, 2));
    for (unsigned d = 1; d <= n; ++d)
      f.degrees.push_back(2 * d);
    break;
  case ClassicalType::C:
    f.roots.push_back(unit(n, n - 1, 2));
    f.coroots.push_back(unit(n, n - 1));
    for (unsigned d = 1; d <= n; ++d)
      f.degrees.push_back(2 * d);
    break;
  case ClassicalType::D: {
    LatticeVector v(n, 0);
    v[n - 2] = 1;
    v[n - 1] = 1;
    f.roots.push_back(v);
    f.coroots.push_back(v);
    for (unsigned d = 1; d + 1 <= n; ++d)
      f.degrees.push_back(2 * d);
    f.degrees.push_back(static_cast<unsigned>(n));
    break;
  }
  }
  return f;
}

std::int64_t pairing(const LatticeVector &root, const LatticeVector &coroot) {
  return std::inner_product(root.begin(), root.end(), coroot.begin(), std::int64_t{0});
}

// Cartan entries a_ij = <coroot_i, root_j>.
std::vector<std::vector<std::int64_t>> cartan_of(const FactorDatum &f) {
  const std::size_t l = f.roots.size();
  std::vector<std::vector<std::int64_t>> a(l, std::vector<std::int64_t>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      a[i][j] = pairing(f.roots[j], f.coroots[i]);
  return a;
}

enum class Isogeny { SimplyConnected, Adjoint };

// Semisimple datum built from a Cartan matrix: the cocharacter lattice is
// the coroot lattice (simply connected) or the coweight lattice (adjoint).
FactorDatum from_cartan(const std::vector<std::vector<std::int64_t>> &a, Isogeny iso,
                        std::vector<unsigned> degrees) {
  FactorDatum f;
  const std::size_t l = a.size();
  f.rank = l;
  f.degrees = std::move(degrees);
  for (std::size_t j = 0; j < l; ++j) {
    LatticeVector coroot(l), root(l);
    for (std::size_t k = 0; k < l; ++k) {
      if (iso == Isogeny::SimplyConnected) {
        coroot[k] = k == j ? 1 : 0;
        root[k] = a[k][j];
      } else {
        coroot[k] = a[j][k];
        root[k] = k == j ? 1 : 0;
      }
    }
    f.coroots.push_back(std::move(coroot));
    f.roots.push_back(std::move(root));
  }
  return f;
}

FactorDatum factor_datum(const ReductiveFactor &rf) {
  const std::size_t r = factor_rank(rf);
  switch (rf.family) {
  case Family::GL:
    return classical_coordinates(ClassicalType::A, rf.n);
  case Family::Torus: {
    FactorDatum f;
    f.rank = rf.n;
    f.degrees.assign(rf.n, 1);
    return f;
  }
  case Family::SL:
  case Family::PGL: {
    auto gl = classical_coordinates(ClassicalType::A, rf.n);
    return from_cartan(cartan_of(gl),
                       rf.family == Family::SL ? Isogeny::SimplyConnected : Isogeny::Adjoint,
                       gl.degrees);
  }
  case Family::Sp:
    return classical_coordinates(ClassicalType::C, r);
  case Family::SO:
  case Family::Spin: {
    auto so = classical_coordinates(rf.n % 2 ? ClassicalType::B : ClassicalType::D, r);
    if (rf.family == Family::SO)
      return so;
    return from_cartan(cartan_of(so), Isogeny::SimplyConnected, so.degrees);
  }
  case Family::G2:
    return from_cartan({{2, -3}, {-1, 2}}, Isogeny::SimplyConnected, {2, 6});
  case Family::F4:
    return from_cartan({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}},
                       Isogeny::SimplyConnected, {2, 6, 8, 12});
  }
  throw Error(ErrorKind::UnsupportedType, "unknown family");
}

LatticeMap reflection(const LatticeVector &root, const LatticeVector &coroot) {
  const std::size_t n = root.size();
  LatticeMap s = LatticeMap::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s(i, j) -= static_cast<std::int32_t>(coroot[i] * root[j]);
  return s;
}

} // namespace

RootDatum build_root_datum(const ReductiveSpec &spec) {
  spec.validate();
  RootDatum rd;
  for (const auto &f : spec.factors)
    rd.rank += factor_rank(f);

  std::size_t offset = 0;
  for (const auto &rf : spec.factors) {
    const FactorDatum f = factor_datum(rf);
    for (std::size_t j = 0; j < f.roots.size(); ++j) {
      LatticeVector root(rd.rank, 0), coroot(rd.rank, 0);
      for (std::size_t k = 0; k < f.rank; ++k) {
        root[offset + k] = f.roots[j][k];
        coroot[offset + k] = f.coroots[j][k];
      }
      rd.simple_roots.push_back(std::move(root));
      rd.simple_coroots.push_back(std::move(coroot));
    }
    rd.degrees.insert(rd.degrees.end(), f.degrees.begin(), f.degrees.end());
    // GL_n realizes A_{n-1} inside Z^n: the extra direction is central.
    if (rf.family == Family::GL)
      rd.degrees.push_back(1);
    offset += f.rank;
  }
  std::sort(rd.degrees.begin(), rd.degrees.end());

  for (std::size_t j = 0; j < rd.simple_roots.size(); ++j)
    rd.simple_reflections.push_back(reflection(rd.simple_roots[j], rd.simple_coroots[j]));

  // Every coroot is W-conjugate to a simple one.
  std::set<LatticeVector> seen(rd.simple_coroots.begin(), rd.simple_coroots.end());
  std::deque<LatticeVector> queue(rd.simple_coroots.begin(), rd.simple_coroots.end());
  while (!queue.empty()) {
    LatticeVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto &s : rd.simple_reflections) {
      LatticeVector image = s.apply(v);
      if (seen.insert(image).second)
        queue.push_back(std::move(image));
    }
  }
  rd.coroots.assign(seen.begin(), seen.end());
  return rd;
}

WeylGroup enumerate_weyl(const RootDatum &rd) {
  if (rd.weyl_order() > kMaxWeylOrder)
    throw Error(ErrorKind::TooLarge, "Weyl group order " + rd.weyl_order().get_str() +
                                         " exceeds " + std::to_string(kMaxWeylOrder));
  std::set<LatticeMap> seen{LatticeMap::identity(rd.rank)};
  std::deque<LatticeMap> frontier{LatticeMap::identity(rd.rank)};
  while (!frontier.empty()) {
    LatticeMap w = std::move(frontier.front());
    frontier.pop_front();
    for (const auto &s : rd.simple_reflections) {
      LatticeMap next = s * w;
      if (seen.insert(next).second) {
        if (seen.size() > kMaxWeylOrder)
          throw Error(ErrorKind::TooLarge, "Weyl closure exceeded the enumeration bound");
        frontier.push_back(std::move(next));
      }
    }
  }
  return WeylGroup{rd.rank, std::vector<LatticeMap>(seen.begin(), seen.end())};
}

AbelianInvariants pi1_G(const RootDatum &rd) {
  IntMatrix relations(rd.coroots.size(), rd.rank);
  for (std::size_t i = 0; i < rd.coroots.size(); ++i)
    for (std::size_t j = 0; j < rd.rank; ++j)
      relations(i, j) = static_cast<long>(rd.coroots[i][j]);
  return AbelianInvariants::cokernel_of_rows(relations);
}

std::size_t pi1_G_ab(const RootDatum &rd) {
  IntMatrix span(rd.simple_coroots.size(), rd.rank);
  for (std::size_t i = 0; i < rd.simple_coroots.size(); ++i)
    for (std::size_t j = 0; j < rd.rank; ++j)
      span(i, j) = static_cast<long>(rd.simple_coroots[i][j]);
  return rd.rank - rational_rank(span);
}

bool contains_quaternion_subgroup(const ReductiveFactor &f) {
  switch (f.family) {
  case Family::SL:
  case Family::GL:
    return f.n >= 2;
  case Family::Sp:
  case Family::Spin:
  case Family::G2:
  case Family::F4:
    return true;
  case Family::PGL:
  case Family::SO:
  case Family::Torus:
    return false;
  }
  return false;
}

bool is_semisimple(const ReductiveFactor &f) {
  return f.family != Family::GL && f.family != Family::Torus;
}

} // namespace nilrep
