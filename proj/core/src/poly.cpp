#include "nilrep/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "nilrep/error.hpp"

namespace nilrep {

GradedPoly::GradedPoly(std::initializer_list<long> coefficients) {
  for (long v : coefficients)
    c_.emplace_back(v);
  trim();
}

GradedPoly::GradedPoly(std::vector<Integer> coefficients) : c_(std::move(coefficients)) {
  trim();
}

GradedPoly GradedPoly::constant(const Integer &c) { return GradedPoly(std::vector<Integer>{c}); }

GradedPoly GradedPoly::monomial(std::size_t degree, const Integer &c) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return GradedPoly(std::move(v));
}

void GradedPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

Integer GradedPoly::evaluate(const Integer &t) const {
  Integer acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

GradedPoly GradedPoly::substitute_power(std::size_t k) const {
  if (k == 0)
    return constant(evaluate(1));
  std::vector<Integer> v(c_.empty() ? 0 : (c_.size() - 1) * k + 1);
  for (std::size_t d = 0; d < c_.size(); ++d)
    v[d * k] = c_[d];
  return GradedPoly(std::move(v));
}

GradedPoly GradedPoly::pow(std::size_t e) const {
  GradedPoly result{1};
  GradedPoly base = *this;
  while (e) {
    if (e & 1)
      result = result * base;
    e >>= 1;
    if (e)
      base = base * base;
  }
  return result;
}

GradedPoly GradedPoly::divide_exact(const GradedPoly &divisor) const {
  if (divisor.is_zero())
    throw Error(ErrorKind::InexactDivision, "division by the zero polynomial");
  if (is_zero())
    return {};
  if (degree() < divisor.degree())
    throw Error(ErrorKind::InexactDivision, "dividend degree below divisor degree");
  std::vector<Integer> rem = c_;
  const std::size_t dd = divisor.c_.size() - 1;
  const Integer &lead = divisor.c_.back();
  std::vector<Integer> q(rem.size() - dd);
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer &top = rem[k + dd];
    if (top == 0)
      continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw Error(ErrorKind::InexactDivision, "non-integral polynomial quotient");
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t i = 0; i <= dd; ++i)
      rem[k + i] -= f * divisor.c_[i];
    q[k] = std::move(f);
  }
  for (const auto &r : rem)
    if (r != 0)
      throw Error(ErrorKind::InexactDivision, "polynomial division leaves a remainder");
  return GradedPoly(std::move(q));
}

GradedPoly GradedPoly::divide_exact(const Integer &divisor) const {
  if (divisor == 0)
    throw Error(ErrorKind::InexactDivision, "division by zero");
  std::vector<Integer> v = c_;
  for (auto &x : v) {
    if (!mpz_divisible_p(x.get_mpz_t(), divisor.get_mpz_t()))
      throw Error(ErrorKind::InexactDivision,
                  "coefficient " + x.get_str() + " not divisible by " + divisor.get_str());
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
  }
  return GradedPoly(std::move(v));
}

bool GradedPoly::has_nonnegative_coefficients() const {
  return std::all_of(c_.begin(), c_.end(), [](const Integer &x) { return x >= 0; });
}

std::string GradedPoly::to_string() const {
  if (c_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < c_.size(); ++d) {
    const Integer &c = c_[d];
    if (c == 0)
      continue;
    Integer mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (d == 0 || mag != 1)
      os << mag;
    if (d >= 1)
      os << 't';
    if (d >= 2)
      os << '^' << d;
  }
  return os.str();
}

GradedPoly &GradedPoly::operator+=(const GradedPoly &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  trim();
  return *this;
}

GradedPoly &GradedPoly::operator-=(const GradedPoly &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  trim();
  return *this;
}

GradedPoly operator*(const GradedPoly &a, const GradedPoly &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] += a.c_[i] * b.c_[j];
  }
  return GradedPoly(std::move(v));
}

GradedPoly operator*(GradedPoly a, const Integer &s) {
  for (auto &x : a.c_)
    x *= s;
  a.trim();
  return a;
}

RationalPoly::RationalPoly(GradedPoly numerator, Integer denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_ <= 0)
    throw Error(ErrorKind::InvalidArgument, "rational polynomial needs a positive denominator");
}

RationalPoly &RationalPoly::operator+=(const GradedPoly &p) {
  num_ += p * den_;
  return *this;
}

GradedPoly RationalPoly::to_integer_poly() const { return num_.divide_exact(den_); }

GradedPoly determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto &row : m)
    if (row.size() != n)
      throw Error(ErrorKind::InvalidArgument, "determinant of a non-square polynomial matrix");
  if (n == 0)
    return GradedPoly{1};
  bool negate = false;
  GradedPoly previous{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero())
        ++p;
      if (p == n)
        return {};
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(previous);
      m[i][k] = {};
    }
    previous = m[k][k];
  }
  GradedPoly det = m[n - 1][n - 1];
  return negate ? GradedPoly{} - det : det;
}

std::ostream &operator<<(std::ostream &os, const GradedPoly &p) { return os << p.to_string(); }

} // namespace nilrep
