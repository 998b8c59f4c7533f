#include "nilrep/word.hpp"

#include <algorithm>

#include "nilrep/error.hpp"

namespace nilrep {

Word::Word(std::vector<Letter> letters) {
  letters_.reserve(letters.size());
  for (const auto &l : letters) {
    if (l.exponent == 0)
      continue;
    if (!letters_.empty() && letters_.back().generator == l.generator) {
      letters_.back().exponent += l.exponent;
      if (letters_.back().exponent == 0)
        letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::generator(std::size_t index, long exponent) {
  return Word({Letter{index, exponent}});
}

Word Word::commutator(const Word &a, const Word &b) {
  return a.inverse() * b.inverse() * a * b;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto &l : out)
    l.exponent = -l.exponent;
  return Word(std::move(out));
}

Word Word::pow(long k) const {
  if (letters_.size() == 1)
    return Word({Letter{letters_[0].generator, letters_[0].exponent * k}});
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (long i = 0; i < (k < 0 ? -k : k); ++i)
    out = out * base;
  return out;
}

std::size_t Word::max_generator() const {
  std::size_t m = 0;
  for (const auto &l : letters_)
    m = std::max(m, l.generator);
  return m;
}

std::vector<Integer> Word::exponent_sums(std::size_t generator_count) const {
  std::vector<Integer> sums(generator_count);
  for (const auto &l : letters_) {
    if (l.generator >= generator_count)
      throw Error(ErrorKind::InvalidArgument, "generator index out of range");
    sums[l.generator] += l.exponent;
  }
  return sums;
}

Word operator*(const Word &a, const Word &b) {
  std::vector<Letter> joined = a.letters_;
  joined.insert(joined.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(joined));
}

void Presentation::validate() const {
  if (generator_count == 0)
    throw Error(ErrorKind::InvalidArgument, "presentation needs at least one generator");
  if (!generator_names.empty() && generator_names.size() != generator_count)
    throw Error(ErrorKind::InvalidArgument, "generator name count mismatch");
  for (const auto &r : relators)
    if (!r.empty() && r.max_generator() >= generator_count)
      throw Error(ErrorKind::InvalidArgument, "relator uses an undeclared generator");
}

std::string Presentation::name_of(std::size_t generator) const {
  if (generator < generator_names.size())
    return generator_names[generator];
  return "x" + std::to_string(generator + 1);
}

IntMatrix Presentation::exponent_matrix() const {
  IntMatrix m(relators.size(), generator_count);
  for (std::size_t i = 0; i < relators.size(); ++i) {
    auto sums = relators[i].exponent_sums(generator_count);
    for (std::size_t j = 0; j < generator_count; ++j)
      m(i, j) = sums[j];
  }
  return m;
}

} // namespace nilrep
