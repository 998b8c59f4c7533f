#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nilrep/int_matrix.hpp"

namespace nilrep {

struct Letter {
  std::size_t generator;
  long exponent;

  friend bool operator==(const Letter &, const Letter &) = default;
};

/// A freely reduced word in the generators: exponents are non-zero and
/// adjacent letters use distinct generators.
class Word {
public:
  Word() = default;
  /// Accepts any letter sequence and freely reduces it.
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::size_t index, long exponent = 1);
  /// [a, b] = a^-1 b^-1 a b
  static Word commutator(const Word &a, const Word &b);

  const std::vector<Letter> &letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }

  Word inverse() const;
  Word pow(long k) const;
  /// Largest generator index used; meaningless for the empty word.
  std::size_t max_generator() const;
  /// Total exponent of each of the first `generator_count` generators.
  std::vector<Integer> exponent_sums(std::size_t generator_count) const;

  friend Word operator*(const Word &a, const Word &b);
  friend bool operator==(const Word &, const Word &) = default;

private:
  std::vector<Letter> letters_;
};

struct Presentation {
  std::size_t generator_count = 0;
  std::vector<Word> relators;
  /// Display names; empty means x1, x2, ...
  std::vector<std::string> generator_names;

  /// Throws InvalidArgument unless every relator letter is in range.
  void validate() const;
  std::string name_of(std::size_t generator) const;
  /// Relator exponent-sum matrix, one row per relator.
  IntMatrix exponent_matrix() const;

  friend bool operator==(const Presentation &, const Presentation &) = default;
};

} // namespace nilrep
