#include "nilrep/parse.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

#include "nilrep/error.hpp"

namespace nilrep {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  bool accept_keyword(std::string_view kw) {
    skip_space();
    if (text_.substr(pos_, kw.size()) != kw)
      return false;
    pos_ += kw.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail({std::string(1, c)});
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  unsigned long number() {
    if (!at_digit())
      fail({"integer"});
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const unsigned digit = static_cast<unsigned>(text_[pos_] - '0');
      if (v > (std::numeric_limits<unsigned>::max() - digit) / 10)
        fail({"integer below 2^32"});
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }
  long signed_number() {
    const bool negative = accept('-');
    const auto v = static_cast<long>(number());
    return negative ? -v : v;
  }
  std::string letters() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    auto ok = [&](std::size_t i, bool first) {
      const auto c = static_cast<unsigned char>(text_[i]);
      return std::isalpha(c) || c == '_' || (!first && std::isdigit(c));
    };
    if (pos_ >= text_.size() || !ok(pos_, true))
      fail({"identifier"});
    while (pos_ < text_.size() && ok(pos_, pos_ == start))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view rest() {
    skip_space();
    return text_.substr(pos_);
  }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t position() const noexcept { return pos_; }

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_space();
    std::string msg = "parse error at position " + std::to_string(pos_) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i)
      msg += (i ? " or " : "") + ("'" + expected[i] + "'");
    msg += pos_ < text_.size() ? ", found '" + std::string(1, text_[pos_]) + "'"
                               : ", found end of input";
    throw ParseError(pos_, std::move(expected), msg);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class GroupParser {
public:
  explicit GroupParser(std::string_view text) : in_(text) {}

  GroupSpec parse() {
    GroupSpec g = product();
    if (!in_.at_end())
      in_.fail({"x", "end of input"});
    return g;
  }

private:
  struct Factor {
    GroupSpec spec;
    std::optional<Integer> bare_cyclic;
  };

  GroupSpec product() {
    std::vector<Factor> factors{factor()};
    while (in_.accept('x'))
      factors.push_back(factor());
    if (factors.size() == 1)
      return std::move(factors.front().spec);
    const bool all_cyclic = std::all_of(factors.begin(), factors.end(),
                                        [](const Factor &f) { return f.bare_cyclic.has_value(); });
    if (all_cyclic) {
      std::vector<Integer> orders;
      for (const auto &f : factors)
        orders.push_back(*f.bare_cyclic);
      return GroupSpec::finite_abelian(AbelianInvariants::from_cyclic_orders(orders).torsion);
    }
    std::vector<GroupSpec> specs;
    for (auto &f : factors)
      specs.push_back(std::move(f.spec));
    return GroupSpec::product(std::move(specs));
  }

  Factor factor() {
    if (in_.accept('(')) {
      GroupSpec inner = product();
      in_.expect(')');
      return {std::move(inner), std::nullopt};
    }
    if (in_.peek() == '<')
      return {presentation(), std::nullopt};
    if (in_.accept_keyword("H3"))
      return {GroupSpec::heisenberg(), std::nullopt};
    if (in_.accept_keyword("F")) {
      in_.expect('(');
      const auto n = in_.number();
      in_.expect(',');
      const auto c = in_.number();
      in_.expect(')');
      if (n == 0 || c == 0)
        throw ParseError(in_.position(), {"n >= 1 and c >= 1"},
                         "free nilpotent group F(n,c) needs n >= 1 and c >= 1");
      return {GroupSpec::free_nilpotent(static_cast<unsigned>(n), static_cast<unsigned>(c)),
              std::nullopt};
    }
    if (in_.accept_keyword("Z")) {
      if (in_.accept('^'))
        return {GroupSpec::free_abelian(static_cast<unsigned>(in_.number())), std::nullopt};
      if (in_.accept('/')) {
        const std::size_t at = in_.position();
        const Integer d = in_.number();
        if (d < 2)
          throw ParseError(at, {"integer >= 2"}, "cyclic factor Z/d needs d >= 2");
        return {GroupSpec::finite_abelian({d}), d};
      }
      return {GroupSpec::free_abelian(1), std::nullopt};
    }
    in_.fail({"H3", "F(", "Z", "<", "("});
  }

  GroupSpec presentation() {
    in_.expect('<');
    Presentation p;
    p.generator_names.push_back(in_.identifier());
    while (in_.accept(','))
      p.generator_names.push_back(in_.identifier());
    std::set<std::string> unique(p.generator_names.begin(), p.generator_names.end());
    if (unique.size() != p.generator_names.size())
      throw ParseError(in_.position(), {"distinct generator names"}, "duplicate generator name");
    p.generator_count = p.generator_names.size();
    names_ = p.generator_names;

    if (in_.accept('|') && in_.peek() != '>') {
      p.relators.push_back(word());
      while (in_.accept(','))
        p.relators.push_back(word());
    }
    in_.expect('>');
    std::optional<unsigned> declared;
    if (in_.accept_keyword("class")) {
      const auto c = in_.number();
      declared = static_cast<unsigned>(c);
    }
    return GroupSpec::presented(std::move(p), declared);
  }

  bool word_continues() {
    const char c = in_.peek();
    return c == '[' || c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Word word() {
    if (in_.accept('1'))
      return Word();
    Word w = term();
    while (word_continues())
      w = w * term();
    return w;
  }

  Word term() {
    Word a = atom();
    if (in_.accept('^'))
      a = a.pow(in_.signed_number());
    return a;
  }

  Word atom() {
    if (in_.accept('[')) {
      Word a = word();
      in_.expect(',');
      Word b = word();
      in_.expect(']');
      return Word::commutator(a, b);
    }
    if (in_.accept('(')) {
      Word inner = word();
      in_.expect(')');
      return inner;
    }
    // Juxtaposed generators: take the longest declared name at this point.
    const std::string_view rest = in_.rest();
    std::size_t best = names_.size();
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (rest.substr(0, names_[i].size()) == names_[i] &&
          (best == names_.size() || names_[i].size() > names_[best].size()))
        best = i;
    if (best == names_.size()) {
      std::vector<std::string> expected = names_;
      expected.push_back("[");
      expected.push_back("(");
      in_.fail(std::move(expected));
    }
    in_.advance(names_[best].size());
    return Word::generator(best);
  }

  Cursor in_;
  std::vector<std::string> names_;
};

bool needs_parens_in_product(const GroupSpec &g) {
  return g.get_if<DirectProduct>() || g.get_if<FiniteAbelian>();
}

std::string render_word(const Word &w, const Presentation &p) {
  if (w.empty())
    return "1";
  std::string out;
  for (const auto &l : w.letters()) {
    if (!out.empty())
      out += ' ';
    out += p.name_of(l.generator);
    if (l.exponent != 1)
      out += '^' + std::to_string(l.exponent);
  }
  return out;
}

} // namespace

GroupSpec parse_group_spec(std::string_view text) { return GroupParser(text).parse(); }

std::string render_group_spec(const GroupSpec &g) {
  return std::visit(
      [&](const auto &v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FreeNilpotent>) {
          return "F(" + std::to_string(v.n) + "," + std::to_string(v.c) + ")";
        } else if constexpr (std::is_same_v<T, Heisenberg>) {
          return "H3";
        } else if constexpr (std::is_same_v<T, FreeAbelian>) {
          return "Z^" + std::to_string(v.n);
        } else if constexpr (std::is_same_v<T, FiniteAbelian>) {
          std::string out;
          for (const auto &d : v.divisors)
            out += (out.empty() ? "Z/" : " x Z/") + d.get_str();
          return out;
        } else if constexpr (std::is_same_v<T, DirectProduct>) {
          std::string out;
          for (const auto &f : v.factors) {
            const std::string inner = render_group_spec(f);
            out += (out.empty() ? "" : " x ") +
                   (needs_parens_in_product(f) ? "(" + inner + ")" : inner);
          }
          return out;
        } else {
          const Presentation &p = v.presentation;
          std::string out = "<";
          for (std::size_t i = 0; i < p.generator_count; ++i)
            out += (i ? "," : "") + p.name_of(i);
          out += " |";
          for (std::size_t i = 0; i < p.relators.size(); ++i)
            out += (i ? ", " : " ") + render_word(p.relators[i], p);
          out += ">";
          if (v.declared_class)
            out += " class " + std::to_string(*v.declared_class);
          return out;
        }
      },
      g.value);
}

ReductiveSpec parse_reductive_spec(std::string_view text) {
  Cursor in(text);
  ReductiveSpec spec;
  do {
    const std::size_t start = (in.skip_space(), in.position());
    const std::string name = in.letters();
    if (name.empty())
      in.fail({"SL", "GL", "PGL", "Sp", "SO", "Spin", "T", "G2", "F4"});
    const auto n = static_cast<unsigned>(in.number());
    static const std::vector<std::pair<std::string, Family>> families{
        {"SL", Family::SL},     {"GL", Family::GL}, {"PGL", Family::PGL},
        {"Sp", Family::Sp},     {"SO", Family::SO}, {"Spin", Family::Spin},
        {"T", Family::Torus},   {"G", Family::G2},  {"F", Family::F4}};
    const auto it = std::find_if(families.begin(), families.end(),
                                 [&](const auto &f) { return f.first == name; });
    if (it == families.end())
      throw Error(ErrorKind::UnsupportedType, "unsupported group type '" + name +
                                                  std::to_string(n) + "' at position " +
                                                  std::to_string(start));
    spec.factors.push_back(ReductiveFactor{it->second, n});
  } while (in.accept('x'));
  if (!in.at_end())
    in.fail({"x", "end of input"});
  spec.validate();
  return spec;
}

std::string render_reductive_spec(const ReductiveSpec &spec) { return spec.to_string(); }

FiniteGroup parse_finite_group(std::string_view text) {
  Cursor in(text);
  std::optional<FiniteGroup> out;
  do {
    const std::string name = in.letters();
    if (name.empty())
      in.fail({"Q8", "C", "D", "S"});
    const auto n = in.number();
    FiniteGroup g = [&] {
      if (name == "Q" && n == 8)
        return q8();
      if (name == "C")
        return FiniteGroup::cyclic(n);
      if (name == "D")
        return FiniteGroup::dihedral(n);
      if (name == "S")
        return FiniteGroup::symmetric(n);
      throw Error(ErrorKind::UnsupportedGroup,
                  "unknown finite group '" + name + std::to_string(n) + "'");
    }();
    out = out ? FiniteGroup::direct_product(*out, g) : std::move(g);
  } while (in.accept('x'));
  if (!in.at_end())
    in.fail({"x", "end of input"});
  return *out;
}

} // namespace nilrep
