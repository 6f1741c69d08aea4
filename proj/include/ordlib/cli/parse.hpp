#pragma once

// Braid word text:
//   WORD := TERM+    TERM := ATOM ['^' INT]
//   ATOM := 's' INT | 'Delta' | 'Delta2' | '(' WORD ')'    INT := '-'? [0-9]+
// Terms are separated by whitespace; indices are 1-based.

#include "ordlib/braid/word.hpp"
#include "ordlib/errors.hpp"

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace ordlib::cli {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

class IndexOutOfRange : public ParseError {
 public:
  IndexOutOfRange(std::int64_t index, int strands, std::size_t position)
      : ParseError("generator s" + std::to_string(index) + " out of range for " + std::to_string(strands) +
                       " strands",
                   position),
        index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

struct Term;
using WordExpr = std::vector<Term>;

struct Term {
  enum class Kind { Generator, Delta, Delta2, Group };
  Kind kind = Kind::Generator;
  int index = 0;            // Generator
  WordExpr group;           // Group
  bool hasExponent = false;
  std::int64_t exponent = 1;

  friend bool operator==(const Term&, const Term&) = default;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, int strands) : text_(text), strands_(strands) {}

  WordExpr parseAll() {
    skipSpace();
    WordExpr w = word();
    skipSpace();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  bool atEnd() const { return pos_ >= text_.size(); }
  bool isSpace() const { return !atEnd() && std::isspace(static_cast<unsigned char>(text_[pos_])); }
  void skipSpace() {
    while (isSpace()) ++pos_;
  }

  WordExpr word() {
    WordExpr w;
    w.push_back(term());
    for (;;) {
      const std::size_t before = pos_;
      skipSpace();
      if (atEnd() || text_[pos_] == ')') break;
      if (pos_ == before) fail("expected whitespace between terms");
      w.push_back(term());
    }
    return w;
  }

  Term term() {
    Term t = atom();
    if (!atEnd() && text_[pos_] == '^') {
      ++pos_;
      t.hasExponent = true;
      t.exponent = integer();
    }
    return t;
  }

  Term atom() {
    if (atEnd()) fail("expected a term");
    Term t;
    const std::size_t start = pos_;
    if (text_.substr(pos_, 6) == "Delta2") {
      t.kind = Term::Kind::Delta2;
      pos_ += 6;
    } else if (text_.substr(pos_, 5) == "Delta") {
      t.kind = Term::Kind::Delta;
      pos_ += 5;
    } else if (text_[pos_] == 's') {
      ++pos_;
      if (atEnd() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected generator index");
      const std::int64_t i = integer();
      if (i < 1 || i >= strands_) throw IndexOutOfRange(i, strands_, start);
      t.kind = Term::Kind::Generator;
      t.index = static_cast<int>(i);
    } else if (text_[pos_] == '(') {
      ++pos_;
      skipSpace();
      t.kind = Term::Kind::Group;
      t.group = word();
      skipSpace();
      if (atEnd() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
    } else {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return t;
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (!atEnd() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, v);
    if (ec != std::errc() || ptr != text_.data() + pos_) throw SyntaxError("integer out of range", start);
    return v;
  }

  std::string_view text_;
  int strands_;
  std::size_t pos_ = 0;
};

inline std::int64_t checkedMul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceLimitError("word length overflow");
  return r;
}

}  // namespace detail

/// Letters produced by elaborating e; elaborate refuses anything longer.
inline constexpr std::int64_t kMaxElaboratedLength = std::int64_t{1} << 22;

inline WordExpr parseWord(std::string_view text, int strands) {
  if (strands < 2) throw InvalidBraid("braid groups need at least 2 strands");
  return detail::Parser(text, strands).parseAll();
}

/// Letter count before free reduction.
inline std::int64_t rawLength(const WordExpr& e, int strands) {
  std::int64_t total = 0;
  for (const Term& t : e) {
    std::int64_t base = 0;
    switch (t.kind) {
      case Term::Kind::Generator: base = 1; break;
      case Term::Kind::Delta: base = std::int64_t{strands} * (strands - 1) / 2; break;
      case Term::Kind::Delta2: base = std::int64_t{strands} * (strands - 1); break;
      case Term::Kind::Group: base = rawLength(t.group, strands); break;
    }
    if (t.exponent == std::numeric_limits<std::int64_t>::min()) throw ResourceLimitError("exponent out of range");
    const std::int64_t reps = t.exponent < 0 ? -t.exponent : t.exponent;
    total += detail::checkedMul(base, reps);
    if (total > kMaxElaboratedLength) {
      throw ResourceLimitError("word longer than " + std::to_string(kMaxElaboratedLength) + " letters");
    }
  }
  return total;
}

inline braid::BraidWord elaborate(const WordExpr& e, int strands) {
  rawLength(e, strands);
  braid::BraidWord out(strands);
  for (const Term& t : e) {
    braid::BraidWord base(strands);
    switch (t.kind) {
      case Term::Kind::Generator: base = braid::generator(strands, t.index); break;
      case Term::Kind::Delta: base = braid::delta(strands); break;
      case Term::Kind::Delta2: base = braid::deltaSquared(strands); break;
      case Term::Kind::Group: base = elaborate(t.group, strands); break;
    }
    out = braid::multiply(out, braid::power(base, t.exponent));
  }
  return out;
}

inline braid::BraidWord parseBraid(std::string_view text, int strands) {
  return elaborate(parseWord(text, strands), strands);
}

inline std::string toString(const WordExpr& e) {
  std::string s;
  for (const Term& t : e) {
    if (!s.empty()) s += ' ';
    switch (t.kind) {
      case Term::Kind::Generator: s += "s" + std::to_string(t.index); break;
      case Term::Kind::Delta: s += "Delta"; break;
      case Term::Kind::Delta2: s += "Delta2"; break;
      case Term::Kind::Group: s += "(" + toString(t.group) + ")"; break;
    }
    if (t.hasExponent) s += "^" + std::to_string(t.exponent);
  }
  return s;
}

}  // namespace ordlib::cli
