#include "ordlib/braid/garside.hpp"
#include "ordlib/cli/parse.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ordlib;
using namespace ordlib::cli;
using braid::BraidWord;

namespace {

WordExpr randomExpr(std::mt19937_64& rng, int strands, int depth) {
  std::uniform_int_distribution<int> terms(1, 3);
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 3 : 2);
  std::uniform_int_distribution<int> idx(1, strands - 1);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::bernoulli_distribution coin(0.5);
  WordExpr e;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) {
    Term t;
    const int k = kind(rng);
    if (k <= 1) {
      t.kind = Term::Kind::Generator;
      t.index = idx(rng);
    } else if (k == 2) {
      t.kind = coin(rng) ? Term::Kind::Delta : Term::Kind::Delta2;
    } else {
      t.kind = Term::Kind::Group;
      t.group = randomExpr(rng, strands, depth - 1);
    }
    if (coin(rng)) {
      t.hasExponent = true;
      t.exponent = exp(rng);
    }
    e.push_back(std::move(t));
  }
  return e;
}

std::size_t syntaxErrorAt(const std::string& text, int strands = 3) {
  try {
    parseWord(text, strands);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no syntax error for '" << text << "'";
  return 0;
}

}  // namespace

TEST(Parse, Examples) {
  EXPECT_TRUE(braid::equal(parseBraid("(s1 s2)^3", 3), braid::deltaSquared(3)));
  EXPECT_EQ(parseBraid("s1^-1", 2), BraidWord(2, {-1}));
  EXPECT_EQ(parseBraid("s1^-2 s2", 3), BraidWord(3, {-1, -1, 2}));
  EXPECT_EQ(parseBraid("Delta", 4), braid::delta(4));
  EXPECT_EQ(parseBraid("Delta2 s1", 3), braid::multiply(braid::deltaSquared(3), BraidWord(3, {1})));
  EXPECT_TRUE(parseBraid("Delta2^0", 3).empty());
  EXPECT_TRUE(parseBraid("  s1 s1^-1  ", 3).empty());
  EXPECT_TRUE(braid::equal(parseBraid("Delta^2", 5), parseBraid("Delta2", 5)));
  EXPECT_TRUE(braid::equal(parseBraid("((s1 s2^-1)^2 Delta)^-3", 3),
                           braid::power(braid::multiply(BraidWord(3, {1, -2, 1, -2}), braid::delta(3)), -3)));
}

TEST(Parse, IndexOutOfRange) {
  try {
    parseWord("s1 s5", 3);
    FAIL();
  } catch (const IndexOutOfRange& e) {
    EXPECT_EQ(e.index(), 5);
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parseWord("s0", 3), IndexOutOfRange);
  EXPECT_THROW(parseWord("s2", 2), IndexOutOfRange);
}

TEST(Parse, SyntaxErrors) {
  EXPECT_EQ(syntaxErrorAt(""), 0u);
  EXPECT_EQ(syntaxErrorAt("s"), 1u);
  EXPECT_EQ(syntaxErrorAt("s1^"), 3u);
  EXPECT_EQ(syntaxErrorAt("(s1"), 3u);
  EXPECT_EQ(syntaxErrorAt("s1)"), 2u);
  EXPECT_EQ(syntaxErrorAt("s1s2"), 2u);
  EXPECT_EQ(syntaxErrorAt("s1 ^2"), 3u);
  EXPECT_EQ(syntaxErrorAt("x1"), 0u);
  EXPECT_EQ(syntaxErrorAt("s-1"), 1u);
  EXPECT_EQ(syntaxErrorAt("Delta3"), 5u);
  EXPECT_EQ(syntaxErrorAt("()"), 1u);
  EXPECT_EQ(syntaxErrorAt("s1^99999999999999999999"), 3u);
}

TEST(Parse, LengthCap) {
  EXPECT_THROW(parseBraid("s1^99999999999", 3), ResourceLimitError);
  EXPECT_THROW(parseBraid("(Delta2^100000)^100000", 3), ResourceLimitError);
  EXPECT_THROW(parseBraid("s1^-9223372036854775808", 3), ResourceLimitError);
}

TEST(Parse, PrintedExpressionsRoundTrip) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 4;
    WordExpr e = randomExpr(rng, n, 2);
    const std::string text = toString(e);
    WordExpr back = parseWord(text, n);
    EXPECT_EQ(back, e) << text;
    EXPECT_TRUE(braid::equal(elaborate(back, n), elaborate(e, n))) << text;
  }
  for (int t = 0; t < 300; ++t) {
    BraidWord w = gen::randomWord(rng, 4, 12, 1);
    if (w.empty()) continue;  // printed as "e", which is not a WORD
    EXPECT_EQ(parseBraid(braid::toString(w), 4), w);
  }
}
