#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "aronszajn/errors.hpp"
#include "aronszajn/random_terms.hpp"
#include "aronszajn/realization.hpp"
#include "oracles.hpp"

using namespace aronszajn;

namespace {

using Seq = std::vector<std::string>;

Term T(const char* text) { return parse_term(text); }

const QuasiOrder& labels() {
  static const QuasiOrder q({"p", "q", "r", "s"}, {{"p", "r"}});
  return q;
}
const TypeAlgebra& alg() {
  static const TypeAlgebra a(labels());
  return a;
}

TermGenOptions countable(int depth) {
  TermGenOptions o;
  o.labels = {"p", "q", "r"};
  o.max_depth = depth;
  o.max_family = 2;
  o.max_parts = 2;
  o.countable_only = true;
  o.allow_reverse = true;
  return o;
}

TEST(Realize, Examples) {
  for (int d = 0; d < 4; ++d) EXPECT_EQ(realize(T("(a q)"), d).labels, Seq{"q"});
  EXPECT_EQ(realize(T("(us w (a q))"), 3).labels, (Seq{"q", "q", "q"}));
  EXPECT_EQ(realize(T("(us w (a p) (a r))"), 2).labels, (Seq{"p", "r", "p", "r"}));
  EXPECT_EQ(realize(T("(us w* (a p) (a r))"), 2).labels, (Seq{"r", "p", "r", "p"}));
  EXPECT_EQ(realize(T("(+ (a p) (rev (+ (a q) (a r))))"), 0).labels, (Seq{"p", "r", "q"}));
  EXPECT_EQ(realize(T("(sh Q (a p) (a r))"), 0).labels, (Seq{"p", "r"}));
  EXPECT_TRUE(realize(Term::zero(), 3).labels.empty());
  EXPECT_EQ(realize(T("(us w (a q))"), 0).labels, Seq{"q"});
}

TEST(Realize, RejectsUncountableBasesAndHugeOutputs) {
  EXPECT_THROW(realize(T("(sh C (a q))"), 1), Unrealizable);
  EXPECT_THROW(realize(T("(+ (a q) (us w (sh C* (a q))))"), 1), Unrealizable);
  EXPECT_THROW(realize(T("(sh Q (sh Q (sh Q (a p) (a r)) (a q)) (a s))"), 6, 1000), GuardRefusal);
}

// Golden file lines: depth <TAB> term <TAB> labels.
TEST(Realize, GoldenFiles) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/realizations.tsv");
  ASSERT_TRUE(in.good());
  std::string line;
  int checked = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string depth, term, expected;
    std::getline(row, depth, '\t');
    std::getline(row, term, '\t');
    std::getline(row, expected);
    EXPECT_EQ(to_text(realize(parse_term(term), std::stoi(depth)).labels), expected) << term;
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(Realize, NonemptyUnlessZeroAndDeterministic) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    const Term t = alg().normalize(random_term(rng, countable(4)));
    const auto a = realize(t, 2), b = realize(t, 2);
    EXPECT_EQ(a.labels, b.labels);
    EXPECT_EQ(a.labels.empty(), t.is_zero());
  }
}

TEST(Realize, TruncationMonotonicity) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 150; ++i) {
    const Term t = alg().normalize(random_term(rng, countable(4)));
    for (int d = 0; d < 3; ++d) {
      const auto a = realize(t, d), b = realize(t, d + 1);
      EXPECT_TRUE(finite_embed(labels(), a.labels, b.labels)) << to_sexpr(t) << " " << d;
    }
  }
}

TEST(FiniteEmbed, Examples) {
  EXPECT_TRUE(finite_embed(labels(), Seq{"q"}, Seq{"q"}));
  const QuasiOrder anti = QuasiOrder::antichain({"p", "r"});
  EXPECT_FALSE(finite_embed(anti, Seq{"r", "p"}, Seq{"p", "r"}));
  EXPECT_TRUE(finite_embed(labels(), Seq{"p", "p"}, Seq{"r", "q", "r"}));
  EXPECT_TRUE(finite_embed(labels(), Seq{}, Seq{}));
  EXPECT_FALSE(finite_embed(labels(), Seq{"q"}, Seq{}));
}

Seq random_seq(std::mt19937_64& rng, std::size_t max_len) {
  static const Seq names = {"p", "q", "r", "s"};
  Seq out(rng() % (max_len + 1));
  for (auto& l : out) l = names[rng() % names.size()];
  return out;
}

TEST(FiniteEmbed, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 20000; ++i) {
    const Seq a = random_seq(rng, 7), b = random_seq(rng, 7);
    EXPECT_EQ(finite_embed(labels(), a, b), oracle::embeds_exhaustive(labels(), a, b));
  }
}

TEST(FiniteEmbed, ReflexiveTransitiveAndReversalCoherent) {
  std::mt19937_64 rng(54);
  for (int i = 0; i < 3000; ++i) {
    const Seq a = random_seq(rng, 5), b = random_seq(rng, 7), c = random_seq(rng, 9);
    EXPECT_TRUE(finite_embed(labels(), a, a));
    if (finite_embed(labels(), a, b) && finite_embed(labels(), b, c)) {
      EXPECT_TRUE(finite_embed(labels(), a, c));
    }
    const Seq ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
    EXPECT_EQ(finite_embed(labels(), a, b), finite_embed(labels(), ra, rb));
  }
}

TEST(OracleCompare, Examples) {
  const TypeAlgebra q(QuasiOrder::antichain({"q"}));
  auto r = oracle_compare(q, T("(us w (a q))"), T("(us w (a q))"), 3, 6);
  EXPECT_TRUE(r.term_holds);
  EXPECT_EQ(r.found_depth, 3);
  r = oracle_compare(q, T("(a q)"), T("(sh Q (a q))"), 2, 5);
  EXPECT_TRUE(r.term_holds);
  ASSERT_TRUE(r.found_depth);
  EXPECT_LE(*r.found_depth, 2);
  r = oracle_compare(q, T("(us w (a q))"), T("(a q)"), 3, 6);
  EXPECT_FALSE(r.term_holds);
  EXPECT_FALSE(r.found_depth);
  EXPECT_FALSE(r.inconclusive);
  EXPECT_THROW(oracle_compare(q, T("(sh C (a q))"), T("(a q)"), 1, 2), Unrealizable);
}

TEST(Realization, TextRoundTrip) {
  const Seq s = {"p", "r", "p"};
  EXPECT_EQ(parse_realization(to_text(s)), s);
  EXPECT_EQ(parse_realization("  p\n r\tp "), s);
  EXPECT_TRUE(parse_realization("").empty());
  EXPECT_THROW(parse_realization("p w"), InputError);
}

}  // namespace
