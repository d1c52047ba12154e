#include <gtest/gtest.h>

#include <random>

#include "aronszajn/coding.hpp"
#include "aronszajn/errors.hpp"
#include "aronszajn/random_terms.hpp"

using namespace aronszajn;

namespace {

Term T(const char* text) { return parse_term(text); }

const TypeAlgebra& alg() {
  static const TypeAlgebra a(QuasiOrder::antichain({"q", "r", "u"}));
  return a;
}

TermGenOptions h_opts(int depth) {
  TermGenOptions o;
  o.labels = {"q", "r", "u"};
  o.max_depth = depth;
  o.allow_sum = false;
  return o;
}

TEST(Encode, Examples) {
  EXPECT_EQ(to_sexpr(encode(T("(a q)"))), "(q)");
  EXPECT_TRUE(encode(Term::zero()).empty());
  EXPECT_EQ(to_sexpr(encode(T("(us w (a q) (a r))"))), "(w (q) (r))");
  EXPECT_EQ(to_sexpr(encode(T("(sh C* (us w* (a u)))"))), "(C* (w* (u)))");
  EXPECT_THROW(encode(T("(+ (a q) (a q))")), InputError);
  EXPECT_THROW(encode(T("(rev (a q))")), InputError);
}

TEST(Decode, Examples) {
  EXPECT_EQ(decode(parse_tree("(q)")), T("(a q)"));
  EXPECT_EQ(decode(parse_tree("(C (u))")), d_line(0, Sign::kPlus));
  EXPECT_EQ(decode(parse_tree("()")), Term::zero());
  EXPECT_EQ(decode(parse_tree("(w* (q) (Q (r)))")), T("(us w* (a q) (sh Q (a r)))"));
  EXPECT_THROW(decode(parse_tree("(q (r))")), InputError);
  EXPECT_THROW(decode(parse_tree("(C)")), InputError);
}

TEST(Coding, RoundTrips) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    const Term h = alg().normalize(random_term(rng, h_opts(4)));
    ASSERT_TRUE(is_h_member(h));
    const LabeledTree code = encode(h);
    EXPECT_EQ(decode(code), h);
    EXPECT_TRUE(alg().equiv(decode(code), h));
    EXPECT_EQ(encode(decode(code)), code);
  }
}

TEST(Coding, SoundnessExamples) {
  auto r = check_coding_soundness(alg(), TreeOrderKind::kOrdS, T("(a q)"), T("(a q)"));
  EXPECT_TRUE(r.tree_holds && r.term_holds && !r.violation());
  r = check_coding_soundness(alg(), TreeOrderKind::kOrdS, T("(a q)"), T("(sh C (a q))"));
  EXPECT_TRUE(r.tree_holds);
  EXPECT_TRUE(r.term_holds);
  EXPECT_TRUE(brute_force_tree_leq(alg().qplus(), TreeOrderKind::kOrdS, encode(T("(a q)")),
                                   encode(T("(sh C (a q))"))));
}

// Strict monotonicity on codes implies embeddability of the terms.
TEST(Coding, StrictOrderIsSound) {
  std::mt19937_64 rng(32);
  std::vector<std::pair<Term, Term>> pairs;
  for (int i = 0; i < 800; ++i) pairs.push_back(random_related_pair(rng, h_opts(3)));
  const SoundnessSummary s = soundness_batch(alg(), pairs);
  EXPECT_EQ(s.violations_s, 0u);
  EXPECT_GT(s.tree_s_holds, 200u);
}

// Weakly monotone maps on codes may collapse two nested unbounded sums of
// the same direction onto one, while ω·ω does not embed into ω. The weak
// order on codes is therefore not sound for the term order.
TEST(Coding, WeakOrderCollapsesNestedOmegaSums) {
  const Term a = T("(us w (us w (a u)))"), b = T("(us w (a u))");
  const auto r = check_coding_soundness(alg(), TreeOrderKind::kOrdM, a, b);
  EXPECT_TRUE(r.tree_holds);
  EXPECT_FALSE(r.term_holds);
  EXPECT_FALSE(check_coding_soundness(alg(), TreeOrderKind::kOrdS, a, b).tree_holds);
}

TEST(RamseyBound, Examples) {
  EXPECT_EQ(ramsey_bound(alg(), T("(us w (sh C (a u)) (sh C* (a u)))")), 2u);
  EXPECT_EQ(ramsey_bound(alg(), T("(a q)")), 1u);
  EXPECT_EQ(ramsey_bound(alg(), T("(sh Q (a u))")), 1u);
  EXPECT_EQ(ramsey_bound(alg(), Term::zero()), 0u);
  EXPECT_EQ(ramsey_bound(alg(), T("(+ (a q) (a r) (a q) (a u))")), 4u);
  EXPECT_EQ(ramsey_bound(alg(), T("(sh Q (a q) (a r))")), 2u);
  EXPECT_EQ(ramsey_bound(alg(), T("(sh C (sh C (a u)))")), 1u);
}

TEST(RamseyBound, AtMostTreetopsOfCode) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    const Term h = alg().normalize(random_term(rng, h_opts(4)));
    EXPECT_LE(ramsey_bound(alg(), h), treetops(encode(h))) << to_sexpr(h);
  }
}

TEST(RamseyBound, AdditiveOverSums) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 200; ++i) {
    const Term a = random_term(rng, h_opts(3)), b = random_term(rng, h_opts(3));
    EXPECT_EQ(ramsey_bound(alg(), Term::sum({a, b})), ramsey_bound(alg(), a) + ramsey_bound(alg(), b));
  }
}

}  // namespace
