// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "aronszajn/algebra.hpp"
#include "aronszajn/coding.hpp"
#include "aronszajn/decomposition.hpp"
#include "aronszajn/errors.hpp"
#include "aronszajn/labeled_tree.hpp"
#include "aronszajn/random_terms.hpp"
#include "aronszajn/realization.hpp"
#include "oracles.hpp"

using namespace aronszajn;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < limit_s;
  const bool pass = o.ok && in_time;
  failures += !pass;
  std::printf("%s %s  %s  [%.2fs / limit %.0fs%s]  %s\n", id, pass ? "PASS" : "FAIL", title, secs,
              limit_s, in_time ? "" : ", too slow", o.detail.c_str());
  std::fflush(stdout);
}

Term T(const char* text) { return parse_term(text); }

// Runs f(i) for i in [0, n) on all cores.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

Outcome ac1() {
  const TypeAlgebra alg(QuasiOrder::antichain({"p", "q", "r", "u"}));
  Outcome o;
  const std::size_t alternation = ramsey_bound(alg, T("(us w (sh C (a u)) (sh C* (a u)))"));
  const std::size_t atom = ramsey_bound(alg, T("(a q)"));
  o.ok = alternation == 2 && atom == 1;
  std::mt19937_64 rng(101);
  const std::vector<std::string> names = {"p", "q", "r", "u"};
  int sums = 0;
  for (std::size_t k = 2; k <= 12; ++k) {
    for (int rep = 0; rep < 5; ++rep) {
      std::vector<Term> parts;
      for (std::size_t i = 0; i < k; ++i) parts.push_back(Term::atom(names[rng() % names.size()]));
      o.ok = o.ok && ramsey_bound(alg, Term::sum(parts)) == k;
      ++sums;
    }
  }
  o.detail = "alternation=" + std::to_string(alternation) + " atom=" + std::to_string(atom) +
             " sums_of_k_atoms=" + std::to_string(sums) + " checked";
  return o;
}

Outcome ac2() {
  const TypeAlgebra alg;
  Outcome o;
  for (const char* b : {"C", "C*", "Q"}) {
    const std::string l = std::string("(sh ") + b + " (a u))";
    const std::string l2 = std::string("(sh ") + b + " " + l + ")";
    const bool eq = alg.equiv(parse_term(l), parse_term(l2));
    o.ok = o.ok && eq;
    o.detail += std::string(b) + "^2==" + b + ":" + (eq ? "true " : "false ");
  }
  return o;
}

Outcome ac3() {
  const TypeAlgebra alg;
  Outcome o;
  int checks = 0;
  for (int n = 0; n <= 6; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (Sign s : {Sign::kPlus, Sign::kMinus}) {
        ++checks;
        if (!alg.leq(d_line(m, s), d_line(n, s))) {
          o.ok = false;
          o.detail += "chain broken at " + std::to_string(m) + "," + std::to_string(n) + " ";
        }
      }
    }
    ++checks;
    if (alg.leq(d_line(n, Sign::kPlus), d_line(n, Sign::kMinus))) {
      o.ok = false;
      o.detail += "D+" + std::to_string(n) + "<=D-" + std::to_string(n) + " ";
    }
  }
  o.detail += std::to_string(checks) + " relations checked";
  return o;
}

Outcome ac4() {
  const TypeAlgebra alg(QuasiOrder({"p", "q", "r"}, {{"p", "r"}}));
  TermGenOptions gen;
  gen.labels = {"p", "q", "r"};
  gen.max_depth = 4;
  gen.allow_reverse = true;
  gen.allow_zero = true;
  std::mt19937_64 rng(104);
  std::size_t bad = 0, pieces = 0;
  std::string first;
  for (int i = 0; i < 500; ++i) {
    const Term t = random_term(rng, gen);
    const Decomposition d = decompose(alg, t);
    bool good = d.certified() && alg.equiv(t, sum_of(d.pieces));
    for (const auto& p : d.pieces) good = good && is_h_member(p) && alg.is_ai(p);
    pieces += d.pieces.size();
    if (!good) {
      ++bad;
      if (first.empty()) first = " first: " + to_sexpr(t);
    }
  }
  return {bad == 0, "500 terms, " + std::to_string(pieces) + " pieces, " + std::to_string(bad) +
                        " failures" + first};
}

Outcome ac5() {
  const TypeAlgebra alg(QuasiOrder({"p", "q", "r"}, {{"p", "r"}}));
  TermGenOptions gen;
  gen.labels = {"p", "q", "r"};
  gen.max_depth = 3;
  gen.allow_sum = false;
  std::mt19937_64 rng(105);
  std::vector<std::pair<Term, Term>> pairs;
  for (int i = 0; i < 500; ++i) pairs.push_back(random_related_pair(rng, gen));
  const SoundnessSummary s = soundness_batch(alg, pairs);

  gen.max_depth = 4;
  std::size_t roundtrip_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const Term h = alg.normalize(random_term(rng, gen));
    if (!alg.equiv(decode(encode(h)), h)) ++roundtrip_bad;
  }
  std::ostringstream d;
  d << "500 pairs: term<= " << s.term_holds << ", codes<=s " << s.tree_s_holds << ", codes<=m "
    << s.tree_m_holds << "; violations s=" << s.violations_s << " m=" << s.violations_m
    << "; roundtrip failures " << roundtrip_bad << "/200";
  if (!s.examples_s.empty()) {
    d << "; first s-violation " << to_sexpr(s.examples_s[0].first) << " vs "
      << to_sexpr(s.examples_s[0].second);
  }
  if (!s.examples_m.empty()) {
    d << "; first m-violation " << to_sexpr(s.examples_m[0].first) << " vs "
      << to_sexpr(s.examples_m[0].second);
  }
  return {s.violations_s == 0 && s.violations_m == 0 && roundtrip_bad == 0, d.str()};
}

Outcome ac6() {
  const QPlus q(QuasiOrder::chain({"p", "r"}));
  const auto trees = all_labeled_trees(5, {"p", "r"});
  constexpr TreeOrderKind kinds[] = {TreeOrderKind::kOrd1, TreeOrderKind::kOrdI,
                                     TreeOrderKind::kOrdS, TreeOrderKind::kOrdM};
  std::atomic<std::size_t> mismatches{0}, positives{0};
  parallel_for(trees.size(), [&](std::size_t i) {
    std::size_t bad = 0, pos = 0;
    for (const auto& t : trees) {
      for (auto k : kinds) {
        const bool fast = tree_leq(q, k, trees[i], t);
        bad += fast != brute_force_tree_leq(q, k, trees[i], t);
        pos += fast;
      }
    }
    mismatches += bad;
    positives += pos;
  });

  const QPlus q3(QuasiOrder({"p", "r", "s"}, {{"p", "r"}}));
  std::mt19937_64 rng(106);
  std::size_t implication_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const LabeledTree s = random_tree(rng, {"p", "r", "s"}, 7);
    const LabeledTree t = rng() % 3 == 0 ? s : random_tree(rng, {"p", "r", "s"}, 8);
    const bool ii = tree_leq(q3, TreeOrderKind::kOrdI, s, t);
    const bool one = tree_leq(q3, TreeOrderKind::kOrd1, s, t);
    const bool st = tree_leq(q3, TreeOrderKind::kOrdS, s, t);
    const bool m = tree_leq(q3, TreeOrderKind::kOrdM, s, t);
    implication_bad += (ii && !one) + (one && !m) + (st && !m);
  }
  const std::size_t pairs = trees.size() * trees.size();
  return {mismatches == 0 && implication_bad == 0,
          std::to_string(trees.size()) + " trees, " + std::to_string(pairs) + " pairs x 4 kinds, " +
              std::to_string(positives.load()) + " related, " + std::to_string(mismatches.load()) +
              " mismatches; implication failures " + std::to_string(implication_bad) + "/1000"};
}

Outcome ac7() {
  const QPlus anti(QuasiOrder::antichain({"p", "r", "u"}));
  const QPlus chain(QuasiOrder::chain({"p", "r", "s"}));
  struct Family {
    const QPlus* q;
    std::vector<const char*> trees;
    std::size_t expected;
  };
  const std::vector<Family> curated = {
      {&anti, {"(u (p) (r))"}, 2},
      {&chain, {"(p (r (s)))"}, 1},
      {&chain, {"(p (p))", "(r (s (s (s))))", "(s)"}, 1},
      {&chain, {"(s (p) (r))"}, 1},
      {&chain, {"(p (s) (r))"}, 1},
      {&anti, {"(u (p (u)) (p) (r (u) (r)))"}, 2},
      {&anti, {"(u (u) (u) (u))"}, 1},
      {&anti, {"(u (p) (r))", "(u (u (p) (r) (u)))"}, 2},
      {&anti, {"(u (p) (r) (u (p (r))))"}, 1},
      {&anti, {"(w (p) (r) (u))"}, 3},
      {&anti, {"(p)", "(r (r))"}, 1},
  };
  Outcome o;
  std::size_t validated = 0;
  for (const auto& f : curated) {
    std::vector<LabeledTree> family;
    for (const char* t : f.trees) family.push_back(parse_tree(t));
    const std::size_t n = minimal_cover_number(*f.q, family);
    const std::size_t brute = oracle::min_cover_naive(*f.q, family);
    const auto c = find_cover(*f.q, family, n);
    const bool valid = c && validate_cover(*f.q, family, *c);
    validated += valid;
    if (n != f.expected || n != brute || !valid) {
      o.ok = false;
      o.detail += std::string("mismatch on family starting ") + f.trees[0] + " (n=" + std::to_string(n) +
                  " brute=" + std::to_string(brute) + ") ";
    }
  }
  std::mt19937_64 rng(107);
  std::size_t random_bad = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<LabeledTree> family;
    for (int k = 0; k < 1 + static_cast<int>(rng() % 3); ++k) {
      family.push_back(random_tree(rng, {"p", "r", "u"}, 7));
    }
    const std::size_t n = minimal_cover_number(anti, family);
    const auto c = find_cover(anti, family, n);
    if (n != oracle::min_cover_naive(anti, family) || !c || !validate_cover(anti, family, *c)) {
      ++random_bad;
    }
  }
  o.ok = o.ok && random_bad == 0;
  o.detail += std::to_string(curated.size()) + " curated families (" + std::to_string(validated) +
              " covers re-validated), 200 random families, " + std::to_string(random_bad) +
              " random failures";
  return o;
}

Outcome ac8() {
  const QuasiOrder labels({"p", "q", "r"}, {{"p", "r"}});
  const TypeAlgebra alg(labels);
  TermGenOptions gen;
  gen.labels = {"p", "q", "r"};
  gen.max_depth = 3;
  gen.max_family = 2;
  gen.max_parts = 2;
  gen.countable_only = true;
  gen.allow_reverse = true;
  std::mt19937_64 rng(108);
  constexpr int kDepth = 3, kCap = kDepth + 3;

  std::vector<std::pair<Term, Term>> pairs;
  std::size_t drawn = 0;
  while (pairs.size() < 200) {
    auto [s, t] = random_related_pair(rng, gen);
    ++drawn;
    if (alg.leq(s, t)) pairs.emplace_back(s, t);
  }
  std::vector<OracleReport> reports(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    reports[i] = oracle_compare(alg, pairs[i].first, pairs[i].second, kDepth, kCap);
  });
  std::size_t found = 0, flags = 0;
  std::vector<int> at(kCap + 1, 0);
  std::string first_flag;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (reports[i].found_depth) {
      ++found;
      ++at[*reports[i].found_depth];
    } else {
      ++flags;
      if (first_flag.empty()) {
        first_flag = "; first flag " + to_sexpr(pairs[i].first) + " vs " +
                     to_sexpr(pairs[i].second) + " (" + reports[i].note + ")";
      }
    }
  }

  // All distinct realizations of length ≤ 7 reachable from the sampled terms.
  std::set<std::vector<std::string>> short_ones;
  for (const auto& [s, t] : pairs) {
    for (const Term& x : {s, t}) {
      for (int d = 0; d <= 3; ++d) {
        try {
          const auto r = realize(alg.normalize(x), d, 64);
          if (r.labels.size() <= 7) short_ones.insert(r.labels);
        } catch (const GuardRefusal&) {
        }
      }
    }
  }
  const std::vector<std::vector<std::string>> pool(short_ones.begin(), short_ones.end());
  std::size_t embed_bad = 0;
  for (const auto& a : pool) {
    for (const auto& b : pool) embed_bad += finite_embed(labels, a, b) != oracle::embeds_exhaustive(labels, a, b);
  }

  std::ostringstream d;
  d << "200 related pairs (" << drawn << " drawn); found " << found << ", flags " << flags
    << "; found at D=";
  for (int k = kDepth; k <= kCap; ++k) d << (k > kDepth ? "/" : "") << at[k];
  d << "; finite_embed vs exhaustive on " << pool.size() << "^2 realization pairs: " << embed_bad
    << " mismatches" << first_flag;
  return {flags == 0 && embed_bad == 0, d.str()};
}

Outcome ac9() {
  const TypeAlgebra alg(QuasiOrder({"p", "q", "r"}, {{"p", "r"}}));
  TermGenOptions gen;
  gen.labels = {"p", "q", "r"};
  gen.max_depth = 4;
  gen.allow_reverse = true;
  std::mt19937_64 rng(109);
  std::size_t refl = 0, trans = 0, chains = 0, dual = 0, idem = 0, split = 0, ai = 0;
  for (int i = 0; i < 300; ++i) {
    const Term x = random_term(rng, gen);
    const Term y = random_neighbor(rng, gen, x);
    const Term z = random_neighbor(rng, gen, y);
    refl += !alg.leq(x, x);
    if (alg.leq(x, y) && alg.leq(y, z)) {
      ++chains;
      trans += !alg.leq(x, z);
    }
    dual += alg.leq(x, y) != alg.leq(alg.normalize(Term::reverse(x)), alg.normalize(Term::reverse(y)));
    const Term nf = alg.normalize(x);
    idem += alg.normalize(nf) != nf;
    const Term s = alg.normalize(y);
    if (alg.is_ai(s)) {
      ++ai;
      const bool lhs = alg.leq(s, Term::sum({x, z}));
      split += lhs != (alg.leq(s, x) || alg.leq(s, z));
    }
  }
  const std::size_t total = refl + trans + dual + idem + split;
  std::ostringstream d;
  d << "300 triples; failures: reflexivity " << refl << ", transitivity " << trans << " (of " << chains
    << " chains), duality " << dual << ", idempotence " << idem << ", AI splitting " << split
    << " (of " << ai << ")";
  return {total == 0, d.str()};
}

}  // namespace

int main() {
  criterion("AC1", "Ramsey anchor", 1, ac1);
  criterion("AC2", "Idempotent bases", 1, ac2);
  criterion("AC3", "D-line lattice", 10, ac3);
  criterion("AC4", "Decomposition suite", 60, ac4);
  criterion("AC5", "Coding soundness", 60, ac5);
  criterion("AC6", "Tree-order kernel", 120, ac6);
  criterion("AC7", "Covering", 30, ac7);
  criterion("AC8", "Oracle agreement", 120, ac8);
  criterion("AC9", "Algebraic laws", 60, ac9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
