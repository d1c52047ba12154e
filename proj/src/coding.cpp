#include "aronszajn/coding.hpp"

#include "aronszajn/errors.hpp"

namespace aronszajn {

LabeledTree encode(const Term& h) {
  switch (h.kind()) {
    case TermKind::kZero:
      return {};
    case TermKind::kAtom:
      return LabeledTree::leaf(h.label());
    case TermKind::kShuffle:
    case TermKind::kUnboundedSum: {
      std::vector<LabeledTree> kids;
      for (const auto& u : h.children()) kids.push_back(encode(u));
      return LabeledTree::node(std::string(symbol(h.base())), std::move(kids));
    }
    case TermKind::kSum:
      throw InputError("cannot encode a sum; decompose it first: " + to_sexpr(h));
    case TermKind::kReverse:
      throw InputError("cannot encode an unnormalized term: " + to_sexpr(h));
  }
  return {};
}

namespace {

Term decode_at(const LabeledTree& code, std::size_t v) {
  const auto& label = code.label(v);
  const auto base = parse_base(label);
  if (code.is_leaf(v)) {
    if (base) throw InputError("malformed code: leaf labeled by base symbol '" + label + "'");
    return Term::atom(label);
  }
  if (!base) throw InputError("malformed code: internal node labeled by '" + label + "'");
  std::vector<Term> summands;
  for (std::size_t c : code.children(v)) summands.push_back(decode_at(code, c));
  return is_dense(*base) ? Term::shuffle(*base, std::move(summands))
                         : Term::unbounded_sum(*base, std::move(summands));
}

}  // namespace

Term decode(const LabeledTree& code) {
  if (code.empty()) return Term::zero();
  return decode_at(code, 0);
}

SoundnessReport check_coding_soundness(const TypeAlgebra& alg, TreeOrderKind kind,
                                       const Term& a, const Term& b) {
  const Term na = alg.normalize(a);
  const Term nb = alg.normalize(b);
  SoundnessReport r;
  r.kind = kind;
  r.tree_holds = tree_leq(alg.qplus(), kind, encode(na), encode(nb));
  r.term_holds = alg.leq(na, nb);
  return r;
}

SoundnessSummary soundness_batch(const TypeAlgebra& alg,
                                 std::span<const std::pair<Term, Term>> pairs) {
  const QPlus alphabet = alg.qplus();
  SoundnessSummary out;
  for (const auto& [a, b] : pairs) {
    const Term na = alg.normalize(a);
    const Term nb = alg.normalize(b);
    const LabeledTree ca = encode(na);
    const LabeledTree cb = encode(nb);
    const bool term = alg.leq(na, nb);
    const bool s = tree_leq(alphabet, TreeOrderKind::kOrdS, ca, cb);
    const bool m = s || tree_leq(alphabet, TreeOrderKind::kOrdM, ca, cb);
    ++out.pairs;
    out.term_holds += term;
    out.tree_s_holds += s;
    out.tree_m_holds += m;
    if (s && !term) {
      ++out.violations_s;
      out.examples_s.emplace_back(na, nb);
    }
    if (m && !term) {
      ++out.violations_m;
      out.examples_m.emplace_back(na, nb);
    }
  }
  return out;
}

namespace {

std::size_t bound_of(const TypeAlgebra& alg, const Term& t) {
  switch (t.kind()) {
    case TermKind::kZero: return 0;
    case TermKind::kAtom: return 1;
    case TermKind::kSum: {
      std::size_t total = 0;
      for (const auto& p : t.children()) total += bound_of(alg, p);
      return total;
    }
    case TermKind::kShuffle:
    case TermKind::kUnboundedSum: {
      std::size_t total = 0;
      for (const auto& m : alg.maximal_antichain(t.children())) total += bound_of(alg, m);
      return total;
    }
    case TermKind::kReverse: break;
  }
  return 0;
}

}  // namespace

std::size_t ramsey_bound(const TypeAlgebra& alg, const Term& t) {
  return bound_of(alg, alg.normalize(t));
}

}  // namespace aronszajn
