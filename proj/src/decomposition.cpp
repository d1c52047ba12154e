#include "aronszajn/decomposition.hpp"

#include "aronszajn/errors.hpp"

namespace aronszajn {

Decomposition decompose(const TypeAlgebra& alg, const Term& t) {
  Decomposition d;
  d.input = t;
  const Term n = alg.normalize(t);
  if (n.kind() == TermKind::kSum) {
    d.pieces.assign(n.children().begin(), n.children().end());
  } else if (!n.is_zero()) {
    d.pieces.push_back(n);
  }
  const Term whole = sum_of(d.pieces);
  d.input_below_sum = alg.leq(t, whole);
  d.sum_below_input = alg.leq(whole, t);
  return d;
}

Term strictify(const TypeAlgebra& alg, const Term& t) {
  const Term n = alg.normalize(t);
  if (n.kind() != TermKind::kShuffle) {
    throw InputError("strictify needs a shuffle over Q, C or C*, got " + to_sexpr(n));
  }
  // Normal-form summands already form the maximal antichain.
  if (n.children().size() == 1) return n;
  std::vector<Term> antichain(n.children().begin(), n.children().end());
  return Term::shuffle(n.base(), {Term::sum(std::move(antichain))});
}

}  // namespace aronszajn
