#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "aronszajn/algebra.hpp"
#include "aronszajn/labeled_tree.hpp"
#include "aronszajn/term.hpp"

namespace aronszajn {

/// Code tree of a normalized Sum-free term: 0 is the empty tree, an atom is a
/// one-node tree with its label, and an L-shuffle or L-unbounded sum of U is
/// a root labeled by the symbol of L whose children are the codes of U.
/// Throws InputError on a Sum or Rev node.
LabeledTree encode(const Term& h);

/// Inverse of `encode` up to equivalence. Throws InputError when a leaf
/// carries a base symbol or an internal node carries a plain label.
Term decode(const LabeledTree& code);

struct SoundnessReport {
  TreeOrderKind kind = TreeOrderKind::kOrdS;
  bool tree_holds = false;
  bool term_holds = false;
  /// The codes compare but the terms do not.
  bool violation() const { return tree_holds && !term_holds; }
};

/// Compares encode(a) with encode(b) under `kind` against alg.leq(a, b).
SoundnessReport check_coding_soundness(const TypeAlgebra& alg, TreeOrderKind kind,
                                       const Term& a, const Term& b);

struct SoundnessSummary {
  std::size_t pairs = 0;
  std::size_t term_holds = 0;
  std::size_t tree_s_holds = 0;
  std::size_t tree_m_holds = 0;
  std::size_t violations_s = 0;
  std::size_t violations_m = 0;
  /// Offending pairs, ≤_s first.
  std::vector<std::pair<Term, Term>> examples_s;
  std::vector<std::pair<Term, Term>> examples_m;
};

/// Runs check_coding_soundness for ≤_s and ≤_m over every pair.
SoundnessSummary soundness_batch(const TypeAlgebra& alg,
                                 std::span<const std::pair<Term, Term>> pairs);

/// Upper bound on the big Ramsey degree: 0 ↦ 0, atom ↦ 1, sums add, and an
/// indexed sum adds the bounds of the maximal antichain of its summands.
std::size_t ramsey_bound(const TypeAlgebra& alg, const Term& t);

}  // namespace aronszajn
