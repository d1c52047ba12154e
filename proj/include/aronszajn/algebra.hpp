#pragma once

#include <span>
#include <string>
#include <vector>

#include "aronszajn/base_order.hpp"
#include "aronszajn/quasi_order.hpp"
#include "aronszajn/term.hpp"

namespace aronszajn {

/// The order-type algebra over a fixed label alphabet and base table.
///
/// Normal form: no Rev node, no Zero inside a Sum or summand family, no Sum
/// directly under a Sum, and every summand family is flattened (Sum summands
/// are replaced by their parts) and reduced to a maximal antichain under
/// `leq`. In normal form a Sum can only occur at the top of a term, and every
/// Sum part is an atom, a shuffle or an unbounded sum.
///
/// `leq` decides embeddability on normal forms by the following rules, with
/// memoization over term pairs:
///
///   * 0 embeds into everything; only 0 embeds into 0.
///   * Both sides are split into their summands ("pieces"), each of which is
///     algebraically indecomposable. Any embedding places each source piece
///     inside one target piece, so s <= t iff consecutive blocks of source
///     pieces can be assigned, in order, to target pieces that absorb them.
///     A target piece absorbs one source piece p iff p <= target; it absorbs
///     a longer block iff
///       - for a shuffle target: every piece embeds into the target;
///       - for an ω-sum target: every piece but the last embeds into a single
///         summand and the last embeds into the target (ω* mirrored);
///       - for an atom target: never.
///   * atom <= atom by the label order; atom <= indexed sum iff it embeds
///     into some summand; an infinite piece never embeds into an atom.
///   * For s = L₁-sum of U₁ and t = L₂-sum of U₂:
///       s <= t iff s <= u₂ for some u₂ in U₂, or L₁ <= L₂ and
///         - (L₂ dense) every u₁ in U₁ embeds into t, or
///         - (L₂ ∈ {ω, ω*}) every u₁ in U₁ embeds into some u₂ in U₂.
///
/// All members are const and the decision memo is per call, so one instance
/// may be shared between threads.
class TypeAlgebra {
 public:
  explicit TypeAlgebra(QuasiOrder labels = QuasiOrder::unit(),
                       BaseTable table = BaseTable::standard());

  const QuasiOrder& labels() const { return labels_; }
  const BaseTable& bases() const { return table_; }
  /// Q⁺ over the same alphabet and table, for code trees.
  QPlus qplus() const { return QPlus(labels_, table_); }

  /// Throws InputError if an atom label is outside the alphabet.
  void validate(const Term& t) const;

  Term normalize(const Term& t) const;

  bool leq(const Term& s, const Term& t) const;
  bool equiv(const Term& s, const Term& t) const { return leq(s, t) && leq(t, s); }

  /// Zero is not AI. Atoms, shuffles and unbounded sums are; a Sum is AI iff
  /// it embeds into one of its own parts.
  bool is_ai(const Term& t) const;

  /// Maximal elements of a family of normalized terms under `leq`; among
  /// equivalent members the structurally least survives. Sorted.
  std::vector<Term> maximal_antichain(std::span<const Term> family) const;

  /// Normalized Σ_{x ∈ index} phi.
  Term product(const Term& phi, const Term& index) const;

 private:
  Term normalize_rev_free(const Term& t) const;

  QuasiOrder labels_;
  BaseTable table_;
};

/// No Sum node anywhere (on a normalized term: no top-level Sum).
bool is_h_member(const Term& t);
/// Every node is Zero, Atom, Sum, Shuffle or unbounded sum.
bool is_c_member(const Term& t);

/// Pushes every Rev node to the leaves and drops it there. The result
/// contains no Rev node but is otherwise not normalized.
Term push_reversal(const Term& t);

/// Σ_{x ∈ index} phi by substitution of every atom of `index` with `phi`.
/// Not normalized.
Term product(const Term& phi, const Term& index);

enum class Sign { kPlus, kMinus };

/// D⁺ₙ / D⁻ₙ over the given label: D⁺₀ = C-shuffle of a point, D⁻₀ = its
/// reverse, D⁺ₙ₊₁ = D⁺₀ · D⁻ₙ and D⁻ₙ₊₁ = D⁻₀ · D⁺ₙ (antilexicographic
/// products: every point of the index line becomes a copy of the factor).
/// Only natural-number indices are available. Throws InputError for n < 0.
Term d_line(int n, Sign sign, const std::string& label = std::string(kUnitLabel));

}  // namespace aronszajn
