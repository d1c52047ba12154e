#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aronszajn/base_order.hpp"

namespace aronszajn {

enum class TermKind : unsigned char {
  kZero,
  kAtom,
  kSum,           // ordered finite sum, at least two parts
  kShuffle,       // dense-base shuffle of a finite summand family
  kUnboundedSum,  // ω / ω* unbounded sum of a finite summand family
  kReverse,
};

/// Immutable symbolic order type. Cheap to copy (shared node).
///
/// Shuffle and unbounded-sum summands form a set: they are stored sorted by
/// the structural order and deduplicated, so structurally equal terms compare
/// equal regardless of how they were written.
class Term {
 public:
  /// The empty order.
  Term();

  static Term zero() { return Term(); }
  static Term atom(std::string label);
  /// Requires at least two parts; use `sum_of` for the general case.
  static Term sum(std::vector<Term> parts);
  /// Requires a dense base and a nonempty summand family.
  static Term shuffle(BaseOrder base, std::vector<Term> summands);
  /// Requires ω or ω* and a nonempty summand family.
  static Term unbounded_sum(BaseOrder base, std::vector<Term> summands);
  static Term reverse(Term inner);

  TermKind kind() const;
  bool is_zero() const { return kind() == TermKind::kZero; }
  /// Shuffle or unbounded sum.
  bool is_indexed() const {
    return kind() == TermKind::kShuffle || kind() == TermKind::kUnboundedSum;
  }
  const std::string& label() const;
  BaseOrder base() const;
  std::span<const Term> children() const;

  std::size_t hash() const;
  /// Number of nodes.
  std::size_t size() const;
  /// Atoms and Zero have depth 1.
  int depth() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node;
  static const std::shared_ptr<const Node>& zero_node();
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(TermKind kind, std::string label, BaseOrder base,
                   std::vector<Term> children);

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

/// Zero for no parts, the part itself for one, a Sum otherwise.
Term sum_of(std::vector<Term> parts);

/// S-expression form: `0`, `(a p)`, `(+ t1 t2 ...)`, `(sh Q|C|C* t1 ...)`,
/// `(us w|w* t1 ...)`, `(rev t)`.
std::string to_sexpr(const Term& t);

/// Throws InputError naming the offending token.
Term parse_term(std::string_view text);

/// Distinct atom labels in order of first occurrence.
std::vector<std::string> collect_labels(const Term& t);

/// Whether any node uses C or C*.
bool mentions_uncountable_base(const Term& t);

}  // namespace aronszajn
