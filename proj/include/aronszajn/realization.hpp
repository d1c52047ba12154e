#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "aronszajn/algebra.hpp"
#include "aronszajn/quasi_order.hpp"
#include "aronszajn/term.hpp"

namespace aronszajn {

/// A finite labeled linear order, left to right.
struct FiniteRealization {
  std::vector<std::string> labels;
  Term source;
  int depth = 0;
};

inline constexpr std::size_t kRealizationLimit = std::size_t{1} << 22;

/// Finite truncation of a countable-base term at the given depth.
///
///   * atom ↦ [label]; sums concatenate; rev reverses.
///   * ω-sum of U ↦ max(depth, 1) rounds, each round one block per summand in
///     canonical order; ω* lists the same blocks in reverse block order.
///   * ℚ-shuffle of U ↦ stage 0 lays out one block per summand; each of the
///     `depth` further stages inserts one block of every summand into every
///     gap, the two unbounded ends included.
///
/// Blocks realize their summand at depth max(depth - 1, 0). Throws
/// Unrealizable for C/C* bases and GuardRefusal when the result would exceed
/// `max_length` labels.
FiniteRealization realize(const Term& t, int depth, std::size_t max_length = kRealizationLimit);

/// Strictly increasing position map a -> b with pointwise label domination.
/// Greedy leftmost matching, which finds an embedding whenever one exists.
bool finite_embed(const QuasiOrder& q, std::span<const std::string> a,
                  std::span<const std::string> b);

struct OracleReport {
  bool term_holds = false;
  /// Least D in [depth, cap] with realize(s, depth) embedding into
  /// realize(t, D); only searched when term_holds.
  std::optional<int> found_depth;
  /// term_holds but nothing found up to cap (or a realization hit the size
  /// guard). Not a counterexample: the symbolic relation concerns the
  /// infinite orders.
  bool inconclusive = false;
  std::string note;
};

OracleReport oracle_compare(const TypeAlgebra& alg, const Term& s, const Term& t, int depth,
                            int cap);

/// Whitespace-separated labels.
std::string to_text(std::span<const std::string> labels);
std::vector<std::string> parse_realization(std::string_view text);

}  // namespace aronszajn
