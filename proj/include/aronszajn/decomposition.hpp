#pragma once

#include <vector>

#include "aronszajn/algebra.hpp"
#include "aronszajn/term.hpp"

namespace aronszajn {

/// A term written as a finite sum of algebraically indecomposable
/// Sum-free pieces, in left-to-right order.
struct Decomposition {
  Term input;
  std::vector<Term> pieces;
  bool input_below_sum = false;  // input <= Σ pieces
  bool sum_below_input = false;  // Σ pieces <= input

  bool certified() const { return input_below_sum && sum_below_input; }
};

Decomposition decompose(const TypeAlgebra& alg, const Term& t);

/// A single-summand shuffle equivalent to the given dense shuffle: the
/// maximum summand when one exists, otherwise the sum of the maximal
/// antichain in canonical order. The result is deliberately left
/// unnormalized (normalizing it flattens the sum back out).
/// Throws InputError unless the normal form of `t` is a shuffle.
Term strictify(const TypeAlgebra& alg, const Term& t);

}  // namespace aronszajn
