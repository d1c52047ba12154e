#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "aronszajn/labeled_tree.hpp"
#include "aronszajn/term.hpp"

namespace aronszajn {

/// Seeded generators for property tests and batch commands. Only the raw
/// engine output of std::mt19937_64 is consumed, so a seed reproduces the
/// same terms on every platform.
struct TermGenOptions {
  std::vector<std::string> labels{"u"};
  int max_depth = 3;             // atoms have depth 1
  std::size_t max_family = 3;    // summands per shuffle / unbounded sum
  std::size_t max_parts = 3;     // parts per Sum
  bool allow_sum = true;
  bool allow_reverse = false;
  bool allow_zero = false;
  bool countable_only = false;   // no C / C* bases
};

Term random_term(std::mt19937_64& rng, const TermGenOptions& opts);

/// (a, b) where b is usually built from a: a itself wrapped into a larger
/// shuffle or unbounded sum, a with one subterm wrapped, a subterm of a, or
/// an unrelated term. Related pairs make both outcomes of a comparison
/// common.
/// A term built from `a` as in random_related_pair.
Term random_neighbor(std::mt19937_64& rng, const TermGenOptions& opts, const Term& a);

std::pair<Term, Term> random_related_pair(std::mt19937_64& rng, const TermGenOptions& opts);

/// Uniform random recursive tree with 1..max_nodes nodes.
LabeledTree random_tree(std::mt19937_64& rng, const std::vector<std::string>& labels,
                        std::size_t max_nodes);

/// Every ordered tree with 1..max_nodes nodes and every labeling from
/// `labels`, in a fixed order.
std::vector<LabeledTree> all_labeled_trees(std::size_t max_nodes,
                                           const std::vector<std::string>& labels);

}  // namespace aronszajn
