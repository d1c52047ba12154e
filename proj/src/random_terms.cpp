#include "aronszajn/random_terms.hpp"

#include <functional>

namespace aronszajn {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

std::size_t between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + pick(rng, hi - lo + 1);
}

Term leaf(std::mt19937_64& rng, const TermGenOptions& opts) {
  if (opts.allow_zero && pick(rng, 10) == 0) return Term::zero();
  return Term::atom(opts.labels[pick(rng, opts.labels.size())]);
}

Term generate(std::mt19937_64& rng, const TermGenOptions& opts, int depth) {
  if (depth <= 1) return leaf(rng, opts);

  enum Choice { kLeaf, kSum, kShuffle, kUnbounded, kRev };
  std::vector<Choice> menu = {kLeaf, kLeaf, kShuffle, kShuffle, kUnbounded, kUnbounded};
  if (opts.allow_sum) menu.insert(menu.end(), {kSum, kSum});
  if (opts.allow_reverse) menu.push_back(kRev);

  switch (menu[pick(rng, menu.size())]) {
    case kLeaf:
      return leaf(rng, opts);
    case kSum: {
      std::vector<Term> parts;
      const std::size_t n = between(rng, 2, std::max<std::size_t>(2, opts.max_parts));
      for (std::size_t i = 0; i < n; ++i) parts.push_back(generate(rng, opts, depth - 1));
      return Term::sum(std::move(parts));
    }
    case kShuffle: {
      static constexpr BaseOrder kDense[] = {BaseOrder::kRationals, BaseOrder::kCountryman,
                                             BaseOrder::kCountrymanStar};
      const BaseOrder base = opts.countable_only ? BaseOrder::kRationals : kDense[pick(rng, 3)];
      std::vector<Term> family;
      const std::size_t n = between(rng, 1, std::max<std::size_t>(1, opts.max_family));
      for (std::size_t i = 0; i < n; ++i) family.push_back(generate(rng, opts, depth - 1));
      return Term::shuffle(base, std::move(family));
    }
    case kUnbounded: {
      const BaseOrder base = pick(rng, 2) == 0 ? BaseOrder::kOmega : BaseOrder::kOmegaStar;
      std::vector<Term> family;
      const std::size_t n = between(rng, 1, std::max<std::size_t>(1, opts.max_family));
      for (std::size_t i = 0; i < n; ++i) family.push_back(generate(rng, opts, depth - 1));
      return Term::unbounded_sum(base, std::move(family));
    }
    case kRev:
      return Term::reverse(generate(rng, opts, depth - 1));
  }
  return leaf(rng, opts);
}

}  // namespace

Term random_term(std::mt19937_64& rng, const TermGenOptions& opts) {
  return generate(rng, opts, opts.max_depth);
}

namespace {

Term rebuild(const Term& t, std::vector<Term> kids) {
  switch (t.kind()) {
    case TermKind::kSum:
      return Term::sum(std::move(kids));
    case TermKind::kShuffle:
      return Term::shuffle(t.base(), std::move(kids));
    case TermKind::kUnboundedSum:
      return Term::unbounded_sum(t.base(), std::move(kids));
    case TermKind::kReverse:
      return Term::reverse(kids.front());
    default:
      return t;
  }
}

Term wrap(std::mt19937_64& rng, const TermGenOptions& opts, const Term& t) {
  std::vector<Term> family{t};
  if (pick(rng, 2) == 0) family.push_back(generate(rng, opts, std::max(1, opts.max_depth - 1)));
  switch (pick(rng, opts.countable_only ? 3 : 5)) {
    case 0:
      return Term::unbounded_sum(BaseOrder::kOmega, std::move(family));
    case 1:
      return Term::unbounded_sum(BaseOrder::kOmegaStar, std::move(family));
    case 2:
      return Term::shuffle(BaseOrder::kRationals, std::move(family));
    case 3:
      return Term::shuffle(BaseOrder::kCountryman, std::move(family));
    default:
      return Term::shuffle(BaseOrder::kCountrymanStar, std::move(family));
  }
}

Term wrap_somewhere(std::mt19937_64& rng, const TermGenOptions& opts, const Term& t) {
  if (t.children().empty() || pick(rng, 3) == 0) return wrap(rng, opts, t);
  std::vector<Term> kids(t.children().begin(), t.children().end());
  const std::size_t i = pick(rng, kids.size());
  kids[i] = wrap_somewhere(rng, opts, kids[i]);
  return rebuild(t, std::move(kids));
}

Term some_subterm(std::mt19937_64& rng, const Term& t) {
  if (t.children().empty() || pick(rng, 3) == 0) return t;
  return some_subterm(rng, t.children()[pick(rng, t.children().size())]);
}

}  // namespace

Term random_neighbor(std::mt19937_64& rng, const TermGenOptions& opts, const Term& a) {
  switch (pick(rng, 4)) {
    case 0:
      return random_term(rng, opts);
    case 1:
      return wrap(rng, opts, a);
    case 2:
      return wrap_somewhere(rng, opts, a);
    default:
      return some_subterm(rng, a);
  }
}

std::pair<Term, Term> random_related_pair(std::mt19937_64& rng, const TermGenOptions& opts) {
  Term a = random_term(rng, opts);
  if (pick(rng, 5) == 0) return {some_subterm(rng, a), a};
  Term b = random_neighbor(rng, opts, a);
  return {std::move(a), std::move(b)};
}

LabeledTree random_tree(std::mt19937_64& rng, const std::vector<std::string>& labels,
                        std::size_t max_nodes) {
  const std::size_t n = between(rng, 1, std::max<std::size_t>(1, max_nodes));
  std::vector<std::vector<std::size_t>> kids(n);
  std::vector<std::string> names(n);
  for (std::size_t v = 0; v < n; ++v) {
    names[v] = labels[pick(rng, labels.size())];
    if (v > 0) kids[pick(rng, v)].push_back(v);
  }
  std::function<LabeledTree(std::size_t)> build = [&](std::size_t v) {
    std::vector<LabeledTree> sub;
    for (std::size_t c : kids[v]) sub.push_back(build(c));
    return LabeledTree::node(names[v], std::move(sub));
  };
  return build(0);
}

namespace {

// Ordered forests with exactly n nodes, as lists of (unlabeled) trees encoded
// by parent arrays in preorder.
using Shape = std::vector<std::size_t>;  // parent per node, root's is npos

std::vector<Shape> shapes_with(std::size_t n);

std::vector<std::vector<Shape>> forests_with(std::size_t n) {
  std::vector<std::vector<Shape>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  for (std::size_t first = 1; first <= n; ++first) {
    for (const auto& head : shapes_with(first)) {
      for (auto rest : forests_with(n - first)) {
        rest.insert(rest.begin(), head);
        out.push_back(std::move(rest));
      }
    }
  }
  return out;
}

std::vector<Shape> shapes_with(std::size_t n) {
  std::vector<Shape> out;
  for (const auto& forest : forests_with(n - 1)) {
    Shape s{LabeledTree::kNoParent};
    for (const auto& tree : forest) {
      const std::size_t offset = s.size();
      for (std::size_t v = 0; v < tree.size(); ++v) {
        s.push_back(v == 0 ? 0 : tree[v] + offset);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

LabeledTree from_shape(const Shape& shape, const std::vector<std::string>& names) {
  std::function<LabeledTree(std::size_t)> build = [&](std::size_t v) {
    std::vector<LabeledTree> sub;
    for (std::size_t c = v + 1; c < shape.size(); ++c) {
      if (shape[c] == v) sub.push_back(build(c));
    }
    return LabeledTree::node(names[v], std::move(sub));
  };
  return build(0);
}

}  // namespace

std::vector<LabeledTree> all_labeled_trees(std::size_t max_nodes,
                                           const std::vector<std::string>& labels) {
  std::vector<LabeledTree> out;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    for (const auto& shape : shapes_with(n)) {
      std::vector<std::size_t> digits(n, 0);
      while (true) {
        std::vector<std::string> names(n);
        for (std::size_t v = 0; v < n; ++v) names[v] = labels[digits[v]];
        out.push_back(from_shape(shape, names));
        std::size_t i = 0;
        while (i < n && ++digits[i] == labels.size()) digits[i++] = 0;
        if (i == n) break;
      }
    }
  }
  return out;
}

}  // namespace aronszajn
