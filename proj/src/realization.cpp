#include "aronszajn/realization.hpp"

#include <algorithm>
#include <sstream>

#include "aronszajn/errors.hpp"

namespace aronszajn {

namespace {

using Labels = std::vector<std::string>;

class Realizer {
 public:
  explicit Realizer(std::size_t limit) : limit_(limit) {}

  Labels run(const Term& t, int depth) {
    Labels out;
    emit(t, depth, out);
    return out;
  }

 private:
  void emit(const Term& t, int depth, Labels& out) {
    switch (t.kind()) {
      case TermKind::kZero:
        return;
      case TermKind::kAtom:
        push(out, t.label());
        return;
      case TermKind::kSum:
        for (const auto& p : t.children()) emit(p, depth, out);
        return;
      case TermKind::kReverse: {
        Labels inner = run(t.children().front(), depth);
        std::reverse(inner.begin(), inner.end());
        append(out, inner);
        return;
      }
      case TermKind::kShuffle:
      case TermKind::kUnboundedSum:
        break;
    }
    if (!is_countable(t.base())) {
      throw Unrealizable("base '" + std::string(symbol(t.base())) +
                         "' has no countable realization");
    }

    const auto summands = t.children();
    std::vector<Labels> blocks;
    for (const auto& u : summands) blocks.push_back(run(u, std::max(depth - 1, 0)));

    std::vector<std::size_t> layout;  // summand index per block
    const std::size_t k = summands.size();
    if (t.kind() == TermKind::kUnboundedSum) {
      const int rounds = std::max(depth, 1);
      for (int r = 0; r < rounds; ++r) {
        for (std::size_t i = 0; i < k; ++i) layout.push_back(i);
      }
      if (t.base() == BaseOrder::kOmegaStar) std::reverse(layout.begin(), layout.end());
    } else {
      for (std::size_t i = 0; i < k; ++i) layout.push_back(i);
      for (int stage = 1; stage <= depth; ++stage) {
        std::vector<std::size_t> next;
        next.reserve(layout.size() + (layout.size() + 1) * k);
        auto fill_gap = [&] {
          for (std::size_t i = 0; i < k; ++i) next.push_back(i);
        };
        fill_gap();
        for (std::size_t b : layout) {
          next.push_back(b);
          fill_gap();
        }
        layout = std::move(next);
        if (layout.size() > limit_) refuse();
      }
    }
    for (std::size_t b : layout) append(out, blocks[b]);
  }

  void push(Labels& out, const std::string& label) {
    if (out.size() + 1 > limit_) refuse();
    out.push_back(label);
  }

  void append(Labels& out, const Labels& block) {
    if (out.size() + block.size() > limit_) refuse();
    out.insert(out.end(), block.begin(), block.end());
  }

  [[noreturn]] void refuse() const {
    throw GuardRefusal("realization exceeds " + std::to_string(limit_) + " points");
  }

  std::size_t limit_;
};

}  // namespace

FiniteRealization realize(const Term& t, int depth, std::size_t max_length) {
  if (depth < 0) throw InputError("realization depth must be non-negative");
  return FiniteRealization{Realizer(max_length).run(t, depth), t, depth};
}

bool finite_embed(const QuasiOrder& q, std::span<const std::string> a,
                  std::span<const std::string> b) {
  std::vector<std::size_t> bi;
  bi.reserve(b.size());
  for (const auto& x : b) bi.push_back(q.index_of(x));
  std::size_t j = 0;
  for (const auto& x : a) {
    const std::size_t xi = q.index_of(x);
    while (j < bi.size() && !q.leq(xi, bi[j])) ++j;
    if (j == bi.size()) return false;
    ++j;
  }
  return true;
}

OracleReport oracle_compare(const TypeAlgebra& alg, const Term& s, const Term& t, int depth,
                            int cap) {
  const Term ns = alg.normalize(s);
  const Term nt = alg.normalize(t);
  if (mentions_uncountable_base(ns) || mentions_uncountable_base(nt)) {
    throw Unrealizable("oracle comparison needs countable-base terms");
  }
  OracleReport r;
  r.term_holds = alg.leq(ns, nt);
  if (!r.term_holds) return r;

  const auto small = realize(ns, depth);
  for (int d = depth; d <= cap; ++d) {
    FiniteRealization big;
    try {
      big = realize(nt, d);
    } catch (const GuardRefusal& e) {
      r.inconclusive = true;
      r.note = "stopped at depth " + std::to_string(d) + ": " + e.what();
      return r;
    }
    if (finite_embed(alg.labels(), small.labels, big.labels)) {
      r.found_depth = d;
      return r;
    }
  }
  r.inconclusive = true;
  r.note = "no embedding of the depth-" + std::to_string(depth) +
           " realization found up to depth " + std::to_string(cap);
  return r;
}

std::string to_text(std::span<const std::string> labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ' ';
    out += labels[i];
  }
  return out;
}

std::vector<std::string> parse_realization(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) {
    if (!is_valid_label(w)) throw InputError("invalid label '" + w + "' in realization");
    out.push_back(w);
  }
  return out;
}

}  // namespace aronszajn
