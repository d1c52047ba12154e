#include "aronszajn/algebra.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "aronszajn/errors.hpp"

namespace aronszajn {

namespace {

struct TermPairHash {
  std::size_t operator()(const std::pair<Term, Term>& p) const {
    return p.first.hash() * 0x100000001b3ULL ^ p.second.hash();
  }
};

std::span<const Term> pieces_of(const Term& t) {
  if (t.kind() == TermKind::kSum) return t.children();
  if (t.is_zero()) return {};
  return std::span<const Term>(&t, 1);
}

/// One decision session over normalized terms. Not thread-safe; create one
/// per top-level query.
class Decider {
 public:
  Decider(const QuasiOrder& labels, const BaseTable& table) : labels_(labels), table_(table) {}

  bool leq(const Term& s, const Term& t) {
    if (s.is_zero()) return true;
    if (t.is_zero()) return false;
    if (s == t) return true;

    auto key = std::make_pair(s, t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto sp = pieces_of(s);
    const auto tp = pieces_of(t);
    const bool result =
        sp.size() == 1 && tp.size() == 1 ? indecomposable_leq(s, t) : pieces_leq(sp, tp);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // reach[i][j]: the first i source pieces fit, in order, into the first j
  // target pieces.
  bool pieces_leq(std::span<const Term> sp, std::span<const Term> tp) {
    const std::size_t m = sp.size();
    const std::size_t n = tp.size();
    std::vector<std::vector<char>> reach(m + 1, std::vector<char>(n + 1, 0));
    for (std::size_t j = 0; j <= n; ++j) reach[0][j] = 1;
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 1; i <= m; ++i) {
        if (reach[i][j - 1]) {
          reach[i][j] = 1;
          continue;
        }
        for (std::size_t a = 0; a < i && !reach[i][j]; ++a) {
          if (reach[a][j - 1] && block_fits(sp.subspan(a, i - a), tp[j - 1])) reach[i][j] = 1;
        }
      }
    }
    return reach[m][n];
  }

  bool block_fits(std::span<const Term> block, const Term& target) {
    if (block.size() == 1) return leq(block.front(), target);
    switch (target.kind()) {
      case TermKind::kShuffle:
        return std::all_of(block.begin(), block.end(),
                           [&](const Term& p) { return leq(p, target); });
      case TermKind::kUnboundedSum: {
        // Every piece except the one running into the unbounded end must stay
        // inside finitely many summands, hence inside one.
        const bool forward = target.base() == BaseOrder::kOmega;
        const std::size_t open_end = forward ? block.size() - 1 : 0;
        for (std::size_t i = 0; i < block.size(); ++i) {
          const bool ok = i == open_end ? leq(block[i], target)
                                        : below_some_summand(block[i], target);
          if (!ok) return false;
        }
        return true;
      }
      default:
        return false;
    }
  }

  bool below_some_summand(const Term& s, const Term& t) {
    return std::any_of(t.children().begin(), t.children().end(),
                       [&](const Term& u) { return leq(s, u); });
  }

  bool indecomposable_leq(const Term& s, const Term& t) {
    if (t.kind() == TermKind::kAtom) {
      return s.kind() == TermKind::kAtom && labels_.leq(s.label(), t.label());
    }
    if (below_some_summand(s, t)) return true;
    if (s.kind() == TermKind::kAtom) return false;
    if (!table_.leq(s.base(), t.base())) return false;

    const auto source = s.children();
    if (is_dense(t.base())) {
      return std::all_of(source.begin(), source.end(),
                         [&](const Term& u) { return leq(u, t); });
    }
    return std::all_of(source.begin(), source.end(),
                       [&](const Term& u) { return below_some_summand(u, t); });
  }

  const QuasiOrder& labels_;
  const BaseTable& table_;
  std::unordered_map<std::pair<Term, Term>, bool, TermPairHash> memo_;
};

Term push_reversal_impl(const Term& t, bool flip) {
  switch (t.kind()) {
    case TermKind::kZero:
    case TermKind::kAtom:
      return t;
    case TermKind::kReverse:
      return push_reversal_impl(t.children().front(), !flip);
    case TermKind::kSum: {
      std::vector<Term> parts;
      for (const auto& c : t.children()) parts.push_back(push_reversal_impl(c, flip));
      if (flip) std::reverse(parts.begin(), parts.end());
      return Term::sum(std::move(parts));
    }
    case TermKind::kShuffle:
    case TermKind::kUnboundedSum: {
      std::vector<Term> summands;
      for (const auto& c : t.children()) summands.push_back(push_reversal_impl(c, flip));
      const BaseOrder base = flip ? reverse(t.base()) : t.base();
      return t.kind() == TermKind::kShuffle ? Term::shuffle(base, std::move(summands))
                                            : Term::unbounded_sum(base, std::move(summands));
    }
  }
  return t;
}

Term substitute_atoms(const Term& index, const Term& phi) {
  switch (index.kind()) {
    case TermKind::kZero: return index;
    case TermKind::kAtom: return phi;
    case TermKind::kSum: {
      std::vector<Term> parts;
      for (const auto& c : index.children()) parts.push_back(substitute_atoms(c, phi));
      return Term::sum(std::move(parts));
    }
    case TermKind::kShuffle:
    case TermKind::kUnboundedSum: {
      std::vector<Term> summands;
      for (const auto& c : index.children()) summands.push_back(substitute_atoms(c, phi));
      return index.kind() == TermKind::kShuffle
                 ? Term::shuffle(index.base(), std::move(summands))
                 : Term::unbounded_sum(index.base(), std::move(summands));
    }
    case TermKind::kReverse: break;
  }
  throw InputError("product index must be reversal-free");
}

}  // namespace

TypeAlgebra::TypeAlgebra(QuasiOrder labels, BaseTable table)
    : labels_(std::move(labels)), table_(table) {}

void TypeAlgebra::validate(const Term& t) const {
  if (t.kind() == TermKind::kAtom) {
    labels_.index_of(t.label());
    return;
  }
  for (const auto& c : t.children()) validate(c);
}

Term TypeAlgebra::normalize(const Term& t) const {
  validate(t);
  return normalize_rev_free(push_reversal(t));
}

Term TypeAlgebra::normalize_rev_free(const Term& t) const {
  switch (t.kind()) {
    case TermKind::kZero:
    case TermKind::kAtom:
      return t;
    case TermKind::kReverse:
      break;
    case TermKind::kSum:
    case TermKind::kShuffle:
    case TermKind::kUnboundedSum: {
      std::vector<Term> flat;
      for (const auto& c : t.children()) {
        Term n = normalize_rev_free(c);
        if (n.kind() == TermKind::kSum) {
          flat.insert(flat.end(), n.children().begin(), n.children().end());
        } else if (!n.is_zero()) {
          flat.push_back(std::move(n));
        }
      }
      if (t.kind() == TermKind::kSum) return sum_of(std::move(flat));
      if (flat.empty()) return Term::zero();
      auto top = maximal_antichain(flat);
      return t.kind() == TermKind::kShuffle ? Term::shuffle(t.base(), std::move(top))
                                            : Term::unbounded_sum(t.base(), std::move(top));
    }
  }
  throw InputError("internal: reversal survived normalization");
}

bool TypeAlgebra::leq(const Term& s, const Term& t) const {
  const Term ns = normalize(s);
  const Term nt = normalize(t);
  return Decider(labels_, table_).leq(ns, nt);
}

bool TypeAlgebra::is_ai(const Term& t) const {
  const Term n = normalize(t);
  if (n.is_zero()) return false;
  if (n.kind() != TermKind::kSum) return true;
  Decider d(labels_, table_);
  return std::any_of(n.children().begin(), n.children().end(),
                     [&](const Term& part) { return d.leq(n, part); });
}

std::vector<Term> TypeAlgebra::maximal_antichain(std::span<const Term> family) const {
  std::vector<Term> items(family.begin(), family.end());
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());

  Decider d(labels_, table_);
  std::vector<Term> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < items.size() && keep; ++j) {
      if (i == j || !d.leq(items[i], items[j])) continue;
      // items[j] dominates; an equivalent one only wins if it sorts first.
      if (!d.leq(items[j], items[i]) || j < i) keep = false;
    }
    if (keep) out.push_back(items[i]);
  }
  return out;
}

Term TypeAlgebra::product(const Term& phi, const Term& index) const {
  return normalize(aronszajn::product(normalize(phi), normalize(index)));
}

bool is_h_member(const Term& t) {
  if (t.kind() == TermKind::kSum) return false;
  return std::all_of(t.children().begin(), t.children().end(), is_h_member);
}

bool is_c_member(const Term& t) {
  if (t.kind() == TermKind::kReverse) return false;
  return std::all_of(t.children().begin(), t.children().end(), is_c_member);
}

Term push_reversal(const Term& t) { return push_reversal_impl(t, false); }

Term product(const Term& phi, const Term& index) {
  return substitute_atoms(push_reversal(index), phi);
}

Term d_line(int n, Sign sign, const std::string& label) {
  if (n < 0) throw InputError("d_line index must be a natural number, got " + std::to_string(n));
  const Term point = Term::atom(label);
  const Term plus0 = Term::shuffle(BaseOrder::kCountryman, {point});
  const Term minus0 = Term::shuffle(BaseOrder::kCountrymanStar, {point});
  Term plus = plus0;
  Term minus = minus0;
  for (int k = 0; k < n; ++k) {
    Term next_plus = product(plus0, minus);
    Term next_minus = product(minus0, plus);
    plus = std::move(next_plus);
    minus = std::move(next_minus);
  }
  return sign == Sign::kPlus ? plus : minus;
}

}  // namespace aronszajn
