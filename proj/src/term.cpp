#include "aronszajn/term.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "aronszajn/errors.hpp"
#include "aronszajn/quasi_order.hpp"
#include "sexpr.hpp"

namespace aronszajn {

struct Term::Node {
  TermKind kind = TermKind::kZero;
  BaseOrder base = BaseOrder::kOmega;
  std::string label;
  std::vector<Term> children;
  std::size_t hash = 0;
  std::size_t size = 1;
  int depth = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// Zero is shared by every default-constructed term.
const std::shared_ptr<const Term::Node>& Term::zero_node() {
  static const auto node = [] {
    auto n = std::make_shared<Term::Node>();
    n->hash = mix(0, static_cast<std::size_t>(TermKind::kZero));
    return std::shared_ptr<const Term::Node>(std::move(n));
  }();
  return node;
}

Term::Term() : node_(zero_node()) {}

Term Term::make(TermKind kind, std::string label, BaseOrder base, std::vector<Term> children) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->base = base;
  n->label = std::move(label);
  n->children = std::move(children);

  std::size_t h = mix(0, static_cast<std::size_t>(kind));
  h = mix(h, static_cast<std::size_t>(base));
  h = mix(h, std::hash<std::string>{}(n->label));
  int depth = 0;
  for (const auto& c : n->children) {
    h = mix(h, c.hash());
    n->size += c.size();
    depth = std::max(depth, c.depth());
  }
  n->hash = h;
  n->depth = depth + 1;
  return Term(std::shared_ptr<const Node>(std::move(n)));
}

Term Term::atom(std::string label) {
  if (!is_valid_label(label)) throw InputError("invalid atom label: '" + label + "'");
  return make(TermKind::kAtom, std::move(label), BaseOrder::kOmega, {});
}

Term Term::sum(std::vector<Term> parts) {
  if (parts.size() < 2) throw InputError("sum needs at least two parts");
  return make(TermKind::kSum, {}, BaseOrder::kOmega, std::move(parts));
}

namespace {

std::vector<Term> as_set(std::vector<Term> summands) {
  std::sort(summands.begin(), summands.end());
  summands.erase(std::unique(summands.begin(), summands.end()), summands.end());
  return summands;
}

}  // namespace

Term Term::shuffle(BaseOrder base, std::vector<Term> summands) {
  if (!is_dense(base)) {
    throw InputError("shuffle needs a dense base, got '" + std::string(symbol(base)) + "'");
  }
  if (summands.empty()) throw InputError("shuffle needs at least one summand");
  return make(TermKind::kShuffle, {}, base, as_set(std::move(summands)));
}

Term Term::unbounded_sum(BaseOrder base, std::vector<Term> summands) {
  if (is_dense(base)) {
    throw InputError("unbounded sum needs base w or w*, got '" + std::string(symbol(base)) + "'");
  }
  if (summands.empty()) throw InputError("unbounded sum needs at least one summand");
  return make(TermKind::kUnboundedSum, {}, base, as_set(std::move(summands)));
}

Term Term::reverse(Term inner) {
  return make(TermKind::kReverse, {}, BaseOrder::kOmega, {std::move(inner)});
}

TermKind Term::kind() const { return node_->kind; }
const std::string& Term::label() const { return node_->label; }
BaseOrder Term::base() const { return node_->base; }
std::span<const Term> Term::children() const { return node_->children; }
std::size_t Term::hash() const { return node_->hash; }
std::size_t Term::size() const { return node_->size; }
int Term::depth() const { return node_->depth; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash()) return false;
  return (a <=> b) == 0;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.base <=> y.base; c != 0) return c;
  if (auto c = x.label.compare(y.label); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::lexicographical_compare_three_way(x.children.begin(), x.children.end(),
                                                y.children.begin(), y.children.end());
}

Term sum_of(std::vector<Term> parts) {
  if (parts.empty()) return Term::zero();
  if (parts.size() == 1) return parts.front();
  return Term::sum(std::move(parts));
}

namespace {

void write_sexpr(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::kZero:
      out += '0';
      return;
    case TermKind::kAtom:
      out += "(a ";
      out += t.label();
      out += ')';
      return;
    case TermKind::kSum: out += "(+"; break;
    case TermKind::kShuffle:
    case TermKind::kUnboundedSum:
      out += t.kind() == TermKind::kShuffle ? "(sh " : "(us ";
      out += symbol(t.base());
      break;
    case TermKind::kReverse: out += "(rev"; break;
  }
  for (const auto& c : t.children()) {
    out += ' ';
    write_sexpr(c, out);
  }
  out += ')';
}

Term parse_one(detail::SexprLexer& lex) {
  auto tok = lex.next();
  if (tok == "0") return Term::zero();
  if (tok != "(") throw InputError("unexpected token " + detail::SexprLexer::describe(tok));

  const std::string head(lex.next());
  auto parse_children = [&lex] {
    std::vector<Term> out;
    while (lex.peek() != ")") {
      if (lex.at_end()) throw InputError("unbalanced parentheses: missing ')'");
      out.push_back(parse_one(lex));
    }
    lex.expect(")");
    return out;
  };

  if (head == "a") {
    const std::string label(lex.next());
    if (is_reserved_label(label)) {
      throw InputError("reserved base symbol used as label: '" + label + "'");
    }
    if (!is_valid_label(label)) {
      throw InputError("invalid label " + detail::SexprLexer::describe(label));
    }
    lex.expect(")");
    return Term::atom(label);
  }
  if (head == "+") {
    auto parts = parse_children();
    if (parts.size() < 2) throw InputError("'+' needs at least two parts");
    return Term::sum(std::move(parts));
  }
  if (head == "sh" || head == "us") {
    const std::string base_tok(lex.next());
    auto base = parse_base(base_tok);
    if (!base) throw InputError("unknown base order '" + base_tok + "'");
    if (head == "sh" && !is_dense(*base)) {
      throw InputError("'sh' does not accept base '" + base_tok + "'");
    }
    if (head == "us" && is_dense(*base)) {
      throw InputError("'us' does not accept base '" + base_tok + "'");
    }
    auto summands = parse_children();
    if (summands.empty()) throw InputError("'" + head + "' needs at least one summand");
    return head == "sh" ? Term::shuffle(*base, std::move(summands))
                        : Term::unbounded_sum(*base, std::move(summands));
  }
  if (head == "rev") {
    auto inner = parse_children();
    if (inner.size() != 1) throw InputError("'rev' takes exactly one term");
    return Term::reverse(std::move(inner.front()));
  }
  throw InputError("unknown constructor " + detail::SexprLexer::describe(head));
}

}  // namespace

std::string to_sexpr(const Term& t) {
  std::string out;
  write_sexpr(t, out);
  return out;
}

Term parse_term(std::string_view text) {
  detail::SexprLexer lex(text);
  Term t = parse_one(lex);
  if (!lex.at_end()) {
    throw InputError("trailing input after term: " + detail::SexprLexer::describe(lex.peek()));
  }
  return t;
}

std::vector<std::string> collect_labels(const Term& t) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  std::function<void(const Term&)> walk = [&](const Term& x) {
    if (x.kind() == TermKind::kAtom && seen.insert(x.label()).second) out.push_back(x.label());
    for (const auto& c : x.children()) walk(c);
  };
  walk(t);
  return out;
}

bool mentions_uncountable_base(const Term& t) {
  if (t.is_indexed() && !is_countable(t.base())) return true;
  return std::any_of(t.children().begin(), t.children().end(), mentions_uncountable_base);
}

}  // namespace aronszajn
