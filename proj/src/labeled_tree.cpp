#include "aronszajn/labeled_tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "aronszajn/errors.hpp"
#include "sexpr.hpp"

namespace aronszajn {

LabeledTree LabeledTree::leaf(std::string label) { return node(std::move(label), {}); }

LabeledTree LabeledTree::node(std::string label, std::vector<LabeledTree> children) {
  LabeledTree t;
  t.labels_.push_back(std::move(label));
  t.parent_.push_back(kNoParent);
  t.children_.emplace_back();
  t.depth_.push_back(0);
  for (const auto& c : children) {
    if (!c.empty()) t.append(c, 0);
  }
  return t;
}

void LabeledTree::append(const LabeledTree& sub, std::size_t parent) {
  const std::size_t offset = size();
  for (std::size_t v = 0; v < sub.size(); ++v) {
    labels_.push_back(sub.labels_[v]);
    const std::size_t p = v == 0 ? parent : sub.parent_[v] + offset;
    parent_.push_back(p);
    depth_.push_back(depth_[p] + 1);
    children_.emplace_back();
    children_[p].push_back(offset + v);
  }
}

bool LabeledTree::is_ancestor(std::size_t a, std::size_t b) const {
  while (depth_[b] > depth_[a]) b = parent_[b];
  return a == b;
}

std::size_t LabeledTree::meet(std::size_t a, std::size_t b) const {
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

LabeledTree LabeledTree::induced(std::span<const std::size_t> nodes) const {
  LabeledTree out;
  if (nodes.empty()) return out;
  if (!std::is_sorted(nodes.begin(), nodes.end())) throw InputError("node subset must be sorted");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!std::binary_search(nodes.begin(), nodes.end(), meet(nodes[i], nodes[j]))) {
        throw InputError("node subset is not meet-closed");
      }
    }
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.labels_.push_back(labels_[nodes[i]]);
    out.children_.emplace_back();
    if (i == 0) {
      out.parent_.push_back(kNoParent);
      out.depth_.push_back(0);
      continue;
    }
    // Nearest proper ancestor inside the subset; preorder puts it earlier.
    std::size_t p = i;
    while (!is_ancestor(nodes[p - 1], nodes[i])) --p;
    --p;
    out.parent_.push_back(p);
    out.depth_.push_back(out.depth_[p] + 1);
    out.children_[p].push_back(i);
  }
  return out;
}

std::string_view to_string(TreeOrderKind kind) {
  switch (kind) {
    case TreeOrderKind::kOrd1: return "1";
    case TreeOrderKind::kOrdI: return "i";
    case TreeOrderKind::kOrdS: return "s";
    case TreeOrderKind::kOrdM: return "m";
  }
  return "?";
}

std::optional<TreeOrderKind> parse_tree_order_kind(std::string_view text) {
  for (auto k : {TreeOrderKind::kOrd1, TreeOrderKind::kOrdI, TreeOrderKind::kOrdS,
                 TreeOrderKind::kOrdM}) {
    if (to_string(k) == text) return k;
  }
  return std::nullopt;
}

namespace {

using BoolGrid = std::vector<std::vector<char>>;

BoolGrid domination(const QPlus& alphabet, const LabeledTree& s, const LabeledTree& t) {
  BoolGrid dom(s.size(), std::vector<char>(t.size(), 0));
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) dom[x][y] = alphabet.leq(s.label(x), t.label(y));
  }
  return dom;
}

bool same_shape(const LabeledTree& s, const LabeledTree& t) {
  if (s.size() != t.size()) return false;
  for (std::size_t v = 1; v < s.size(); ++v) {
    if (s.parent(v) != t.parent(v)) return false;
  }
  return true;
}

// Condition between an earlier node u and a later node v (u < v in preorder)
// under the map f.
bool pair_ok(TreeOrderKind kind, const LabeledTree& s, const LabeledTree& t, std::size_t u,
             std::size_t v, const TreeMap& f) {
  switch (kind) {
    case TreeOrderKind::kOrd1:
      return f[u] != f[v] && f[s.meet(u, v)] == t.meet(f[u], f[v]);
    case TreeOrderKind::kOrdS:
      return !s.is_ancestor(u, v) || (f[u] != f[v] && t.is_ancestor(f[u], f[v]));
    case TreeOrderKind::kOrdM:
      return !s.is_ancestor(u, v) || t.is_ancestor(f[u], f[v]);
    case TreeOrderKind::kOrdI:
      return f[u] == u && f[v] == v;
  }
  return false;
}

// Kuhn's augmenting paths: children of x to distinct children of y.
bool match_children(std::span<const std::size_t> left, std::span<const std::size_t> right,
                    const std::function<bool(std::size_t, std::size_t)>& edge,
                    std::vector<std::size_t>* assignment) {
  if (left.size() > right.size()) return false;
  constexpr std::size_t kFree = static_cast<std::size_t>(-1);
  std::vector<std::size_t> owner(right.size(), kFree);
  std::function<bool(std::size_t, std::vector<char>&)> augment =
      [&](std::size_t i, std::vector<char>& seen) {
        for (std::size_t j = 0; j < right.size(); ++j) {
          if (seen[j] || !edge(left[i], right[j])) continue;
          seen[j] = 1;
          if (owner[j] == kFree || augment(owner[j], seen)) {
            owner[j] = i;
            return true;
          }
        }
        return false;
      };
  for (std::size_t i = 0; i < left.size(); ++i) {
    std::vector<char> seen(right.size(), 0);
    if (!augment(i, seen)) return false;
  }
  if (assignment) {
    assignment->assign(left.size(), 0);
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (owner[j] != kFree) (*assignment)[owner[j]] = right[j];
    }
  }
  return true;
}

class TreeMatcher {
 public:
  TreeMatcher(TreeOrderKind kind, const LabeledTree& s, const LabeledTree& t, BoolGrid dom)
      : kind_(kind), s_(s), t_(t), dom_(std::move(dom)) {
    at_.assign(s.size(), std::vector<char>(t.size(), 0));
    within_.assign(s.size(), std::vector<char>(t.size(), 0));
    // Descendants carry larger preorder indices, so reverse order settles
    // every dependency first.
    for (std::size_t y = t.size(); y-- > 0;) {
      for (std::size_t x = s.size(); x-- > 0;) {
        at_[x][y] = root_fits(x, y, nullptr);
        bool w = at_[x][y];
        for (std::size_t cy : t.children(y)) w = w || within_[x][cy];
        within_[x][y] = w;
      }
    }
  }

  std::optional<TreeMap> witness() const {
    if (!within_[0][0]) return std::nullopt;
    TreeMap f(s_.size(), 0);
    place(0, 0, f);
    return f;
  }

 private:
  // x mapped exactly onto y, its subtree somewhere at or below y.
  bool root_fits(std::size_t x, std::size_t y, std::vector<std::size_t>* images) const {
    if (!dom_[x][y]) return false;
    const auto kids = s_.children(x);
    switch (kind_) {
      case TreeOrderKind::kOrdM:
        if (images) images->assign(kids.size(), y);
        return std::all_of(kids.begin(), kids.end(),
                           [&](std::size_t cx) { return within_[cx][y] != 0; });
      case TreeOrderKind::kOrdS: {
        if (images) images->clear();
        for (std::size_t cx : kids) {
          const auto tk = t_.children(y);
          auto it = std::find_if(tk.begin(), tk.end(),
                                 [&](std::size_t cy) { return within_[cx][cy] != 0; });
          if (it == tk.end()) return false;
          if (images) images->push_back(*it);
        }
        return true;
      }
      case TreeOrderKind::kOrd1:
        return match_children(
            kids, t_.children(y),
            [&](std::size_t cx, std::size_t cy) { return within_[cx][cy] != 0; }, images);
      case TreeOrderKind::kOrdI:
        break;
    }
    return false;
  }

  void place(std::size_t x, std::size_t y, TreeMap& f) const {
    if (!at_[x][y]) {
      for (std::size_t cy : t_.children(y)) {
        if (within_[x][cy]) return place(x, cy, f);
      }
      return;
    }
    f[x] = y;
    std::vector<std::size_t> images;
    root_fits(x, y, &images);
    const auto kids = s_.children(x);
    for (std::size_t i = 0; i < kids.size(); ++i) place(kids[i], images[i], f);
  }

  TreeOrderKind kind_;
  const LabeledTree& s_;
  const LabeledTree& t_;
  BoolGrid dom_;
  BoolGrid at_;
  BoolGrid within_;
};

}  // namespace

bool is_tree_embedding(const QPlus& alphabet, TreeOrderKind kind, const LabeledTree& s,
                       const LabeledTree& t, const TreeMap& f) {
  if (f.size() != s.size()) return false;
  if (kind == TreeOrderKind::kOrdI && !same_shape(s, t)) return false;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (f[v] >= t.size() || !alphabet.leq(s.label(v), t.label(f[v]))) return false;
    for (std::size_t u = 0; u < v; ++u) {
      if (!pair_ok(kind, s, t, u, v, f)) return false;
    }
  }
  return true;
}

std::optional<TreeMap> find_tree_embedding(const QPlus& alphabet, TreeOrderKind kind,
                                           const LabeledTree& s, const LabeledTree& t) {
  auto dom = domination(alphabet, s, t);
  if (s.empty()) return TreeMap{};
  if (t.empty()) return std::nullopt;
  if (kind == TreeOrderKind::kOrdI) {
    if (!same_shape(s, t)) return std::nullopt;
    for (std::size_t v = 0; v < s.size(); ++v) {
      if (!dom[v][v]) return std::nullopt;
    }
    TreeMap f(s.size());
    std::iota(f.begin(), f.end(), std::size_t{0});
    return f;
  }
  return TreeMatcher(kind, s, t, std::move(dom)).witness();
}

bool tree_leq(const QPlus& alphabet, TreeOrderKind kind, const LabeledTree& s,
              const LabeledTree& t) {
  return find_tree_embedding(alphabet, kind, s, t).has_value();
}

std::optional<TreeMap> brute_force_tree_embedding(const QPlus& alphabet, TreeOrderKind kind,
                                                  const LabeledTree& s, const LabeledTree& t) {
  if (s.size() > kBruteForceTreeLimit || t.size() > kBruteForceTreeLimit) {
    throw GuardRefusal("brute-force tree comparison is limited to " +
                       std::to_string(kBruteForceTreeLimit) + " nodes per tree");
  }
  const auto dom = domination(alphabet, s, t);
  if (kind == TreeOrderKind::kOrdI && !same_shape(s, t)) return std::nullopt;

  TreeMap f(s.size(), 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t v) {
    if (v == s.size()) return true;
    for (std::size_t y = 0; y < t.size(); ++y) {
      if (!dom[v][y]) continue;
      f[v] = y;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = pair_ok(kind, s, t, u, v, f);
      if (ok && extend(v + 1)) return true;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return f;
}

bool brute_force_tree_leq(const QPlus& alphabet, TreeOrderKind kind, const LabeledTree& s,
                          const LabeledTree& t) {
  return brute_force_tree_embedding(alphabet, kind, s, t).has_value();
}

std::size_t treetops(const LabeledTree& t) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < t.size(); ++v) n += t.is_leaf(v) ? 1 : 0;
  return n;
}

namespace {

bool meet_closed(const LabeledTree& t, std::span<const std::size_t> nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!std::binary_search(nodes.begin(), nodes.end(), t.meet(nodes[i], nodes[j]))) {
        return false;
      }
    }
  }
  return true;
}

// Smallest, then lexicographically least, qualifying subset.
std::optional<CoverEntry> cover_one(const QPlus& alphabet, const LabeledTree& t, std::size_t n) {
  if (t.size() > kCoverTreeLimit) {
    throw GuardRefusal("cover search is limited to trees with " +
                       std::to_string(kCoverTreeLimit) + " nodes");
  }
  if (t.empty()) return CoverEntry{};
  const std::size_t size = t.size();
  for (std::size_t k = 1; k <= size; ++k) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      if (meet_closed(t, pick)) {
        LabeledTree sub = t.induced(pick);
        if (treetops(sub) <= n) {
          if (auto onto = find_tree_embedding(alphabet, TreeOrderKind::kOrdM, t, sub)) {
            return CoverEntry{pick, std::move(sub), pick, std::move(*onto)};
          }
        }
      }
      // Next k-combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == size - k + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<CoverSolution> find_cover(const QPlus& alphabet, std::span<const LabeledTree> family,
                                        std::size_t n) {
  CoverSolution out;
  out.bound = n;
  for (const auto& t : family) {
    auto entry = cover_one(alphabet, t, n);
    if (!entry) return std::nullopt;
    out.entries.push_back(std::move(*entry));
  }
  return out;
}

std::size_t minimal_cover_number(const QPlus& alphabet, std::span<const LabeledTree> family) {
  std::size_t most = 0;
  for (const auto& t : family) {
    if (t.size() > kCoverTreeLimit) {
      throw GuardRefusal("cover search is limited to trees with " +
                         std::to_string(kCoverTreeLimit) + " nodes");
    }
    most = std::max(most, treetops(t));
  }
  for (std::size_t n = 0; n < most; ++n) {
    if (find_cover(alphabet, family, n)) return n;
  }
  return most;
}

bool validate_cover(const QPlus& alphabet, std::span<const LabeledTree> family,
                    const CoverSolution& cover) {
  if (cover.entries.size() != family.size()) return false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& t = family[i];
    const auto& e = cover.entries[i];
    if (!std::is_sorted(e.nodes.begin(), e.nodes.end())) return false;
    if (std::any_of(e.nodes.begin(), e.nodes.end(), [&](std::size_t v) { return v >= t.size(); }))
      return false;
    if (!meet_closed(t, e.nodes)) return false;
    if (!(t.induced(e.nodes) == e.subtree)) return false;
    if (treetops(e.subtree) > cover.bound) return false;
    if (e.into_original != e.nodes) return false;
    if (!is_tree_embedding(alphabet, TreeOrderKind::kOrdM, e.subtree, t, e.into_original))
      return false;
    if (!is_tree_embedding(alphabet, TreeOrderKind::kOrdM, t, e.subtree, e.onto_subtree))
      return false;
    if (!brute_force_tree_leq(alphabet, TreeOrderKind::kOrdM, e.subtree, t) ||
        !brute_force_tree_leq(alphabet, TreeOrderKind::kOrdM, t, e.subtree))
      return false;
  }
  return true;
}

namespace {

void write_tree(const LabeledTree& t, std::size_t v, std::string& out) {
  out += '(';
  out += t.label(v);
  for (std::size_t c : t.children(v)) {
    out += ' ';
    write_tree(t, c, out);
  }
  out += ')';
}

LabeledTree parse_subtree(detail::SexprLexer& lex) {
  lex.expect("(");
  auto tok = lex.next();
  if (tok == "(" || tok == ")" || tok.empty()) {
    throw InputError("expected a node label but found " + detail::SexprLexer::describe(tok));
  }
  const std::string label(tok);
  if (!parse_base(label) && !is_valid_label(label)) {
    throw InputError("invalid node label '" + label + "'");
  }
  std::vector<LabeledTree> kids;
  while (lex.peek() != ")") {
    if (lex.at_end()) throw InputError("unbalanced parentheses: missing ')'");
    kids.push_back(parse_subtree(lex));
  }
  lex.expect(")");
  return LabeledTree::node(label, std::move(kids));
}

}  // namespace

std::string to_sexpr(const LabeledTree& t) {
  if (t.empty()) return "()";
  std::string out;
  write_tree(t, 0, out);
  return out;
}

LabeledTree parse_tree(std::string_view text) {
  detail::SexprLexer lex(text);
  LabeledTree out;
  if (lex.peek() == "(") {
    detail::SexprLexer probe = lex;
    probe.next();
    if (probe.peek() == ")") {
      lex.next();
      lex.next();
    } else {
      out = parse_subtree(lex);
    }
  } else {
    throw InputError("expected '(' but found " + detail::SexprLexer::describe(lex.peek()));
  }
  if (!lex.at_end()) {
    throw InputError("trailing input after tree: " + detail::SexprLexer::describe(lex.peek()));
  }
  return out;
}

}  // namespace aronszajn
