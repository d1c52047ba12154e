#include "aronszajn/quasi_order.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "aronszajn/errors.hpp"

namespace aronszajn {

bool is_reserved_label(std::string_view name) {
  return parse_base(name).has_value();
}

bool is_valid_label(std::string_view name) {
  if (name.empty() || is_reserved_label(name)) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
           c == '.' || c == '-';
  });
}

QuasiOrder::QuasiOrder(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& relations,
                       Closure closure)
    : elements_(std::move(elements)) {
  if (elements_.empty()) throw InputError("quasi-order needs at least one element");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const auto& name = elements_[i];
    if (is_reserved_label(name)) {
      throw InputError("reserved base symbol used as label: '" + name + "'");
    }
    if (!is_valid_label(name)) throw InputError("invalid label: '" + name + "'");
    if (!index_.emplace(name, i).second) {
      throw InputError("duplicate label: '" + name + "'");
    }
  }
  const std::size_t n = elements_.size();
  leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq_[i * n + i] = 1;
  for (const auto& [a, b] : relations) leq_[index_of(a) * n + index_of(b)] = 1;

  // Warshall.
  std::vector<char> closed = leq_;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!closed[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (closed[k * n + j]) closed[i * n + j] = 1;
      }
    }
  }
  if (closure == Closure::kStrict && closed != leq_) {
    throw InputError("declared relation is not transitive");
  }
  leq_ = std::move(closed);
}

QuasiOrder QuasiOrder::unit() { return antichain({std::string(kUnitLabel)}); }

QuasiOrder QuasiOrder::antichain(std::vector<std::string> elements) {
  return QuasiOrder(std::move(elements), {});
}

QuasiOrder QuasiOrder::chain(std::vector<std::string> elements) {
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    rel.emplace_back(elements[i], elements[i + 1]);
  }
  return QuasiOrder(std::move(elements), rel);
}

bool QuasiOrder::contains(std::string_view name) const {
  return index_.count(std::string(name)) > 0;
}

std::size_t QuasiOrder::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw InputError("unknown label: '" + std::string(name) + "'");
  return it->second;
}

bool label_leq(const QuasiOrder& q, std::string_view a, std::string_view b) {
  return q.leq(a, b);
}

std::vector<std::string> maximal_antichain(const QuasiOrder& q,
                                           std::span<const std::string> s) {
  std::vector<std::size_t> idx;
  idx.reserve(s.size());
  for (const auto& name : s) idx.push_back(q.index_of(name));

  std::vector<std::string> out;
  for (std::size_t i : idx) {
    bool keep = true;
    for (std::size_t j : idx) {
      const bool strictly_below = q.leq(i, j) && !q.leq(j, i);
      const bool better_rep = q.leq(i, j) && q.leq(j, i) && q.elements()[j] < q.elements()[i];
      if (strictly_below || better_rep) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(q.elements()[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> bad_pair_scan(
    const QuasiOrder& q, std::span<const std::string> seq) {
  std::vector<std::size_t> idx;
  idx.reserve(seq.size());
  for (const auto& name : seq) idx.push_back(q.index_of(name));
  for (std::size_t j = 1; j < idx.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (q.leq(idx[i], idx[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

QuasiOrder parse_quasi_order(std::string_view text, QuasiOrder::Closure closure) {
  std::optional<std::vector<std::string>> elements;
  std::vector<std::pair<std::string, std::string>> relations;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.rfind("elements:", 0) == 0) {
      if (elements) throw InputError("duplicate 'elements:' line");
      elements = words(line.substr(9));
      continue;
    }
    auto w = words(line);
    if (w.size() != 3 || w[1] != "<=") {
      throw InputError("expected 'a <= b', got: '" + std::string(line) + "'");
    }
    relations.emplace_back(w[0], w[2]);
  }
  if (!elements) throw InputError("missing 'elements:' line");
  return QuasiOrder(std::move(*elements), relations, closure);
}

std::string to_text(const QuasiOrder& q) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& e : q.elements()) out << ' ' << e;
  out << '\n';
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i != j && q.leq(i, j)) out << q.elements()[i] << " <= " << q.elements()[j] << '\n';
    }
  }
  return out.str();
}

bool QPlus::contains(std::string_view name) const {
  return parse_base(name).has_value() || labels_.contains(name);
}

bool QPlus::leq(std::string_view a, std::string_view b) const {
  const auto ba = parse_base(a);
  const auto bb = parse_base(b);
  if (ba && bb) return table_.leq(*ba, *bb);
  if (!ba && !bb) return labels_.leq(a, b);
  if (!contains(a)) throw InputError("unknown label: '" + std::string(a) + "'");
  if (!contains(b)) throw InputError("unknown label: '" + std::string(b) + "'");
  return false;
}

}  // namespace aronszajn
