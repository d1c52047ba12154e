#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "aronszajn/base_order.hpp"

namespace aronszajn {

/// Label used by the default one-element alphabet and by d_line.
inline constexpr std::string_view kUnitLabel = "u";

/// True for the five base-order symbols, which may never name a label.
bool is_reserved_label(std::string_view name);

/// True if `name` is a syntactically valid label identifier.
bool is_valid_label(std::string_view name);

/// A finite reflexive-transitive relation on named labels. Immutable once
/// built.
class QuasiOrder {
 public:
  enum class Closure {
    kApply,   // close the declared pairs transitively
    kStrict,  // reject input whose declared pairs are not already transitive
  };

  QuasiOrder(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& relations,
             Closure closure = Closure::kApply);

  static QuasiOrder unit();
  static QuasiOrder antichain(std::vector<std::string> elements);
  /// elements[0] < elements[1] < ...
  static QuasiOrder chain(std::vector<std::string> elements);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  bool contains(std::string_view name) const;
  /// Throws InputError for unknown labels.
  std::size_t index_of(std::string_view name) const;

  bool leq(std::size_t i, std::size_t j) const { return leq_[i * size() + j]; }
  bool leq(std::string_view a, std::string_view b) const {
    return leq(index_of(a), index_of(b));
  }

  friend bool operator==(const QuasiOrder& a, const QuasiOrder& b) {
    return a.elements_ == b.elements_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<char> leq_;
};

bool label_leq(const QuasiOrder& q, std::string_view a, std::string_view b);

/// The maximal elements of `s`, one per equivalence class (the
/// lexicographically least name represents its class), sorted by name.
std::vector<std::string> maximal_antichain(const QuasiOrder& q,
                                           std::span<const std::string> s);

/// First (i, j), i < j, in scan order with seq[i] <= seq[j]; nullopt when the
/// sequence is bad.
std::optional<std::pair<std::size_t, std::size_t>> bad_pair_scan(
    const QuasiOrder& q, std::span<const std::string> seq);

/// Reads the text format:
///
///   elements: a b c
///   a <= b
///
/// Blank lines and `#` comments are ignored.
QuasiOrder parse_quasi_order(std::string_view text,
                             QuasiOrder::Closure closure = QuasiOrder::Closure::kApply);

/// Writes the text format with every non-reflexive pair listed.
std::string to_text(const QuasiOrder& q);

/// Q⁺: a label alphabet extended by the five base symbols. Base symbols are
/// compared by the base table, labels by the quasi-order, and the two parts
/// are mutually incomparable.
class QPlus {
 public:
  explicit QPlus(QuasiOrder labels, BaseTable table = BaseTable::standard())
      : labels_(std::move(labels)), table_(table) {}

  const QuasiOrder& labels() const { return labels_; }
  const BaseTable& table() const { return table_; }

  bool contains(std::string_view name) const;
  /// Throws InputError when either name is outside Q⁺.
  bool leq(std::string_view a, std::string_view b) const;

 private:
  QuasiOrder labels_;
  BaseTable table_;
};

}  // namespace aronszajn
