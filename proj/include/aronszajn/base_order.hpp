#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace aronszajn {

/// Index orders over which shuffles and unbounded sums are taken.
enum class BaseOrder : unsigned char {
  kOmega,
  kOmegaStar,
  kRationals,
  kCountryman,      // C, the minimal Countryman line
  kCountrymanStar,  // C*, its reverse
};

inline constexpr std::array<BaseOrder, 5> kAllBases = {
    BaseOrder::kOmega, BaseOrder::kOmegaStar, BaseOrder::kRationals,
    BaseOrder::kCountryman, BaseOrder::kCountrymanStar};

/// ω ↔ ω*, C ↔ C*, ℚ fixed.
BaseOrder reverse(BaseOrder b);

/// Dense bases (ℚ, C, C*) carry shuffles; ω and ω* carry unbounded sums.
bool is_dense(BaseOrder b);

/// C and C* have no countable realization.
bool is_countable(BaseOrder b);

/// Text symbol: "w", "w*", "Q", "C", "C*".
std::string_view symbol(BaseOrder b);
std::optional<BaseOrder> parse_base(std::string_view text);

/// Embeddability table among the five base orders. Always reflexive,
/// transitive and invariant under simultaneous reversal of both arguments.
class BaseTable {
 public:
  using Matrix = std::array<std::array<bool, 5>, 5>;

  /// Throws InputError if the matrix is not reflexive, transitive and
  /// reversal-invariant.
  explicit BaseTable(const Matrix& m);

  /// ω, ω* below every dense base; ℚ below C and C* unless
  /// `rationals_below_countryman` is false; C and C* incomparable.
  static BaseTable standard(bool rationals_below_countryman = true);

  bool leq(BaseOrder a, BaseOrder b) const {
    return m_[static_cast<int>(a)][static_cast<int>(b)];
  }

 private:
  Matrix m_;
};

/// Lookup in the standard table.
bool base_leq(BaseOrder a, BaseOrder b);

}  // namespace aronszajn
