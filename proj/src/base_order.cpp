#include "aronszajn/base_order.hpp"

#include "aronszajn/errors.hpp"

namespace aronszajn {

BaseOrder reverse(BaseOrder b) {
  switch (b) {
    case BaseOrder::kOmega: return BaseOrder::kOmegaStar;
    case BaseOrder::kOmegaStar: return BaseOrder::kOmega;
    case BaseOrder::kRationals: return BaseOrder::kRationals;
    case BaseOrder::kCountryman: return BaseOrder::kCountrymanStar;
    case BaseOrder::kCountrymanStar: return BaseOrder::kCountryman;
  }
  return b;
}

bool is_dense(BaseOrder b) {
  return b != BaseOrder::kOmega && b != BaseOrder::kOmegaStar;
}

bool is_countable(BaseOrder b) {
  return b != BaseOrder::kCountryman && b != BaseOrder::kCountrymanStar;
}

std::string_view symbol(BaseOrder b) {
  switch (b) {
    case BaseOrder::kOmega: return "w";
    case BaseOrder::kOmegaStar: return "w*";
    case BaseOrder::kRationals: return "Q";
    case BaseOrder::kCountryman: return "C";
    case BaseOrder::kCountrymanStar: return "C*";
  }
  return "?";
}

std::optional<BaseOrder> parse_base(std::string_view text) {
  for (BaseOrder b : kAllBases) {
    if (symbol(b) == text) return b;
  }
  return std::nullopt;
}

BaseTable::BaseTable(const Matrix& m) : m_(m) {
  for (int a = 0; a < 5; ++a) {
    if (!m_[a][a]) throw InputError("base table is not reflexive");
    for (int b = 0; b < 5; ++b) {
      auto ra = static_cast<int>(reverse(static_cast<BaseOrder>(a)));
      auto rb = static_cast<int>(reverse(static_cast<BaseOrder>(b)));
      if (m_[a][b] != m_[ra][rb]) {
        throw InputError("base table is not invariant under reversal");
      }
      for (int c = 0; c < 5; ++c) {
        if (m_[a][b] && m_[b][c] && !m_[a][c]) {
          throw InputError("base table is not transitive");
        }
      }
    }
  }
}

BaseTable BaseTable::standard(bool rationals_below_countryman) {
  constexpr int w = 0, ws = 1, q = 2, c = 3, cs = 4;
  Matrix m{};
  for (int i = 0; i < 5; ++i) m[i][i] = true;
  for (int low : {w, ws}) {
    for (int high : {q, c, cs}) m[low][high] = true;
  }
  m[q][c] = rationals_below_countryman;
  m[q][cs] = rationals_below_countryman;
  return BaseTable(m);
}

bool base_leq(BaseOrder a, BaseOrder b) {
  static const BaseTable table = BaseTable::standard();
  return table.leq(a, b);
}

}  // namespace aronszajn
