#include "tropfan/semiring.hpp"

namespace tropfan {

TropValue trop_add(const TropValue& a, const TropValue& b) { return a < b ? b : a; }

TropValue trop_mul(const TropValue& a, const TropValue& b) {
  if (a.is_bottom() || b.is_bottom()) return TropValue::bottom();
  return TropValue(a.value() + b.value());
}

std::string to_string(const TropValue& a) { return a.is_bottom() ? "-inf" : to_string(a.value()); }

}  // namespace tropfan
