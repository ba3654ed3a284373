#include "cuberep/bits.hpp"

#include <sstream>

namespace cuberep {

std::vector<int> positions_of(PositionSet set) {
  std::vector<int> out;
  out.reserve(set_size(set));
  for_each_position(set, [&](int p) { out.push_back(p); });
  return out;
}

PositionSet set_of(const std::vector<int>& positions) {
  PositionSet s = 0;
  for (int p : positions) s |= position_bit(p);
  return s;
}

std::strong_ordering compare_sets(PositionSet a, PositionSet b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb ? std::strong_ordering::less : std::strong_ordering::greater;
    a &= a - 1;
    b &= b - 1;
  }
  if (a == b) return std::strong_ordering::equal;
  return a == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string render_set(PositionSet set) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_position(set, [&](int p) {
    if (!first) os << ',';
    os << p;
    first = false;
  });
  os << '}';
  return os.str();
}

}  // namespace cuberep
