#include "burn/activation.hpp"

#include "burn/error.hpp"

namespace burn {

bool is_valid_activation(std::span<const Activation> history, const Point& v, std::int64_t n,
                         const Box& box) {
  if (!box.contains(v))
    throw OutsideGrid("activation " + v.str() + " outside grid " + box.str() + " at n=" + std::to_string(n));
  for (const auto& a : history) {
    if (a.is_skip()) continue;
    if (a.time >= n) throw ConfigError("history contains activations at or after time n");
    if (l1_distance(v, *a.point) < n - a.time + 1) return false;
  }
  return true;
}

}  // namespace burn
