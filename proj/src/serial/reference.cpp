#include <map>

#include "burn/error.hpp"
#include "burn/serial.hpp"

namespace burn::serial {

namespace {

// Visits every cell of `box` in row-major order.
template <class F>
void for_each_cell(const Box& box, F&& f) {
  const std::size_t d = box.dim();
  for (const auto& ax : box.axes)
    if (ax.empty()) return;
  std::vector<std::int64_t> p(d);
  for (std::size_t i = 0; i < d; ++i) p[i] = box.axes[i].lo;
  for (;;) {
    f(p);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (p[i] < box.axes[i].hi) {
        ++p[i];
        break;
      }
      p[i] = box.axes[i].lo;
      if (i == 0) return;
    }
    if (d == 0) return;
  }
}

}  // namespace

Count brute_force_union(std::span<const Activation> activations, std::int64_t n, const Box& box) {
  std::vector<std::pair<Point, std::int64_t>> balls;
  for (const auto& a : activations) {
    if (a.is_skip()) continue;
    if (a.time > n) throw ConfigError("activation after n");
    balls.emplace_back(*a.point, n - a.time);
  }
  Count total = 0;
  for_each_cell(box, [&](const std::vector<std::int64_t>& c) {
    const Point p(c);
    for (const auto& [v, r] : balls)
      if (l1_distance(p, v) <= r) {
        ++total;
        return;
      }
  });
  return total;
}

std::vector<Count> dense_burn_counts(std::span<const Activation> activations, const GrowthSpec& growth,
                                     std::int64_t horizon) {
  const std::size_t d = growth.dim();
  const Box outer = box_at(growth, horizon);
  std::vector<std::int64_t> stride(d, 1);
  for (std::size_t i = d; i-- > 1;) stride[i - 1] = stride[i] * outer.axes[i].length();
  const auto flat = [&](const std::vector<std::int64_t>& p) {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < d; ++i) idx += (p[i] - outer.axes[i].lo) * stride[i];
    return static_cast<std::size_t>(idx);
  };

  std::map<std::int64_t, const Activation*> by_time;
  for (const auto& a : activations) by_time[a.time] = &a;

  std::vector<char> burned(static_cast<std::size_t>(outer.cells()), 0), next;
  std::vector<Count> counts;
  for (std::int64_t n = 0; n <= horizon; ++n) {
    const Box box = box_at(growth, n);
    if (!outer.contains(box)) throw ConfigError("grid is not nested in the final grid");
    next.assign(burned.size(), 0);
    Count total = 0;
    if (n > 0) {
      for_each_cell(box, [&](const std::vector<std::int64_t>& c) {
        const std::size_t idx = flat(c);
        bool hit = burned[idx] != 0;
        for (std::size_t i = 0; i < d && !hit; ++i) {
          if (c[i] > outer.axes[i].lo && burned[idx - static_cast<std::size_t>(stride[i])]) hit = true;
          if (c[i] < outer.axes[i].hi && burned[idx + static_cast<std::size_t>(stride[i])]) hit = true;
        }
        if (hit) {
          next[idx] = 1;
          ++total;
        }
      });
    }
    const auto it = by_time.find(n);
    if (it != by_time.end() && !it->second->is_skip()) {
      const Point& v = *it->second->point;
      if (!box.contains(v)) throw OutsideGrid("activation " + v.str() + " outside grid at n=" + std::to_string(n));
      auto& cell = next[flat(v.coords)];
      if (!cell) {
        cell = 1;
        ++total;
      }
    }
    burned.swap(next);
    counts.push_back(total);
  }
  return counts;
}

}  // namespace burn::serial
