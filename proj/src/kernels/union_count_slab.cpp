#include <algorithm>
#include <cstdlib>

#include "burn/error.hpp"
#include "burn/serial.hpp"
#include "detail.hpp"

namespace burn {

Count cell_budget() {
  if (const char* env = std::getenv("BURN_BUDGET_CELLS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 100'000'000;
}

namespace detail {

BallSet collect_balls(std::span<const Activation> activations, std::int64_t n, std::size_t d) {
  check_activations(activations, n, d);
  BallSet set;
  set.d = d;
  for (const auto& a : activations) {
    if (a.is_skip()) continue;
    set.centers.insert(set.centers.end(), a.point->coords.begin(), a.point->coords.end());
    set.radii.push_back(n - a.time);
  }
  return set;
}

bool BallSet::covers(const std::int64_t* p) const {
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const std::int64_t* c = centers.data() + k * d;
    std::int64_t dist = 0;
    for (std::size_t i = 0; i < d && dist <= radii[k]; ++i) dist += std::llabs(p[i] - c[i]);
    if (dist <= radii[k]) return true;
  }
  return false;
}

std::int64_t slab_line_count(const Box& box) {
  std::int64_t lines = 1;
  for (std::size_t i = 0; i + 1 < box.dim(); ++i) lines = checked_mul(lines, box.axes[i].length());
  return lines;
}

void merge_sorted_intervals(std::vector<Interval>& v) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (out > 0 && v[i].lo <= v[out - 1].hi + 1) {
      v[out - 1].hi = std::max(v[out - 1].hi, v[i].hi);
    } else {
      v[out++] = v[i];
    }
  }
  v.resize(out);
}

Count slab_line(const BallSet& balls, const Box& box, std::int64_t line, std::vector<Interval>& scratch) {
  const std::size_t d = box.dim();
  // Decode the prefix, axis d-2 fastest.
  std::int64_t prefix[64];
  std::int64_t rest = line;
  for (std::size_t i = d - 1; i-- > 0;) {
    const std::int64_t len = box.axes[i].length();
    prefix[i] = box.axes[i].lo + rest % len;
    rest /= len;
  }
  const Interval last = box.axes[d - 1];
  scratch.clear();
  for (std::size_t k = 0; k < balls.size(); ++k) {
    const std::int64_t* c = balls.centers.data() + k * d;
    std::int64_t half = balls.radii[k];
    for (std::size_t i = 0; i + 1 < d && half >= 0; ++i) half -= std::llabs(prefix[i] - c[i]);
    if (half < 0) continue;
    const Interval iv{std::max(last.lo, c[d - 1] - half), std::min(last.hi, c[d - 1] + half)};
    if (!iv.empty()) scratch.push_back(iv);
  }
  std::sort(scratch.begin(), scratch.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  merge_sorted_intervals(scratch);
  Count total = 0;
  for (const auto& iv : scratch) total += iv.length();
  return total;
}

namespace {

void check_slab(const BallSet& balls, const Box& box, Count budget) {
  if (box.dim() == 0 || box.dim() > 64) throw DimensionError("union_count_slab needs 1 <= d <= 64");
  const Count cells = box.cells();
  const Count work = cells > budget ? cells : checked_mul(cells, std::max<Count>(1, static_cast<Count>(balls.size())));
  if (work > budget)
    throw BudgetExceeded("slab engine needs " + std::to_string(cells) + " cells x " + std::to_string(balls.size()) +
                         " balls, over budget " + std::to_string(budget));
}

}  // namespace

}  // namespace detail

Count union_count_slab(std::span<const Activation> activations, std::int64_t n, const Box& box, Count budget) {
  const auto balls = detail::collect_balls(activations, n, box.dim());
  detail::check_slab(balls, box, budget);
  if (balls.size() == 0) return 0;
  const std::int64_t lines = detail::slab_line_count(box);
  Count total = 0;
#pragma omp parallel reduction(+ : total)
  {
    std::vector<Interval> scratch;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t line = 0; line < lines; ++line) total += detail::slab_line(balls, box, line, scratch);
  }
  return total;
}

namespace serial {

Count union_count_slab(std::span<const Activation> activations, std::int64_t n, const Box& box, Count budget) {
  const auto balls = detail::collect_balls(activations, n, box.dim());
  detail::check_slab(balls, box, budget);
  if (balls.size() == 0) return 0;
  const std::int64_t lines = detail::slab_line_count(box);
  std::vector<Interval> scratch;
  Count total = 0;
  for (std::int64_t line = 0; line < lines; ++line) total += detail::slab_line(balls, box, line, scratch);
  return total;
}

}  // namespace serial

}  // namespace burn
