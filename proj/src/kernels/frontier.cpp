#include <algorithm>

#include "burn/error.hpp"
#include "burn/serial.hpp"
#include "detail.hpp"

namespace burn {

namespace {

// Line index of coordinates 1..d-1 (axis d-1 fastest), or -1 outside the box.
std::int64_t index_of(const Box& box, const std::int64_t* coords) {
  std::int64_t index = 0;
  for (std::size_t i = 1; i < box.dim(); ++i) {
    const auto& ax = box.axes[i];
    if (!ax.contains(coords[i])) return -1;
    index = index * ax.length() + (coords[i] - ax.lo);
  }
  return index;
}

void decode(const Box& box, std::int64_t index, std::vector<std::int64_t>& coords) {
  for (std::size_t i = box.dim(); i-- > 1;) {
    const std::int64_t len = box.axes[i].length();
    coords[i] = box.axes[i].lo + index % len;
    index /= len;
  }
}

// First interval whose hi >= x.
IntervalList::const_iterator seek(const IntervalList& list, std::int64_t x) {
  return std::lower_bound(list.begin(), list.end(), x, [](const Interval& iv, std::int64_t v) { return iv.hi < v; });
}

bool hits(const IntervalList& list, std::int64_t lo, std::int64_t hi) {
  const auto it = seek(list, lo);
  return it != list.end() && it->lo <= hi;
}

}  // namespace

FrontierState::FrontierState(Box box, std::int64_t time) : box_(std::move(box)), time_(time) {
  if (box_.dim() == 0) throw DimensionError("frontier needs d >= 1");
  std::int64_t lines = 1;
  for (std::size_t i = 1; i < box_.dim(); ++i) lines = checked_mul(lines, box_.axes[i].length());
  lines_.assign(static_cast<std::size_t>(lines), {});
}

FrontierState::FrontierState(Box box, std::int64_t time, std::vector<IntervalList> lines)
    : box_(std::move(box)), time_(time), lines_(std::move(lines)) {
  for (const auto& line : lines_)
    for (const auto& iv : line) burned_ += iv.length();
}

std::int64_t FrontierState::line_index(const Point& p) const {
  if (p.dim() != box_.dim()) throw DimensionError("point dimension differs from frontier box");
  return index_of(box_, p.coords.data());
}

bool FrontierState::contains(const Point& p) const {
  const auto idx = line_index(p);
  return idx >= 0 && hits(lines_[static_cast<std::size_t>(idx)], p[0], p[0]);
}

bool FrontierState::touches(const Point& p) const {
  const auto idx = line_index(p);
  if (idx >= 0 && hits(lines_[static_cast<std::size_t>(idx)], p[0] - 1, p[0] + 1)) return true;
  std::vector<std::int64_t> q = p.coords;
  for (std::size_t i = 1; i < box_.dim(); ++i) {
    for (const std::int64_t step : {-1, +1}) {
      q[i] = p[i] + step;
      const auto j = index_of(box_, q.data());
      if (j >= 0 && hits(lines_[static_cast<std::size_t>(j)], p[0], p[0])) return true;
    }
    q[i] = p[i];
  }
  return false;
}

void FrontierState::ignite(const Point& p) {
  if (!box_.contains(p)) throw OutsideGrid("activation " + p.str() + " outside grid " + box_.str());
  if (contains(p)) throw InvalidActivation("cell " + p.str() + " is already burned");
  detail::insert_cell(lines_[static_cast<std::size_t>(line_index(p))], p[0]);
  ++burned_;
}

namespace detail {

void insert_cell(IntervalList& list, std::int64_t x) {
  auto it = list.begin() + (seek(list, x - 1) - list.cbegin());
  if (it != list.end() && it->lo <= x + 1) {
    if (it->contains(x)) return;
    if (it->hi == x - 1) {
      it->hi = x;
      const auto nx = it + 1;
      if (nx != list.end() && nx->lo == x + 1) {
        it->hi = nx->hi;
        list.erase(nx);
      }
    } else {
      it->lo = x;  // it->lo == x + 1
    }
    return;
  }
  list.insert(it, Interval{x, x});
}

std::int64_t frontier_prepare(const FrontierState& state, const Box& new_box, const Activation& activation) {
  const Box& old_box = state.box();
  if (new_box.dim() != old_box.dim()) throw DimensionError("frontier step changes dimension");
  if (!new_box.contains(old_box)) throw ConfigError("grid shrinks between steps");
  if (activation.time != state.time() + 1)
    throw ConfigError("activation time " + std::to_string(activation.time) + " does not follow " +
                      std::to_string(state.time()));
  if (activation.is_skip()) return -1;
  const Point& v = *activation.point;
  if (v.dim() != new_box.dim()) throw DimensionError("activation dimension differs from grid");
  if (!new_box.contains(v))
    throw OutsideGrid("activation " + v.str() + " outside grid " + new_box.str() + " at n=" +
                      std::to_string(activation.time));
  if (state.touches(v))
    throw InvalidActivation("activation " + v.str() + " at n=" + std::to_string(activation.time) +
                            " is in the closed neighbourhood of the burned set");
  return index_of(new_box, v.coords.data());
}

IntervalList frontier_line(const FrontierState& state, const Box& new_box, std::int64_t new_line) {
  const Box& old_box = state.box();
  const std::size_t d = new_box.dim();
  std::vector<std::int64_t> q(d, 0);
  decode(new_box, new_line, q);
  IntervalList out;
  const auto self = index_of(old_box, q.data());
  if (self >= 0)
    for (const auto& iv : state.line(static_cast<std::size_t>(self))) out.push_back({iv.lo - 1, iv.hi + 1});
  for (std::size_t i = 1; i < d; ++i) {
    const std::int64_t keep = q[i];
    for (const std::int64_t step : {-1, +1}) {
      q[i] = keep + step;
      const auto j = index_of(old_box, q.data());
      if (j >= 0) {
        const auto& src = state.line(static_cast<std::size_t>(j));
        out.insert(out.end(), src.begin(), src.end());
      }
    }
    q[i] = keep;
  }
  if (out.empty()) return out;
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  merge_sorted_intervals(out);
  const Interval clip = new_box.axes[0];
  std::size_t w = 0;
  for (const auto& iv : out) {
    const Interval c{std::max(iv.lo, clip.lo), std::min(iv.hi, clip.hi)};
    if (!c.empty()) out[w++] = c;
  }
  out.resize(w);
  return out;
}

}  // namespace detail

FrontierState frontier_step(const FrontierState& state, const Box& new_box, const Activation& activation) {
  const auto target = detail::frontier_prepare(state, new_box, activation);
  const FrontierState shape(new_box, 0);
  const auto lines = static_cast<std::int64_t>(shape.line_count());
  std::vector<IntervalList> out(static_cast<std::size_t>(lines));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t l = 0; l < lines; ++l) out[static_cast<std::size_t>(l)] = detail::frontier_line(state, new_box, l);
  if (target >= 0) detail::insert_cell(out[static_cast<std::size_t>(target)], (*activation.point)[0]);
  return FrontierState(new_box, activation.time, std::move(out));
}

namespace serial {

FrontierState frontier_step(const FrontierState& state, const Box& new_box, const Activation& activation) {
  const auto target = detail::frontier_prepare(state, new_box, activation);
  const FrontierState shape(new_box, 0);
  const auto lines = static_cast<std::int64_t>(shape.line_count());
  std::vector<IntervalList> out(static_cast<std::size_t>(lines));
  for (std::int64_t l = 0; l < lines; ++l) out[static_cast<std::size_t>(l)] = detail::frontier_line(state, new_box, l);
  if (target >= 0) detail::insert_cell(out[static_cast<std::size_t>(target)], (*activation.point)[0]);
  return FrontierState(new_box, activation.time, std::move(out));
}

}  // namespace serial

}  // namespace burn
