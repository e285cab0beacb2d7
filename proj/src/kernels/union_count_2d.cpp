#include <algorithm>
#include <cstdlib>

#include "burn/error.hpp"
#include "burn/serial.hpp"
#include "detail.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace burn {

namespace detail {

namespace {

std::int64_t mod2(std::int64_t v) { return v & 1; }

// Integers of the given parity in [a, b).
std::int64_t parity_count(std::int64_t a, std::int64_t b, std::int64_t parity) {
  if (b <= a) return 0;
  const std::int64_t evens = ceil_div(b, 2) - ceil_div(a, 2);
  return parity == 0 ? evens : (b - a) - evens;
}

// Segment tree over elementary w segments [wb[i], wb[i+1]). A node with a
// positive cover count is fully covered; otherwise its covered parity counts
// come from its children.
class ParityCoverTree {
 public:
  explicit ParityCoverTree(const std::vector<std::int64_t>& wb)
      : wb_(wb), leaves_(static_cast<std::int64_t>(wb.size()) - 1) {
    const auto size = static_cast<std::size_t>(std::max<std::int64_t>(1, 4 * leaves_));
    cover_.assign(size, 0);
    even_.assign(size, 0);
    odd_.assign(size, 0);
  }

  void add(std::int64_t w0, std::int64_t w1_exclusive, int delta) {
    const auto l = leaf(w0);
    const auto r = leaf(w1_exclusive) - 1;
    update(1, 0, leaves_ - 1, l, r, delta);
  }

  bool empty() const { return even_[1] == 0 && odd_[1] == 0 && cover_[1] == 0; }

  std::int64_t query(std::int64_t a, std::int64_t b, std::int64_t parity) const {
    if (leaves_ <= 0) return 0;
    a = std::max(a, wb_.front());
    b = std::min(b, wb_.back());
    if (b <= a) return 0;
    return query(1, 0, leaves_ - 1, a, b, parity);
  }

 private:
  std::int64_t leaf(std::int64_t w) const {
    return std::lower_bound(wb_.begin(), wb_.end(), w) - wb_.begin();
  }

  void pull(std::size_t node, std::int64_t l, std::int64_t r) {
    if (cover_[node] > 0) {
      even_[node] = parity_count(wb_[l], wb_[r + 1], 0);
      odd_[node] = parity_count(wb_[l], wb_[r + 1], 1);
    } else if (l == r) {
      even_[node] = odd_[node] = 0;
    } else {
      even_[node] = even_[2 * node] + even_[2 * node + 1];
      odd_[node] = odd_[2 * node] + odd_[2 * node + 1];
    }
  }

  void update(std::size_t node, std::int64_t l, std::int64_t r, std::int64_t ql, std::int64_t qr, int delta) {
    if (qr < l || r < ql) return;
    if (ql <= l && r <= qr) {
      cover_[node] += delta;
      pull(node, l, r);
      return;
    }
    const std::int64_t mid = (l + r) / 2;
    update(2 * node, l, mid, ql, qr, delta);
    update(2 * node + 1, mid + 1, r, ql, qr, delta);
    pull(node, l, r);
  }

  std::int64_t query(std::size_t node, std::int64_t l, std::int64_t r, std::int64_t a, std::int64_t b,
                     std::int64_t parity) const {
    const std::int64_t lo = wb_[l];
    const std::int64_t hi = wb_[r + 1];
    if (hi <= a || b <= lo) return 0;
    if (cover_[node] > 0) return parity_count(std::max(lo, a), std::min(hi, b), parity);
    if (a <= lo && hi <= b) return parity == 0 ? even_[node] : odd_[node];
    if (l == r) return 0;
    const std::int64_t mid = (l + r) / 2;
    return query(2 * node, l, mid, a, b, parity) + query(2 * node + 1, mid + 1, r, a, b, parity);
  }

  const std::vector<std::int64_t>& wb_;
  std::int64_t leaves_;
  std::vector<std::int64_t> cover_;
  std::vector<std::int64_t> even_;
  std::vector<std::int64_t> odd_;
};

struct Event {
  std::int64_t u;
  std::int64_t w0, w1;  // half-open
  int delta;
};

}  // namespace

void check_activations(std::span<const Activation> activations, std::int64_t n, std::size_t d) {
  for (const auto& a : activations) {
    if (a.is_skip()) continue;
    if (a.point->dim() != d) throw DimensionError("activation dimension differs from box");
    if (a.time > n) throw ConfigError("activation time " + std::to_string(a.time) + " after n=" + std::to_string(n));
  }
}

std::vector<Rect> rotated_rects(std::span<const Activation> activations, std::int64_t n, const Box& box) {
  if (box.dim() != 2) throw DimensionError("union_count_2d needs d = 2");
  check_activations(activations, n, 2);
  const auto& bx = box.axes[0];
  const auto& by = box.axes[1];
  const std::int64_t box_u0 = bx.lo + by.lo, box_u1 = bx.hi + by.hi;
  const std::int64_t box_w0 = bx.lo - by.hi, box_w1 = bx.hi - by.lo;
  std::vector<Rect> rects;
  rects.reserve(activations.size());
  for (const auto& a : activations) {
    if (a.is_skip()) continue;
    const std::int64_t r = n - a.time;
    const std::int64_t x = (*a.point)[0], y = (*a.point)[1];
    // Skip balls that miss the box entirely (L1 distance from centre to box > r).
    const std::int64_t gap = std::max<std::int64_t>({0, bx.lo - x, x - bx.hi}) +
                             std::max<std::int64_t>({0, by.lo - y, y - by.hi});
    if (gap > r) continue;
    Rect rc{x + y - r, x + y + r, x - y - r, x - y + r};
    rc.u0 = std::max(rc.u0, box_u0);
    rc.u1 = std::min(rc.u1, box_u1);
    rc.w0 = std::max(rc.w0, box_w0);
    rc.w1 = std::min(rc.w1, box_w1);
    if (rc.u0 > rc.u1 || rc.w0 > rc.w1) continue;
    rects.push_back(rc);
  }
  return rects;
}

std::vector<std::int64_t> w_boundaries(const std::vector<Rect>& rects) {
  std::vector<std::int64_t> wb;
  wb.reserve(2 * rects.size());
  for (const auto& r : rects) {
    wb.push_back(r.w0);
    wb.push_back(r.w1 + 1);
  }
  std::sort(wb.begin(), wb.end());
  wb.erase(std::unique(wb.begin(), wb.end()), wb.end());
  return wb;
}

Count sweep_rotated(const std::vector<Rect>& rects, const std::vector<std::int64_t>& wb, const Box& box,
                    std::int64_t u_lo, std::int64_t u_hi) {
  if (rects.empty() || u_lo > u_hi) return 0;
  ParityCoverTree tree(wb);
  std::vector<Event> events;
  for (const auto& r : rects) {
    if (r.u1 < u_lo || r.u0 > u_hi) continue;
    if (r.u0 <= u_lo) {
      tree.add(r.w0, r.w1 + 1, +1);
    } else {
      events.push_back({r.u0, r.w0, r.w1 + 1, +1});
    }
    if (r.u1 + 1 <= u_hi) events.push_back({r.u1 + 1, r.w0, r.w1 + 1, -1});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.u < b.u; });

  const std::int64_t xlo = box.axes[0].lo, xhi = box.axes[0].hi;
  const std::int64_t ylo = box.axes[1].lo, yhi = box.axes[1].hi;
  Count total = 0;
  std::size_t next = 0;
  std::int64_t u = u_lo;
  while (u <= u_hi) {
    const std::int64_t stop = next < events.size() ? std::min(events[next].u, u_hi + 1) : u_hi + 1;
    if (!tree.empty()) {
      for (; u < stop; ++u) {
        const std::int64_t wa = std::max(2 * xlo - u, u - 2 * yhi);
        const std::int64_t wz = std::min(2 * xhi - u, u - 2 * ylo);
        total += tree.query(wa, wz + 1, mod2(u));
      }
    }
    u = stop;
    while (next < events.size() && events[next].u == u) {
      tree.add(events[next].w0, events[next].w1, events[next].delta);
      ++next;
    }
  }
  return total;
}

}  // namespace detail

Count union_count_2d(std::span<const Activation> activations, std::int64_t n, const Box& box) {
  const auto rects = detail::rotated_rects(activations, n, box);
  if (rects.empty()) return 0;
  const auto wb = detail::w_boundaries(rects);
  std::int64_t u_lo = rects.front().u0, u_hi = rects.front().u1;
  for (const auto& r : rects) {
    u_lo = std::min(u_lo, r.u0);
    u_hi = std::max(u_hi, r.u1);
  }
  int chunks = 1;
#ifdef _OPENMP
  const int threads = omp_get_max_threads();
  if (threads > 1) chunks = static_cast<int>(std::min<std::int64_t>(2 * threads, (u_hi - u_lo) / 256 + 1));
#endif
  if (chunks <= 1) return detail::sweep_rotated(rects, wb, box, u_lo, u_hi);

  const std::int64_t span = u_hi - u_lo + 1;
  Count total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 1)
  for (int c = 0; c < chunks; ++c) {
    const std::int64_t a = u_lo + span * c / chunks;
    const std::int64_t b = u_lo + span * (c + 1) / chunks - 1;
    total += detail::sweep_rotated(rects, wb, box, a, b);
  }
  return total;
}

namespace serial {

Count union_count_2d(std::span<const Activation> activations, std::int64_t n, const Box& box) {
  const auto rects = detail::rotated_rects(activations, n, box);
  if (rects.empty()) return 0;
  const auto wb = detail::w_boundaries(rects);
  std::int64_t u_lo = rects.front().u0, u_hi = rects.front().u1;
  for (const auto& r : rects) {
    u_lo = std::min(u_lo, r.u0);
    u_hi = std::max(u_hi, r.u1);
  }
  return detail::sweep_rotated(rects, wb, box, u_lo, u_hi);
}

}  // namespace serial

}  // namespace burn
