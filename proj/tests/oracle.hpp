#pragma once

// Brute-force oracles. Deliberately independent of the library: plain loops
// over cells, no shared helpers beyond the standard library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 l1(const std::vector<i64>& a, const std::vector<i64>& b) {
  i64 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::llabs(a[i] - b[i]);
  return s;
}

// Calls f on every point of [-r, r]^d.
inline void cube(int d, i64 r, const std::function<void(const std::vector<i64>&)>& f) {
  std::vector<i64> p(static_cast<std::size_t>(d), -r);
  for (;;) {
    f(p);
    int i = d - 1;
    while (i >= 0 && p[static_cast<std::size_t>(i)] == r) p[static_cast<std::size_t>(i--)] = -r;
    if (i < 0) return;
    ++p[static_cast<std::size_t>(i)];
  }
}

inline i64 ball_count(int d, i64 r) {
  i64 n = 0;
  cube(d, r, [&](const std::vector<i64>& p) {
    i64 s = 0;
    for (auto v : p) s += std::llabs(v);
    n += s <= r;
  });
  return n;
}

inline i64 sphere_count(int d, i64 r) {
  i64 n = 0;
  cube(d, r, [&](const std::vector<i64>& p) {
    i64 s = 0;
    for (auto v : p) s += std::llabs(v);
    n += s == r;
  });
  return n;
}

inline i64 sphere_ball_intersection(i64 x, const std::vector<i64>& centre, i64 y) {
  i64 n = 0;
  cube(static_cast<int>(centre.size()), x, [&](const std::vector<i64>& p) {
    i64 s = 0;
    for (auto v : p) s += std::llabs(v);
    n += s == x && l1(p, centre) <= y;
  });
  return n;
}

struct Rect {
  i64 xlo, xhi, ylo, yhi;
  i64 cells() const { return (xhi - xlo + 1) * (yhi - ylo + 1); }
};

struct Act {
  i64 t;
  bool skip;
  i64 x, y;
};

/// Dense planar simulation straight from B_{n+1} = N_{G_{n+1}}[B_n] ∪ {v_{n+1}}.
/// `grid(n)` must be nested. Returns |B_n| for n = 0..horizon, or -1 entries
/// after the first activation that is not in V(G_n) \ N[B_{n-1}].
struct Bfs {
  std::function<Rect(i64)> grid;
  i64 horizon;
  Rect outer;
  std::vector<char> cur;
  i64 n = -1;

  Bfs(std::function<Rect(i64)> g, i64 h) : grid(std::move(g)), horizon(h), outer(grid(h)) {
    cur.assign(static_cast<std::size_t>(outer.cells()), 0);
  }

  std::size_t at(i64 x, i64 y) const {
    return static_cast<std::size_t>((y - outer.ylo) * (outer.xhi - outer.xlo + 1) + (x - outer.xlo));
  }
  bool in(const Rect& r, i64 x, i64 y) const { return r.xlo <= x && x <= r.xhi && r.ylo <= y && y <= r.yhi; }
  bool burned(i64 x, i64 y) const { return in(outer, x, y) && cur[at(x, y)]; }

  /// Closed neighbourhood of the current burned set.
  bool touches(i64 x, i64 y) const {
    return burned(x, y) || burned(x - 1, y) || burned(x + 1, y) || burned(x, y - 1) || burned(x, y + 1);
  }

  /// Advances to time n + 1 with activation `a`; false when `a` is invalid.
  bool step(const Act& a) {
    const i64 t = n + 1;
    const Rect g = grid(t);
    std::vector<char> next(cur.size(), 0);
    if (t > 0) {
      for (i64 y = g.ylo; y <= g.yhi; ++y)
        for (i64 x = g.xlo; x <= g.xhi; ++x)
          if (touches(x, y)) next[at(x, y)] = 1;
    }
    bool ok = true;
    if (!a.skip) {
      if (!in(g, a.x, a.y) || (t > 0 && touches(a.x, a.y))) ok = false;
      if (in(g, a.x, a.y)) next[at(a.x, a.y)] = 1;
    }
    cur.swap(next);
    n = t;
    return ok;
  }

  i64 count() const {
    i64 c = 0;
    for (char v : cur) c += v;
    return c;
  }
};

/// |⋃ B_1(c_k, r_k) ∩ rect| by merging per-row intervals.
inline i64 union_rows(const std::vector<std::vector<i64>>& centres, const std::vector<i64>& radii, const Rect& rect) {
  i64 total = 0;
  std::vector<std::pair<i64, i64>> iv;
  for (i64 y = rect.ylo; y <= rect.yhi; ++y) {
    iv.clear();
    for (std::size_t k = 0; k < radii.size(); ++k) {
      const i64 h = radii[k] - std::llabs(y - centres[k][1]);
      if (h < 0) continue;
      const i64 a = std::max(rect.xlo, centres[k][0] - h), b = std::min(rect.xhi, centres[k][0] + h);
      if (a <= b) iv.emplace_back(a, b);
    }
    std::sort(iv.begin(), iv.end());
    i64 end = std::numeric_limits<i64>::min();
    for (auto [a, b] : iv) {
      if (a > end) {
        total += b - a + 1;
        end = b;
      } else if (b > end) {
        total += b - end;
        end = b;
      }
    }
  }
  return total;
}

/// Nearest lattice point of no larger L1 norm, ties to the lexicographically
/// smallest, by scanning every point with |q|_1 <= |p|_1.
inline std::vector<i64> round_star(double x, double y) {
  const double norm = std::abs(x) + std::abs(y);
  const i64 r = static_cast<i64>(std::floor(norm)) + 1;
  std::vector<i64> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (i64 qx = -r; qx <= r; ++qx)
    for (i64 qy = -r; qy <= r; ++qy) {
      if (static_cast<double>(std::llabs(qx) + std::llabs(qy)) > norm) continue;
      const double d = std::abs(x - static_cast<double>(qx)) + std::abs(y - static_cast<double>(qy));
      if (d < best_d) {
        best_d = d;
        best = {qx, qy};
      }
    }
  return best;
}

}  // namespace oracle
