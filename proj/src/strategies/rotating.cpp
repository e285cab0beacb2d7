#include <array>
#include <cmath>

#include "burn/error.hpp"
#include "internal.hpp"

namespace burn::strategies {

namespace {

// Region r = n mod 4 activates at n = 4t + r on the top edge y = H(n) of its
// frame, which is the base frame turned clockwise r times. Each region keeps
// its own walker x_t = x_{t-1} + ceil(sqrt t), wrapped into (-H, H]. A walker
// point already in N[B_{n-1}] (possible when H = n, e.g. x = 0 at c = 1)
// becomes a counted skip; the walker still advances.
class RotatingSqrtGap : public Strategy {
 public:
  explicit RotatingSqrtGap(const Rational& c) : exact_(c), real_(c.to_double()) {}
  explicit RotatingSqrtGap(double d) : real_(d) {}

  Activation next(const StepContext& ctx) override {
    const std::int64_t n = ctx.n;
    if (n == 0) return Activation::at(0, Point{0, 0});
    const int r = static_cast<int>(n % 4);
    const std::int64_t t = n / 4;
    const std::int64_t h = height(n);
    if (t == 0) {
      // The region's first point has no predecessor; it may sit inside the origin's ball.
      const Point p = rotate_cw(Point{0, h}, r);
      if (ctx.box->contains(p) && ctx.is_free(p)) return Activation::at(n, p);
      ++first_point_skips_;
      return Activation::skip(n);
    }
    std::int64_t x = x_[r] + isqrt_ceil(t);
    if (x > h) {
      x -= 2 * h;
      ++wraps_;
    }
    x_[r] = x;
    const Point p = rotate_cw(Point{x, h}, r);
    if (ctx.box->contains(p) && !ctx.is_free(p)) {
      ++collisions_;
      return Activation::skip(n);
    }
    return Activation::at(n, p);
  }

  std::map<std::string, std::int64_t> diagnostics() const override {
    return {{"first_point_skips", first_point_skips_}, {"collisions", collisions_}, {"wraps", wraps_}};
  }

 private:
  std::int64_t height(std::int64_t n) const {
    if (exact_) return ceil_div(checked_mul(exact_->num, n), exact_->den);
    return static_cast<std::int64_t>(std::ceil(real_ * static_cast<double>(n)));
  }

  std::optional<Rational> exact_;
  double real_;
  std::array<std::int64_t, 4> x_{0, 0, 0, 0};
  std::int64_t first_point_skips_ = 0;
  std::int64_t collisions_ = 0;
  std::int64_t wraps_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> make_rotating_sqrt_gap(const Rational& c) {
  if (c < Rational(1)) throw ConfigError("rotating_sqrt_gap needs c >= 1, got " + c.str());
  return std::make_unique<RotatingSqrtGap>(c);
}

std::unique_ptr<Strategy> make_rotating_sqrt_gap_real(double d) {
  if (!(d >= 1.0) || !std::isfinite(d)) throw ConfigError("rotating_sqrt_gap needs a height factor >= 1");
  return std::make_unique<RotatingSqrtGap>(d);
}

}  // namespace burn::strategies
