#include <array>

#include "burn/error.hpp"
#include "internal.hpp"

namespace burn {

std::optional<Point> NearestTopWalker::step(std::int64_t n, bool active) {
  if (n != last_ + 1) throw ConfigError("nearest-top walker must be stepped at consecutive times from 1");
  last_ = n;
  if (filled_ > 0) {
    ++filled_;
    if (filled_ == n - t_ + 1) {
      ++t_;
      filled_ = 0;
    }
  }
  if (!active || t_ > n) return std::nullopt;
  Point p{t_ + filled_, n - filled_};
  ++filled_;
  if (filled_ == n - t_ + 1) {
    ++t_;
    filled_ = 0;
  }
  return p;
}

bool skinny_fires(const Rational& rho, std::int64_t n) {
  if (n < 1) return false;
  return floor_div(checked_mul(rho.num, n), rho.den) - floor_div(checked_mul(rho.num, n - 1), rho.den) == 1;
}

Point rotate_ccw(const Point& p, int q) {
  Point r = p;
  for (int i = 0; i < ((q % 4) + 4) % 4; ++i) r = Point{-r[1], r[0]};
  return r;
}

Point rotate_cw(const Point& p, int q) { return rotate_ccw(p, 4 - ((q % 4) + 4) % 4); }

EpsilonSplit split_epsilon(const Rational& epsilon) {
  if (epsilon < Rational(1, 2) || Rational(1) < epsilon)
    throw ConfigError("quadrant_composition needs epsilon in [1/2, 1], got " + epsilon.str());
  // x = 8 eps - 4 = a + rho.
  const std::int64_t x_num = checked_add(checked_mul(8, epsilon.num), checked_mul(-4, epsilon.den));
  EpsilonSplit out;
  out.a = static_cast<int>(floor_div(x_num, epsilon.den));
  out.rho = Rational(x_num - static_cast<std::int64_t>(out.a) * epsilon.den, epsilon.den);
  return out;
}

namespace strategies {

namespace {

class OriginOnly : public Strategy {
 public:
  explicit OriginOnly(int d) : d_(d) {}
  Activation next(const StepContext& ctx) override {
    if (ctx.n == 0) return Activation::at(0, Point::origin(static_cast<std::size_t>(d_)));
    return Activation::skip(ctx.n);
  }
  std::size_t dim() const override { return static_cast<std::size_t>(d_); }

 private:
  int d_;
};

class AllSkip : public Strategy {
 public:
  explicit AllSkip(int d) : d_(d) {}
  Activation next(const StepContext& ctx) override { return Activation::skip(ctx.n); }
  std::size_t dim() const override { return static_cast<std::size_t>(d_); }

 private:
  int d_;
};

class NearestTop : public Strategy {
 public:
  explicit NearestTop(int skip_at) : skip_at_(skip_at) {}
  Activation next(const StepContext& ctx) override {
    if (ctx.n == 0) return Activation::at(0, Point{0, 0});
    auto p = walker_.step(ctx.n, ctx.n != skip_at_);
    return p ? Activation::at(ctx.n, *p) : Activation::skip(ctx.n);
  }

 private:
  int skip_at_;
  NearestTopWalker walker_;
};

class SkinnyTriangle : public Strategy {
 public:
  explicit SkinnyTriangle(Rational rho) : rho_(rho) {}
  Activation next(const StepContext& ctx) override {
    if (ctx.n == 0) return Activation::at(0, Point{0, 0});
    if (!skinny_fires(rho_, ctx.n)) return Activation::skip(ctx.n);
    return Activation::at(ctx.n, Point{floor_div(checked_mul(rho_.num, ctx.n), rho_.den), ctx.n});
  }

 private:
  Rational rho_;
};

class LayerCake : public Strategy {
 public:
  explicit LayerCake(std::int64_t period) : period_(period) {}
  Activation next(const StepContext& ctx) override {
    if (ctx.n % period_ != 0) return Activation::skip(ctx.n);
    return Activation::at(ctx.n, Point{ctx.n, ctx.n});
  }

 private:
  std::int64_t period_;
};

class SkinnyWalker : public QuadrantWalker {
 public:
  explicit SkinnyWalker(Rational rho) : rho_(rho) {}
  std::optional<Point> step(std::int64_t n, bool active) override {
    if (!active) return std::nullopt;
    return Point{floor_div(checked_mul(rho_.num, n), rho_.den), n};
  }

 private:
  Rational rho_;
};

// Quadrant q is the image of [0, n]^2 under q counter-clockwise quarter turns.
class QuadrantComposition : public Strategy {
 public:
  explicit QuadrantComposition(const Rational& epsilon) : split_(split_epsilon(epsilon)) {
    const bool skinny = split_.rho.num != 0;
    int next_layer = split_.a;
    for (int q = 0; q < 4; ++q) {
      if (skinny && q == 0) {
        walkers_[q] = std::make_unique<SkinnyWalker>(split_.rho);
      } else if (next_layer > 0) {
        walkers_[q] = std::make_unique<LayerCakeWalker>();
        --next_layer;
      } else {
        walkers_[q] = std::make_unique<NearestTopWalker>();
      }
    }
  }

  Activation next(const StepContext& ctx) override {
    const std::int64_t n = ctx.n;
    if (n == 0) return Activation::at(0, Point{0, 0});
    int active = 0;
    if (split_.rho.num == 0) {
      active = static_cast<int>((n - 1) % 4);
    } else if (!skinny_fires(split_.rho, n)) {
      active = 1 + static_cast<int>(skip_index_++ % 3);
    }
    std::optional<Point> chosen;
    for (int q = 0; q < 4; ++q) {
      auto p = walkers_[q]->step(n, q == active);
      if (q == active) chosen = std::move(p);
    }
    if (!chosen) return Activation::skip(n);
    if ((*chosen)[0] <= 0 || (*chosen)[1] <= 0)
      throw InvalidActivation("quadrant walker placed " + chosen->str() + " on an axis at n=" + std::to_string(n));
    return Activation::at(n, rotate_ccw(*chosen, active));
  }

  std::map<std::string, std::int64_t> diagnostics() const override {
    return {{"a", split_.a}, {"rho_num", split_.rho.num}, {"rho_den", split_.rho.den}};
  }

 private:
  EpsilonSplit split_;
  std::array<std::unique_ptr<QuadrantWalker>, 4> walkers_;
  std::int64_t skip_index_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> make_origin_only(int d) { return std::make_unique<OriginOnly>(d); }
std::unique_ptr<Strategy> make_all_skip(int d) { return std::make_unique<AllSkip>(d); }
std::unique_ptr<Strategy> make_nearest_top(int skip_at) { return std::make_unique<NearestTop>(skip_at); }
std::unique_ptr<Strategy> make_skinny_triangle(const Rational& rho) { return std::make_unique<SkinnyTriangle>(rho); }
std::unique_ptr<Strategy> make_layer_cake(std::int64_t period) { return std::make_unique<LayerCake>(period); }
std::unique_ptr<Strategy> make_quadrant_composition(const Rational& epsilon) {
  return std::make_unique<QuadrantComposition>(epsilon);
}

}  // namespace strategies

}  // namespace burn
