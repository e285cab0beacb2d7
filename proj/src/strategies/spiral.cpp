#include <cmath>

#include "burn/error.hpp"
#include "internal.hpp"

namespace burn::strategies {

namespace {

// v_n = P* of the polar point (c n^{3/2}, sqrt n). A rounded point that is
// already in N[B_{n-1}] becomes a skip and is counted.
class PolarSpiral : public Strategy {
 public:
  explicit PolarSpiral(double c) : c_(c) {}

  Activation next(const StepContext& ctx) override {
    const std::int64_t n = ctx.n;
    if (n == 0) return Activation::at(0, Point{0, 0});
    const double nd = static_cast<double>(n);
    const double radius = c_ * nd * std::sqrt(nd);
    const double angle = std::sqrt(nd);
    const Point p = round_toward_origin(RealPoint{radius * std::cos(angle), radius * std::sin(angle)});
    if (!ctx.box->contains(p)) return Activation::at(n, p);  // the runner reports OutsideGrid
    if (!ctx.is_free(p)) {
      ++collisions_;
      return Activation::skip(n);
    }
    return Activation::at(n, p);
  }

  std::map<std::string, std::int64_t> diagnostics() const override { return {{"collisions", collisions_}}; }

 private:
  double c_;
  std::int64_t collisions_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> make_polar_spiral(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("polar_spiral needs c > 0");
  return std::make_unique<PolarSpiral>(c);
}

}  // namespace burn::strategies
