#include "burn/error.hpp"
#include "burn/rng.hpp"
#include "internal.hpp"

namespace burn {

std::pair<std::int64_t, std::int64_t> epoch_window(std::int64_t n1, int i) {
  if (i < 1) throw ConfigError("epoch index starts at 1");
  std::int64_t big_n = n1;
  for (int k = 1; k < i; ++k) big_n = checked_mul(big_n, 3);
  return {big_n / 6 + 1, big_n / 2};
}

std::int64_t epoch_min_n1(int d) {
  if (d < 1) throw DimensionError("epoch_random needs d >= 1");
  const Count first = ceil_div(checked_mul(2, checked_pow(3 * d, d)), checked_pow(d + 1, d));
  return std::max({first, checked_pow(2, d + 2), Count{16} * d});
}

namespace strategies {

namespace {

class EpochRandom : public Strategy {
 public:
  EpochRandom(int d, std::int64_t n1, std::uint64_t seed) : d_(d), n1_(n1), rng_(seed) {}

  Activation next(const StepContext& ctx) override {
    const std::int64_t n = ctx.n;
    if (!in_window(n)) return Activation::skip(n);
    const std::int64_t radius = floor_scaled_power(Rational(1), n, Rational(d_ + 1, d_));
    ++draws_;
    return Activation::at(n, sample_sphere_uniform(d_, radius, rng_));
  }

  std::size_t dim() const override { return static_cast<std::size_t>(d_); }
  std::map<std::string, std::int64_t> diagnostics() const override { return {{"draws", draws_}}; }

 private:
  bool in_window(std::int64_t n) const {
    for (int i = 1;; ++i) {
      const auto [lo, hi] = epoch_window(n1_, i);
      if (n < lo) return false;
      if (n <= hi) return true;
    }
  }

  int d_;
  std::int64_t n1_;
  Rng rng_;
  std::int64_t draws_ = 0;
};

}  // namespace

std::unique_ptr<Strategy> make_epoch_random(int d, std::int64_t n1, std::uint64_t seed) {
  if (d < 1) throw DimensionError("epoch_random needs d >= 1");
  const auto floor_n1 = epoch_min_n1(d);
  if (n1 < floor_n1)
    throw ConfigError("epoch_random needs N1 >= " + std::to_string(floor_n1) + " for d=" + std::to_string(d));
  return std::make_unique<EpochRandom>(d, n1, seed);
}

}  // namespace strategies

}  // namespace burn
