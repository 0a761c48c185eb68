#include "photonpos/sample.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace photonpos {

namespace {

double next_unit(std::mt19937_64& eng) {
  // 53 uniform bits in [0,1); bit-for-bit reproducible everywhere
  return double(eng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<Point> sample_points(const SamplePlan& plan) {
  if (plan.count < 0) throw std::invalid_argument("sample count must be >= 0");
  if (!(plan.r_min > 0.0) || !(plan.r_max >= plan.r_min))
    throw std::invalid_argument("shell must satisfy 0 < r_min <= r_max");
  if (!(plan.axis_margin > 0.0) || !(plan.axis_margin < 1.0))
    throw std::invalid_argument("axis margin must lie in (0,1)");

  std::mt19937_64 eng(plan.seed);
  std::vector<Point> pts;
  pts.reserve(plan.count);
  while (int(pts.size()) < plan.count) {
    const double r = plan.r_min + (plan.r_max - plan.r_min) * next_unit(eng);
    const double cos_theta = 2.0 * next_unit(eng) - 1.0;
    const double phi = 2.0 * std::numbers::pi * next_unit(eng);
    const double sin_theta = std::sqrt(1.0 - cos_theta * cos_theta);
    if (sin_theta < plan.axis_margin) continue;  // rho = r sin(theta)
    pts.push_back(Point{r * sin_theta * std::cos(phi),
                        r * sin_theta * std::sin(phi), r * cos_theta});
  }
  return pts;
}

std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  h ^= global_seed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  // splitmix64 finalizer
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ull;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebull;
  h ^= h >> 31;
  return h;
}

}  // namespace photonpos
