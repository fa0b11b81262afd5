// Test-side helpers kept independent of the library internals: finite
// difference jacobians, random samplers, and small comparison utilities.
#pragma once

#include <cmath>
#include <functional>

#include "pantograph/hyperbolic.hpp"
#include "pantograph/rng.hpp"

namespace oracles {

using pantograph::HPoint;
using pantograph::Isometry;
using pantograph::Mat2;
using pantograph::Rng;
using pantograph::Vec2;

using pantograph::kPi;

// Central-difference jacobian of f : R^2 -> R^2.
inline Mat2 fd_jacobian(const std::function<Vec2(Vec2)>& f, Vec2 p, double h = 1e-5) {
  const Vec2 fx1 = f({p.x + h, p.y});
  const Vec2 fx0 = f({p.x - h, p.y});
  const Vec2 fy1 = f({p.x, p.y + h});
  const Vec2 fy0 = f({p.x, p.y - h});
  return {(fx1.x - fx0.x) / (2 * h), (fy1.x - fy0.x) / (2 * h),
          (fx1.y - fx0.y) / (2 * h), (fy1.y - fy0.y) / (2 * h)};
}

inline double max_entry_diff(const Mat2& got, const Mat2& want) {
  return (got + want * -1.0).max_abs();
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline HPoint random_point(Rng& rng, double halfwidth = 2.0) {
  return {rng.uniform(-halfwidth, halfwidth), std::exp(rng.uniform(-1.5, 1.5))};
}

// frame_at(p, theta) ranges over the whole isometry group as p and theta vary.
inline Isometry random_isometry(Rng& rng) {
  return pantograph::frame_at(random_point(rng), rng.uniform(-kPi, kPi));
}

}  // namespace oracles
