// Copyright 2026 The extwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extwit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "extwit/error.hpp"

namespace extwit {

void SweepConfig::validate() const {
  if (!std::isfinite(theta_start) || !std::isfinite(theta_end) || !(theta_end > theta_start)) {
    throw Error(ErrorKind::ConfigError, "theta_end must exceed theta_start");
  }
  if (samples < 2) throw Error(ErrorKind::ConfigError, "samples must be at least 2");
  if (!(negativity_tol > 0.0)) throw Error(ErrorKind::ConfigError, "negativity_tol must be positive");
}

double SweepConfig::theta_at(int k) const {
  // Pin the last sample to theta_end exactly.
  if (k == samples - 1) return theta_end;
  return theta_start + k * step();
}

SweepConfig full_period_sweep() { return SweepConfig{0.0, 2.0 * std::numbers::pi}; }

ComplexMatrix apply_to_second(const MapSpec& phi, const DensityOperator& rho) {
  const auto& dims = rho.dims();
  if (phi.dim() != dims.dB) {
    throw Error(ErrorKind::DimensionMismatch,
                "map dimension " + std::to_string(phi.dim()) + " does not match second subsystem " +
                    std::to_string(dims.dB));
  }
  const std::size_t b = dims.dB;
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(dims.total(), dims.total());
  ComplexMatrix block(b, b);
  for (std::size_t i = 0; i < dims.dA; ++i) {
    for (std::size_t j = 0; j < dims.dA; ++j) {
      for (std::size_t k = 0; k < b; ++k)
        for (std::size_t l = 0; l < b; ++l) block(k, l) = m(i * b + k, j * b + l);
      const ComplexMatrix image = apply_map(phi, block);
      for (std::size_t k = 0; k < b; ++k)
        for (std::size_t l = 0; l < b; ++l) out(i * b + k, j * b + l) = image(k, l);
    }
  }
  return out;
}

Detection detect(const MapSpec& phi, const DensityOperator& rho, double tol) {
  const double lambda = min_eigenvalue(apply_to_second(phi, rho));
  return {lambda < -tol, lambda};
}

bool ppt_check(const DensityOperator& rho, double tol) {
  return is_psd(partial_transpose(rho.matrix(), rho.dims()), tol);
}

double sweep_point(const MapSpec& base, const DensityOperator& rho, double theta) {
  return min_eigenvalue(apply_to_second(inner_automorphism(base, unitary_u(theta)), rho));
}

SweepCurve sweep(const MapSpec& base, const DensityOperator& rho, const SweepConfig& cfg) {
  cfg.validate();
  if (base.dim() != 3 || rho.dims().dB != 3) {
    throw Error(ErrorKind::DimensionMismatch, "sweeps use the 3x3 rotation family");
  }
  SweepCurve curve{{}, base.label() + " o U(theta)", rho.label()};
  curve.records.reserve(static_cast<std::size_t>(cfg.samples));
  for (int k = 0; k < cfg.samples; ++k) {
    const double theta = cfg.theta_at(k);
    curve.records.push_back({theta, sweep_point(base, rho, theta)});
  }
  return curve;
}

namespace {

// g(lo) >= 0 > g(hi); returns the midpoint of the final bracket.
double bisect(const LambdaFn& g, double lo, double hi) {
  for (int it = 0; it < kBisectionSteps; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double crossing(const SweepPoint& outside, const SweepPoint& inside, double tol,
                const LambdaFn& refine) {
  if (refine) {
    return bisect([&](double t) { return refine(t) + tol; }, outside.theta, inside.theta);
  }
  const double go = outside.lambda_min + tol;
  const double gi = inside.lambda_min + tol;
  return outside.theta + (inside.theta - outside.theta) * go / (go - gi);
}

}  // namespace

DetectionReport detection_intervals(const SweepCurve& curve, double tol, const LambdaFn& refine) {
  const auto& r = curve.records;
  if (r.empty()) throw Error(ErrorKind::GridMismatch, "empty sweep curve");
  for (std::size_t k = 1; k < r.size(); ++k) {
    if (!(r[k].theta > r[k - 1].theta)) {
      throw Error(ErrorKind::GridMismatch, "sweep records must be strictly increasing in theta");
    }
  }

  DetectionReport report{{}, r.front().lambda_min, r.front().theta};
  for (const auto& p : r) {
    if (p.lambda_min < report.global_min) {
      report.global_min = p.lambda_min;
      report.global_argmin = p.theta;
    }
  }

  std::size_t k = 0;
  while (k < r.size()) {
    if (!(r[k].lambda_min < -tol)) {
      ++k;
      continue;
    }
    const std::size_t first = k;
    while (k + 1 < r.size() && r[k + 1].lambda_min < -tol) ++k;
    const std::size_t last = k;
    const double lo = first == 0 ? r.front().theta : crossing(r[first - 1], r[first], tol, refine);
    const double hi =
        last + 1 == r.size() ? r.back().theta : crossing(r[last + 1], r[last], tol, refine);
    report.intervals.emplace_back(lo, hi);
    ++k;
  }
  return report;
}

double curve_shift_distance(const SweepCurve& c1, const SweepCurve& c2, double shift) {
  const auto& a = c1.records;
  const auto& b = c2.records;
  if (a.size() != b.size() || a.size() < 2) {
    throw Error(ErrorKind::GridMismatch, "curves must share a grid of at least two points");
  }
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k].theta - b[k].theta) > 1e-12) {
      throw Error(ErrorKind::GridMismatch, "curves are sampled on different theta grids");
    }
  }
  const double span = a.back().theta - a.front().theta;
  if (std::abs(span - 2.0 * std::numbers::pi) > 1e-9) {
    throw Error(ErrorKind::GridMismatch, "grid must span exactly one period 2pi");
  }
  const auto period = static_cast<long>(a.size() - 1);
  const double steps = shift / (span / static_cast<double>(period));
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-6) {
    throw Error(ErrorKind::GridMismatch, "shift is not a whole number of grid steps");
  }
  const long offset = static_cast<long>(rounded);

  double dist = 0.0;
  for (long i = 0; i <= period; ++i) {
    // Stay on the grid when possible so the closing sample pairs with itself.
    long j = i + offset;
    if (j > period || j < 0) j = ((j % period) + period) % period;
    dist = std::max(dist, std::abs(a[static_cast<std::size_t>(i)].lambda_min -
                                   b[static_cast<std::size_t>(j)].lambda_min));
  }
  return dist;
}

}  // namespace extwit
