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

#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "extwit/linalg.hpp"
#include "extwit/maps.hpp"
#include "extwit/upb.hpp"

namespace extwit {

inline constexpr double kNegativityTol = 1e-9;
inline constexpr int kDefaultSamples = 721;
inline constexpr int kBisectionSteps = 30;

struct SweepConfig {
  double theta_start;
  double theta_end;
  int samples = kDefaultSamples;
  double negativity_tol = kNegativityTol;

  /// Throws ConfigError when the range is empty, samples < 2 or tol <= 0.
  void validate() const;
  double step() const { return (theta_end - theta_start) / (samples - 1); }
  double theta_at(int k) const;
};

/// [0, 2pi] with 721 samples (half-degree steps).
SweepConfig full_period_sweep();

struct SweepPoint {
  double theta;
  double lambda_min;
  friend bool operator==(const SweepPoint&, const SweepPoint&) = default;
};

struct SweepCurve {
  std::vector<SweepPoint> records;
  std::string map_label;
  std::string state_label;
};

struct DetectionReport {
  std::vector<std::pair<double, double>> intervals;
  double global_min;
  double global_argmin;
};

struct Detection {
  bool detected;
  double lambda_min;
};

/// (I (x) phi) rho, evaluated block by block.
ComplexMatrix apply_to_second(const MapSpec& phi, const DensityOperator& rho);

/// Negative lambda_min proves entanglement; anything else is inconclusive.
Detection detect(const MapSpec& phi, const DensityOperator& rho, double tol = kNegativityTol);

bool ppt_check(const DensityOperator& rho, double tol = kNegativityTol);

/// lambda_min of (I (x) (base o U(theta))) rho for theta on the configured grid.
double sweep_point(const MapSpec& base, const DensityOperator& rho, double theta);
SweepCurve sweep(const MapSpec& base, const DensityOperator& rho, const SweepConfig& cfg);

using LambdaFn = std::function<double(double)>;

/// Maximal runs of records with lambda_min < -tol. When `refine` is given the
/// run endpoints are located by bisection on refine(theta) + tol; otherwise by
/// linear interpolation between the bracketing records.
DetectionReport detection_intervals(const SweepCurve& curve, double tol = kNegativityTol,
                                    const LambdaFn& refine = {});

/// max_k |c1(theta_k) - c2(theta_k + shift mod 2pi)| on a shared full-period grid.
/// Throws GridMismatch unless shift is a whole number of grid steps.
double curve_shift_distance(const SweepCurve& c1, const SweepCurve& c2, double shift);

}  // namespace extwit
