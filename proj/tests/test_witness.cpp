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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "extwit/error.hpp"
#include "extwit/random.hpp"
#include "extwit/witness.hpp"

using namespace extwit;
using std::numbers::pi;

namespace {

const BipartiteDims k33(3, 3);

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an extwit::Error");
  return ErrorKind::ConfigError;
}

// (I (x) phi) through the full (dA^2 dB^2)-square action on the column-major
// vec of rho. Used as an independent route to apply_to_second.
ComplexMatrix apply_via_vec(const MapSpec& phi, const ComplexMatrix& rho, const BipartiteDims& dims) {
  const std::size_t da = dims.dA;
  const std::size_t db = dims.dB;
  const std::size_t n = da * db;
  // Reorder vec(rho) into blocks: index (i, j, k, l) for rho[i*db+k, j*db+l].
  ComplexMatrix out(n, n);
  const auto& t = phi.action();
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          cplx acc = 0.0;
          for (std::size_t p = 0; p < db; ++p)
            for (std::size_t q = 0; q < db; ++q) acc += t(k + l * db, p + q * db) * rho(i * db + p, j * db + q);
          out(i * db + k, j * db + l) = acc;
        }
  return out;
}

SweepCurve full_sweep(const MapSpec& base, const DensityOperator& rho) {
  return sweep(base, rho, full_period_sweep());
}

}  // namespace

TEST_CASE("apply_to_second basics") {
  random::Engine rng(1);
  const DensityOperator rho(random::density(rng, 9), k33);
  CHECK(apply_to_second(transpose_map(3), rho) == partial_transpose(rho.matrix(), k33));
  CHECK(max_abs_diff(apply_to_second(identity_map(3), rho), rho.matrix()) == 0.0);

  const auto sigma = random::density(rng, 3);
  const auto tau = random::density(rng, 3);
  const DensityOperator prod(kron(sigma, tau), k33);
  CHECK(max_abs_diff(apply_to_second(choi_c1(), prod), kron(sigma, apply_map(choi_c1(), tau))) <= 1e-15);

  CHECK(kind_of([&] { apply_to_second(transpose_map(2), rho); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("apply_to_second agrees with the vec formulation") {
  random::Engine rng(2);
  for (int k = 0; k < 10; ++k) {
    const DensityOperator rho(random::density(rng, 9), k33);
    const auto phi = inner_automorphism(choi_c1(), OperatorFactor(random::unitary(rng, 3)));
    const auto blockwise = apply_to_second(phi, rho);
    CHECK(max_abs_diff(blockwise, apply_via_vec(phi, rho.matrix(), k33)) <= 1e-12);
    CHECK(is_hermitian(blockwise, 1e-12));
  }
  const BipartiteDims d23(2, 3);
  const DensityOperator rho(random::density(rng, 6), d23);
  CHECK(max_abs_diff(apply_to_second(choi_c2(), rho), apply_via_vec(choi_c2(), rho.matrix(), d23)) <= 1e-12);
}

TEST_CASE("detect") {
  const auto t_state = upb_complement_state(tiles());
  const auto d = detect(choi_c1(), t_state);
  CHECK_FALSE(d.detected);
  CHECK(d.lambda_min > 0.0);
  CHECK_FALSE(detect(transpose_map(3), t_state).detected);

  const auto me = detect(transpose_map(3), maximally_entangled(3));
  CHECK(me.detected);
  CHECK(me.lambda_min == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("ppt_check") {
  random::Engine rng(3);
  CHECK(ppt_check(DensityOperator(kron(random::density(rng, 3), random::density(rng, 3)), k33)));
  CHECK(ppt_check(upb_complement_state(tiles())));
  CHECK(ppt_check(upb_complement_state(pyramid())));
  CHECK_FALSE(ppt_check(maximally_entangled(3)));
}

TEST_CASE("SweepConfig") {
  const auto cfg = full_period_sweep();
  CHECK(cfg.samples == 721);
  CHECK(cfg.theta_at(0) == 0.0);
  CHECK(cfg.theta_at(720) == 2 * pi);
  CHECK(cfg.step() == doctest::Approx(pi / 360));
  CHECK(kind_of([] { SweepConfig{1.0, 1.0}.validate(); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { SweepConfig{0.0, 1.0, 1}.validate(); }) == ErrorKind::ConfigError);
  CHECK(kind_of([] { SweepConfig{0.0, 1.0, 10, 0.0}.validate(); }) == ErrorKind::ConfigError);
}

TEST_CASE("sweep claims") {
  const auto t_state = upb_complement_state(tiles());
  const auto curve = full_sweep(choi_c1(), t_state);
  REQUIRE(curve.records.size() == 721);
  CHECK(curve.records.front().theta == 0.0);
  CHECK(curve.records.front().lambda_min > 0.0);
  CHECK(curve.records.front().lambda_min == doctest::Approx(detect(choi_c1(), t_state).lambda_min).epsilon(1e-12));
  double lo = 1.0;
  for (const auto& r : curve.records) lo = std::min(lo, r.lambda_min);
  CHECK(lo < 0.0);
  CHECK(curve.map_label == "choi1 o U(theta)");
  CHECK(curve.state_label == "tiles");

  const auto p_curve = full_sweep(choi_c1(), upb_complement_state(pyramid()));
  double plo = 1.0;
  for (const auto& r : p_curve.records) plo = std::min(plo, r.lambda_min);
  CHECK(plo < 0.0);

  CHECK(full_sweep(choi_c1(), t_state).records == curve.records);
  CHECK(kind_of([&] { sweep(transpose_map(2), t_state, full_period_sweep()); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("sweep periodicity") {
  const auto rho = upb_complement_state(pyramid());
  for (double theta : {0.0, 0.4, 1.7, 3.0, 5.5})
    CHECK(std::abs(sweep_point(choi_c2(), rho, theta) - sweep_point(choi_c2(), rho, theta + 2 * pi)) <= 1e-10);
}

TEST_CASE("detection_intervals on synthetic curves") {
  const auto cfg = full_period_sweep();
  SweepCurve positive;
  SweepCurve cosine;
  for (int k = 0; k < cfg.samples; ++k) {
    const double th = cfg.theta_at(k);
    positive.records.push_back({th, 1.0 + std::sin(th) * 0.5});
    cosine.records.push_back({th, std::cos(th) - 0.5});
  }
  const auto none = detection_intervals(positive);
  CHECK(none.intervals.empty());
  CHECK(none.global_min > 0.0);
  CHECK(none.global_argmin == doctest::Approx(1.5 * pi).epsilon(1e-2));

  const auto refined = detection_intervals(cosine, 1e-9, [](double th) { return std::cos(th) - 0.5; });
  REQUIRE(refined.intervals.size() == 1);
  CHECK(std::abs(refined.intervals[0].first - pi / 3) <= 1e-6);
  CHECK(std::abs(refined.intervals[0].second - 5 * pi / 3) <= 1e-6);
  CHECK(refined.global_min == doctest::Approx(-1.5));
  CHECK(refined.global_argmin == doctest::Approx(pi));

  const auto linear = detection_intervals(cosine);
  REQUIRE(linear.intervals.size() == 1);
  CHECK(std::abs(linear.intervals[0].first - pi / 3) <= 1e-5);
  CHECK(std::abs(linear.intervals[0].second - 5 * pi / 3) <= 1e-5);

  // A run touching the grid edge is closed at the edge.
  SweepCurve edge;
  for (int k = 0; k < cfg.samples; ++k) edge.records.push_back({cfg.theta_at(k), std::sin(cfg.theta_at(k)) - 0.5});
  const auto split = detection_intervals(edge);
  REQUIRE(split.intervals.size() == 2);
  CHECK(split.intervals[0].first == 0.0);
  CHECK(split.intervals[1].second == doctest::Approx(2 * pi));

  CHECK(kind_of([] { detection_intervals(SweepCurve{}); }) == ErrorKind::GridMismatch);
  SweepCurve bad;
  bad.records = {{0.0, 1.0}, {0.0, 1.0}};
  CHECK(kind_of([&] { detection_intervals(bad); }) == ErrorKind::GridMismatch);
}

TEST_CASE("detection intervals on the TILES sweep") {
  const auto rho = upb_complement_state(tiles());
  const auto curve = full_sweep(choi_c1(), rho);
  const auto report = detection_intervals(curve, kNegativityTol, [&](double th) { return sweep_point(choi_c1(), rho, th); });
  CHECK_FALSE(report.intervals.empty());
  for (std::size_t k = 0; k < report.intervals.size(); ++k) {
    CHECK(report.intervals[k].first < report.intervals[k].second);
    if (k > 0) CHECK(report.intervals[k - 1].second < report.intervals[k].first);
    // Refined endpoints sit on the zero crossing of lambda_min + tol.
    CHECK(std::abs(sweep_point(choi_c1(), rho, report.intervals[k].first) + kNegativityTol) <= 1e-8);
  }
  CHECK(report.global_min < -1e-6);
}

TEST_CASE("curve_shift_distance") {
  const auto rho = upb_complement_state(tiles());
  const auto c1 = full_sweep(choi_c1(), rho);
  const auto c2 = full_sweep(choi_c2(), rho);
  CHECK(curve_shift_distance(c1, c1, 0.0) == 0.0);
  const double plus = curve_shift_distance(c1, c2, pi / 2);
  const double minus = curve_shift_distance(c1, c2, -pi / 2);
  CHECK(std::min(plus, minus) <= 1e-8);
  CHECK(curve_shift_distance(c1, c2, 0.0) > 1e-4);

  CHECK(kind_of([&] { curve_shift_distance(c1, c2, 0.001); }) == ErrorKind::GridMismatch);
  SweepCurve half = c1;
  half.records.resize(361);
  CHECK(kind_of([&] { curve_shift_distance(half, half, 0.0); }) == ErrorKind::GridMismatch);
  CHECK(kind_of([&] { curve_shift_distance(c1, half, 0.0); }) == ErrorKind::GridMismatch);
}

TEST_CASE("separable states are never detected by positive maps") {
  random::Engine rng(4);
  const std::vector<MapSpec> maps{choi_c1(), choi_c2(), inner_automorphism(choi_c1(), unitary_u(2.0)),
                                  generalized_choi(cho_kye_t(0.7))};
  for (const auto& phi : maps) REQUIRE(positivity_seesaw(phi, {.restarts = 10}).min_value >= -1e-9);
  for (int k = 0; k < 20; ++k) {
    const DensityOperator rho(random::separable_state(rng, k33, 4), k33);
    for (const auto& phi : maps) CHECK_FALSE(detect(phi, rho).detected);
  }
}

TEST_CASE("PPT is invariant under inner unitary automorphism of the transpose") {
  random::Engine rng(5);
  std::vector<DensityOperator> states{upb_complement_state(tiles()), upb_complement_state(pyramid())};
  for (int k = 0; k < 8; ++k) states.emplace_back(random::separable_state(rng, k33, 3), k33);
  for (const auto& rho : states) {
    REQUIRE(ppt_check(rho));
    for (int u = 0; u < 10; ++u) {
      const auto phi = inner_automorphism(transpose_map(3), OperatorFactor(random::unitary(rng, 3)));
      CHECK(is_psd(apply_to_second(phi, rho), 1e-10));
    }
  }
}

TEST_CASE("Choi sweeps repeat every half period") {
  // U(theta + pi) = diag(-1, 1, -1) U(theta), and sign flips commute with the
  // Choi maps up to the same conjugation, which leaves the spectrum alone.
  const auto rho = upb_complement_state(tiles());
  const auto c1 = full_sweep(choi_c1(), rho);
  CHECK(curve_shift_distance(c1, c1, pi) <= 1e-12);
}
