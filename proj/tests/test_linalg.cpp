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

#include "extwit/error.hpp"
#include "extwit/linalg.hpp"
#include "extwit/maps.hpp"
#include "extwit/random.hpp"
#include "extwit/upb.hpp"
#include "oracles.hpp"

using namespace extwit;

namespace {

const cplx I1{0.0, 1.0};

ComplexMatrix diag(std::initializer_list<cplx> d) {
  return ComplexMatrix::diagonal(std::vector<cplx>(d));
}

// (1/2) sum_ij E_ij (x) E_ij on C^2 (x) C^2.
ComplexMatrix bell_projector() {
  ComplexMatrix p(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) p(i * 2 + i, j * 2 + j) = 0.5;
  return p;
}

}  // namespace

TEST_CASE("dagger") {
  CHECK(dagger(ComplexMatrix::identity(3)) == ComplexMatrix::identity(3));
  const auto m = ComplexMatrix::from_rows({{0.0, I1}, {0.0, 0.0}});
  CHECK(dagger(m) == ComplexMatrix::from_rows({{0.0, 0.0}, {-I1, 0.0}}));

  const auto u = unitary_u(0.3).matrix();
  CHECK(max_abs_diff(dagger(u) * u, ComplexMatrix::identity(3)) <= 1e-12);

  random::Engine rng(7);
  const auto g = random::gaussian_matrix(rng, 3, 5);
  CHECK(dagger(dagger(g)) == g);
}

TEST_CASE("kron") {
  CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
  CHECK(kron(diag({1.0, 2.0}), diag({3.0, 4.0})) == diag({3.0, 4.0, 6.0, 8.0}));

  const auto e00 = diag({1.0, 0.0});
  const auto e11 = diag({0.0, 1.0});
  ComplexMatrix expected(4, 4);
  expected(1, 1) = 1.0;
  CHECK(kron(e00, e11) == expected);
}

TEST_CASE("kron mixed product property") {
  random::Engine rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random::gaussian_matrix(rng, 2, 3);
    const auto b = random::gaussian_matrix(rng, 3, 2);
    const auto c = random::gaussian_matrix(rng, 3, 2);
    const auto d = random::gaussian_matrix(rng, 2, 4);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) <= 1e-12);
  }
}

TEST_CASE("hermitian_eigenvalues on closed-form cases") {
  CHECK(hermitian_eigenvalues(diag({3.0, 1.0, 2.0})) == std::vector<double>{1.0, 2.0, 3.0});
  const auto ev = hermitian_eigenvalues(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  CHECK(ev[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(ev[1] == doctest::Approx(1.0).epsilon(1e-14));

  // Multiplicities survive.
  const auto rep = hermitian_eigenvalues(diag({2.0, -1.0, 2.0, 2.0}));
  CHECK(rep == std::vector<double>{-1.0, 2.0, 2.0, 2.0});
}

TEST_CASE("hermitian_eigenvalues matches the characteristic-polynomial oracle") {
  random::Engine rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const auto h = random::hermitian(rng, 4);
    const auto jac = hermitian_eigenvalues(h);
    const auto ref = oracle::charpoly_eigenvalues(h);
    REQUIRE(ref.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(jac[k] - ref[k]) <= 1e-8);
  }
}

TEST_CASE("hermitian_eigen returns eigenpairs") {
  random::Engine rng(5);
  const auto h = random::hermitian(rng, 9);
  const auto es = hermitian_eigen(h);
  for (std::size_t k = 0; k < 9; ++k) {
    ComplexVector v(9);
    for (std::size_t i = 0; i < 9; ++i) v[i] = es.vectors(i, k);
    const auto hv = h * v;
    for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(hv[i] - es.values[k] * v[i]) <= 1e-10);
  }
  CHECK(max_abs_diff(dagger(es.vectors) * es.vectors, ComplexMatrix::identity(9)) <= 1e-12);
}

TEST_CASE("hermitian_eigenvalues error paths") {
  const auto nh = ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}});
  CHECK_THROWS_AS(hermitian_eigenvalues(nh), Error);
  try {
    hermitian_eigenvalues(nh);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
  // Asymmetry below the tolerance is accepted.
  auto almost = ComplexMatrix::from_rows({{1.0, 2.0}, {2.0 + 1e-12, 1.0}});
  CHECK_NOTHROW(hermitian_eigenvalues(almost));
  CHECK_THROWS_AS(hermitian_eigenvalues(ComplexMatrix(2, 3)), Error);
}

TEST_CASE("min_eigenvalue") {
  CHECK(min_eigenvalue(ComplexMatrix::identity(9)) == doctest::Approx(1.0));
  CHECK(min_eigenvalue(diag({-0.5, 0.0, 2.0})) == doctest::Approx(-0.5));
  CHECK(min_eigenvalue(partial_transpose(bell_projector(), BipartiteDims(2, 2))) ==
        doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("partial_transpose") {
  random::Engine rng(3);
  const BipartiteDims dims(2, 3);
  const auto s = random::gaussian_matrix(rng, 2, 2);
  const auto t = random::gaussian_matrix(rng, 3, 3);
  CHECK(max_abs_diff(partial_transpose(kron(s, t), dims), kron(s, t.transpose())) == 0.0);

  const auto pt = partial_transpose(bell_projector(), BipartiteDims(2, 2));
  const auto ev = hermitian_eigenvalues(pt);
  CHECK(ev[0] == doctest::Approx(-0.5));
  for (int k = 1; k < 4; ++k) CHECK(ev[k] == doctest::Approx(0.5));

  const auto rho = random::density(rng, 6);
  CHECK(partial_transpose(partial_transpose(rho, dims), dims) == rho);
  CHECK(partial_transpose(rho, dims).trace() == rho.trace());
  CHECK(is_hermitian(partial_transpose(rho, dims), 0.0));

  CHECK_THROWS_AS(partial_transpose(ComplexMatrix::identity(5), dims), Error);
}

TEST_CASE("is_psd") {
  CHECK(is_psd(ComplexMatrix::identity(3), 1e-9));
  CHECK_FALSE(is_psd(diag({1.0, -1e-3}), 1e-9));
  const auto rho = upb_complement_state(tiles());
  CHECK(is_psd(apply_map(identity_map(9), rho.matrix()), 1e-9));
}

TEST_CASE("BipartiteDims rejects trivial factors") {
  CHECK_THROWS_AS(BipartiteDims(1, 3), Error);
  CHECK_NOTHROW(BipartiteDims(2, 2));
}

TEST_CASE("spectral invariants on random Hermitian matrices") {
  random::Engine rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 8);
    const auto h = random::hermitian(rng, n);
    const auto ev = hermitian_eigenvalues(h);
    double sum = 0.0;
    for (double v : ev) sum += v;
    CHECK(std::abs(sum - h.trace().real()) <= 1e-9);

    const auto v = random::unitary(rng, n);
    const auto ev2 = hermitian_eigenvalues(v * h * dagger(v));
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(ev[k] - ev2[k]) <= 1e-9);
  }
}

TEST_CASE("inertia oracle agrees with Jacobi at dimension 27") {
  random::Engine rng(31);
  const auto h = random::hermitian(rng, 27);
  const auto jac = hermitian_eigenvalues(h);
  const auto ref = oracle::inertia_eigenvalues(h);
  const double scale = std::max(std::abs(jac.front()), std::abs(jac.back()));
  for (std::size_t k = 0; k < 27; ++k) CHECK(std::abs(jac[k] - ref[k]) <= 1e-10 * scale);
  CHECK(std::abs(oracle::power_max_eigenvalue(h) - jac.back()) <= 1e-8 * scale);
  CHECK(std::abs(oracle::power_min_eigenvalue(h) - jac.front()) <= 1e-8 * scale);
}

TEST_CASE("determinant") {
  CHECK(std::abs(determinant(diag({2.0, 3.0, 4.0})) - 24.0) <= 1e-12);
  CHECK(std::abs(determinant(ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}})) + 1.0) <= 1e-15);
  CHECK(determinant(ComplexMatrix::from_rows({{1.0, 2.0}, {2.0, 4.0}})) == cplx{});
}
