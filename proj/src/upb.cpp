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

#include "extwit/upb.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "extwit/error.hpp"
#include "extwit/random.hpp"

namespace extwit {

ProductBasisSet::ProductBasisSet(BipartiteDims dims, std::vector<Factor> factors, std::string label)
    : dims_(dims), factors_(std::move(factors)), label_(std::move(label)) {
  for (const auto& [a, b] : factors_) {
    if (a.size() != dims_.dA || b.size() != dims_.dB) {
      throw Error(ErrorKind::DimensionMismatch, label_ + ": factor length does not match dims");
    }
    if (std::abs(norm(a) - 1.0) > 1e-12 || std::abs(norm(b) - 1.0) > 1e-12) {
      throw Error(ErrorKind::BasisNotOrthonormal, label_ + ": factor is not a unit vector");
    }
    joint_.push_back(kron(a, b));
  }
  if (joint_.empty()) throw Error(ErrorKind::BasisNotOrthonormal, label_ + ": empty basis");
  if (max_abs_diff(gram(), ComplexMatrix::identity(joint_.size())) > 1e-10) {
    throw Error(ErrorKind::BasisNotOrthonormal, label_ + ": Gram matrix is not the identity");
  }
}

ComplexMatrix ProductBasisSet::gram() const {
  ComplexMatrix g(joint_.size(), joint_.size());
  for (std::size_t i = 0; i < joint_.size(); ++i)
    for (std::size_t j = 0; j < joint_.size(); ++j) g(i, j) = inner(joint_[i], joint_[j]);
  return g;
}

DensityOperator::DensityOperator(ComplexMatrix matrix, BipartiteDims dims, std::string label)
    : matrix_(std::move(matrix)), dims_(dims), label_(std::move(label)) {
  if (matrix_.rows() != dims_.total() || matrix_.cols() != dims_.total()) {
    throw Error(ErrorKind::DimensionMismatch, label_ + ": matrix does not match dims");
  }
  if (!is_hermitian(matrix_, 1e-12)) throw Error(ErrorKind::InvalidState, label_ + ": not Hermitian");
  if (std::abs(matrix_.trace() - 1.0) > 1e-12) {
    throw Error(ErrorKind::InvalidState, label_ + ": trace differs from 1");
  }
  if (min_eigenvalue(matrix_) < -1e-10) {
    throw Error(ErrorKind::InvalidState, label_ + ": negative eigenvalue");
  }
}

ProductBasisSet tiles() {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const ComplexVector e0{1.0, 0.0, 0.0};
  const ComplexVector e2{0.0, 0.0, 1.0};
  const ComplexVector m01{r2, -r2, 0.0};
  const ComplexVector m12{0.0, r2, -r2};
  const ComplexVector plus{r3, r3, r3};
  return ProductBasisSet(BipartiteDims(3, 3),
                         {{e0, m01}, {m01, e2}, {e2, m12}, {m12, e0}, {plus, plus}}, "tiles");
}

ProductBasisSet pyramid() {
  using std::numbers::pi;
  const double h = 0.5 * std::sqrt(1.0 + std::sqrt(5.0));
  const double n = 2.0 / std::sqrt(5.0 + std::sqrt(5.0));
  std::vector<ComplexVector> v;
  for (int j = 0; j < 5; ++j) {
    const double angle = 2.0 * pi * j / 5.0;
    v.push_back({n * std::cos(angle), n * std::sin(angle), n * h});
  }
  std::vector<ProductBasisSet::Factor> factors;
  for (int j = 0; j < 5; ++j) factors.emplace_back(v[j], v[(2 * j) % 5]);
  return ProductBasisSet(BipartiteDims(3, 3), std::move(factors), "pyramid");
}

ProductBasisSet computational_basis(const BipartiteDims& dims) {
  std::vector<ProductBasisSet::Factor> factors;
  for (std::size_t i = 0; i < dims.dA; ++i) {
    for (std::size_t j = 0; j < dims.dB; ++j) {
      ComplexVector a(dims.dA), b(dims.dB);
      a[i] = 1.0;
      b[j] = 1.0;
      factors.emplace_back(std::move(a), std::move(b));
    }
  }
  return ProductBasisSet(dims, std::move(factors), "computational");
}

DensityOperator upb_complement_state(const ProductBasisSet& basis) {
  const std::size_t n = basis.dims().total();
  const std::size_t k = basis.size();
  if (k >= n) throw Error(ErrorKind::BasisComplete, basis.label() + " spans the whole space");
  if (max_abs_diff(basis.gram(), ComplexMatrix::identity(k)) > 1e-10) {
    throw Error(ErrorKind::BasisNotOrthonormal, basis.label());
  }
  ComplexMatrix rho = ComplexMatrix::identity(n);
  for (const auto& psi : basis.joint()) rho -= outer(psi, psi);
  rho *= 1.0 / static_cast<double>(n - k);
  return DensityOperator(std::move(rho), basis.dims(), basis.label());
}

DensityOperator maximally_entangled(std::size_t d) {
  ComplexVector psi(d * d);
  for (std::size_t i = 0; i < d; ++i) psi[i * d + i] = 1.0 / std::sqrt(static_cast<double>(d));
  return DensityOperator(outer(psi, psi), BipartiteDims(d, d), "maxent" + std::to_string(d));
}

namespace {

// sum_i w_i |v_i><v_i| with w_i = |<u_i|z>|^2 for the fixed other factor.
ComplexMatrix partial_form(const std::vector<ProductBasisSet::Factor>& factors, bool first,
                           std::span<const cplx> other) {
  const std::size_t n = first ? factors.front().first.size() : factors.front().second.size();
  ComplexMatrix m(n, n);
  for (const auto& [a, b] : factors) {
    const auto& v = first ? a : b;
    const auto& u = first ? b : a;
    const double w = std::norm(inner(u, other));
    m += w * outer(v, v);
  }
  return m;
}

struct Run {
  double value;
  std::vector<double> trace;
};

Run run_unextendability(const ProductBasisSet& basis, ComplexVector x, ComplexVector y, int iters,
                        double improvement_tol) {
  Run run{std::numeric_limits<double>::infinity(), {}};
  // min_x sum_i |<a_i|x>|^2 w_i = min eigenvalue of sum_i w_i |a_i><a_i|.
  for (int it = 0; it < iters; ++it) {
    const double before = run.value;
    const auto ex = hermitian_eigen(partial_form(basis.factors(), true, y));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ex.vectors(i, 0);
    run.trace.push_back(ex.values.front());

    const auto ey = hermitian_eigen(partial_form(basis.factors(), false, x));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = ey.vectors(i, 0);
    run.value = ey.values.front();
    run.trace.push_back(run.value);
    if (before - run.value < improvement_tol) break;
  }
  return run;
}

}  // namespace

std::vector<double> unextendability_trace(const ProductBasisSet& basis, ComplexVector x,
                                          ComplexVector y, int iters, double improvement_tol) {
  return run_unextendability(basis, normalized(x), normalized(y), iters, improvement_tol).trace;
}

double unextendability_seesaw(const ProductBasisSet& basis, const UnextendabilityOptions& opts) {
  random::Engine rng(opts.seed);
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < opts.restarts; ++r) {
    ComplexVector x = random::unit_vector(rng, basis.dims().dA);
    ComplexVector y = random::unit_vector(rng, basis.dims().dB);
    best = std::min(best, run_unextendability(basis, std::move(x), std::move(y), opts.iters,
                                              opts.improvement_tol)
                              .value);
  }
  // Eigenvalues of PSD forms can round slightly outside [0, 1].
  return std::clamp(best, 0.0, 1.0);
}

}  // namespace extwit
