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

#include "extwit/random.hpp"

#include <cmath>

namespace extwit::random {

ComplexVector gaussian_vector(Engine& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexVector v(n);
  for (auto& z : v) {
    const double re = g(rng);
    const double im = g(rng);
    z = {re, im};
  }
  return v;
}

ComplexVector unit_vector(Engine& rng, std::size_t n) { return normalized(gaussian_vector(rng, n)); }

ComplexMatrix gaussian_matrix(Engine& rng, std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols, gaussian_vector(rng, rows * cols));
}

ComplexMatrix hermitian(Engine& rng, std::size_t n) {
  const ComplexMatrix g = gaussian_matrix(rng, n, n);
  return 0.5 * (g + dagger(g));
}

ComplexMatrix unitary(Engine& rng, std::size_t n) {
  ComplexMatrix q = gaussian_matrix(rng, n, n);
  // Modified Gram-Schmidt on columns.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx proj = 0.0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, j)) * q(i, k);
      for (std::size_t i = 0; i < n; ++i) q(i, k) -= proj * q(i, j);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < n; ++i) nrm += std::norm(q(i, k));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q(i, k) /= nrm;
  }
  return q;
}

ComplexMatrix density(Engine& rng, std::size_t n) {
  const ComplexMatrix g = gaussian_matrix(rng, n, n);
  ComplexMatrix rho = g * dagger(g);
  rho *= 1.0 / rho.trace().real();
  return rho;
}

ComplexMatrix separable_state(Engine& rng, const BipartiteDims& dims, std::size_t terms) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  ComplexMatrix rho(dims.total(), dims.total());
  double total = 0.0;
  for (std::size_t t = 0; t < terms; ++t) {
    const double w = u(rng);
    total += w;
    rho += w * kron(density(rng, dims.dA), density(rng, dims.dB));
  }
  rho *= 1.0 / total;
  return rho;
}

}  // namespace extwit::random
