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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "extwit/linalg.hpp"

namespace extwit {

/// Orthonormal set of bipartite product vectors a_i (x) b_i.
class ProductBasisSet {
 public:
  using Factor = std::pair<ComplexVector, ComplexVector>;

  /// Throws BasisNotOrthonormal unless every factor is a unit vector and the
  /// joint vectors are orthonormal within 1e-10.
  ProductBasisSet(BipartiteDims dims, std::vector<Factor> factors, std::string label = "basis");

  const BipartiteDims& dims() const noexcept { return dims_; }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  const std::vector<ComplexVector>& joint() const noexcept { return joint_; }
  std::size_t size() const noexcept { return factors_.size(); }
  const std::string& label() const noexcept { return label_; }

  ComplexMatrix gram() const;

 private:
  BipartiteDims dims_;
  std::vector<Factor> factors_;
  std::vector<ComplexVector> joint_;
  std::string label_;
};

/// Unit-trace positive semidefinite operator on a bipartite space.
class DensityOperator {
 public:
  /// Throws InvalidState unless Hermitian within 1e-12, trace 1 within 1e-12 and
  /// min eigenvalue >= -1e-10.
  DensityOperator(ComplexMatrix matrix, BipartiteDims dims, std::string label = "rho");

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const BipartiteDims& dims() const noexcept { return dims_; }
  const std::string& label() const noexcept { return label_; }

 private:
  ComplexMatrix matrix_;
  BipartiteDims dims_;
  std::string label_;
};

ProductBasisSet tiles();
ProductBasisSet pyramid();
/// {e_i (x) e_j}, the standard product basis of C^dA (x) C^dB.
ProductBasisSet computational_basis(const BipartiteDims& dims);

/// (I - sum_i |psi_i><psi_i|) / (dA dB - k).
DensityOperator upb_complement_state(const ProductBasisSet& basis);

/// Normalised projector onto sum_i e_i (x) e_i.
DensityOperator maximally_entangled(std::size_t d);

struct UnextendabilityOptions {
  int restarts = 50;
  int iters = 200;
  std::uint64_t seed = 0;
  double improvement_tol = 1e-13;
};

/// Smallest sum_i |<psi_i|x (x) y>|^2 found over unit product vectors by
/// alternating minimal-eigenvector steps. A positive value is heuristic evidence
/// that no product vector lies in the orthogonal complement.
double unextendability_seesaw(const ProductBasisSet& basis, const UnextendabilityOptions& opts = {});

/// Objective after every half step of a single run from (x, y).
std::vector<double> unextendability_trace(const ProductBasisSet& basis, ComplexVector x,
                                          ComplexVector y, int iters,
                                          double improvement_tol = 1e-13);

}  // namespace extwit
