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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "extwit/linalg.hpp"

namespace extwit {

/// A linear map on dim x dim matrices, stored as its action on column-major
/// vectorisations: vec(phi(X)) = action * vec(X), with vec(X)[i + j*dim] = X(i,j).
class MapSpec {
 public:
  MapSpec(std::size_t dim, ComplexMatrix action, std::string label);

  /// Tabulates `fn` on the matrix units E_ij.
  static MapSpec from_function(std::size_t dim,
                               const std::function<ComplexMatrix(const ComplexMatrix&)>& fn,
                               std::string label);

  std::size_t dim() const noexcept { return dim_; }
  const ComplexMatrix& action() const noexcept { return action_; }
  const std::string& label() const noexcept { return label_; }

 private:
  std::size_t dim_;
  ComplexMatrix action_;
  std::string label_;
};

/// Cho-Kye style weights of the generalised Choi map.
struct ChoKyeParams {
  double a;
  double b;
  double c;

  ChoKyeParams(double a_, double b_, double c_);
};

/// Full-rank operator A acting as X -> A X A^dagger.
class OperatorFactor {
 public:
  explicit OperatorFactor(ComplexMatrix matrix, std::string label = "A");

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  bool is_unitary() const noexcept { return unitary_; }
  const std::string& label() const noexcept { return label_; }
  std::size_t dim() const noexcept { return matrix_.rows(); }

 private:
  ComplexMatrix matrix_;
  bool unitary_;
  std::string label_;
};

inline constexpr double kCpTol = 1e-9;

ComplexMatrix vec_to_matrix(std::span<const cplx> v, std::size_t dim);
ComplexVector matrix_to_vec(const ComplexMatrix& m);
/// E_ij as a dim x dim matrix.
ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j);

ComplexMatrix apply_map(const MapSpec& phi, const ComplexMatrix& x);

MapSpec identity_map(std::size_t dim);
MapSpec transpose_map(std::size_t dim);

/// X -> (1/2) [ x11+x22, -x12, -x13; -x21, x22+x33, -x23; -x31, -x32, x33+x11 ].
MapSpec choi_c1();
/// X -> (1/2) [ x11+x33, -x12, -x13; -x21, x22+x11, -x23; -x31, -x32, x33+x22 ].
MapSpec choi_c2();

/// Diagonal (1/2)(a x_kk + b x_{k+1,k+1} + c x_{k+2,k+2}) with cyclic indices,
/// off-diagonal entries -x_ij / 2.
MapSpec generalized_choi(const ChoKyeParams& p);

/// Extremal one-parameter subfamily: a = (1-t)^2/(1-t+t^2), b = t^2/(1-t+t^2),
/// c = 1/(1-t+t^2). Satisfies a+b+c = 2 and bc = (1-a)^2.
ChoKyeParams cho_kye_t(double t);

/// Rotation in the (0,2) plane: [[cos, 0, sin], [0, 1, 0], [-sin, 0, cos]].
OperatorFactor unitary_u(double theta);

/// phi o A, i.e. X -> phi(A X A^dagger).
MapSpec inner_automorphism(const MapSpec& phi, const OperatorFactor& a);
/// A o phi, i.e. X -> A phi(X) A^dagger.
MapSpec outer_automorphism(const OperatorFactor& a, const MapSpec& phi);

/// The map whose biquadratic form is F(a_1 x_1, ..., a_n x_n; y): the matrix
/// unit E_ij is rescaled by a_i conj(a_j) before phi acts.
MapSpec diagonal_scaling(const MapSpec& phi, std::span<const cplx> scales);

/// A / s_max(A); throws SingularInput when |det A| <= 1e-12.
OperatorFactor clamp_to_operation(const ComplexMatrix& a);

/// sum_ij E_ij (x) phi(E_ij).
ComplexMatrix choi_matrix(const MapSpec& phi);
bool is_cp(const MapSpec& phi, double tol = kCpTol);

/// Kraus operators from the spectral decomposition of the Choi matrix.
/// Throws NotCP when the Choi matrix has an eigenvalue below -tol.
std::vector<ComplexMatrix> kraus_from_choi(const MapSpec& phi, double tol = kCpTol);

/// Max-norm distance between two action tensors.
double action_residual(const MapSpec& a, const MapSpec& b);

/// <y| phi(|x><x|) |y>. Throws NonRealValue if the imaginary part exceeds 1e-9.
double biquadratic_form(const MapSpec& phi, std::span<const cplx> x, std::span<const cplx> y);

struct SeesawOptions {
  int restarts = 50;
  int iters = 200;
  std::uint64_t seed = 0;
  double improvement_tol = 1e-13;
};

struct PositivityResult {
  double min_value;
  ComplexVector x;
  ComplexVector y;
};

/// Alternating exact minimisation of the biquadratic form over unit x, y,
/// restarted from seeded Gaussian points. A negative result certifies that phi
/// is not positive; a non-negative one is numerical evidence of positivity.
PositivityResult positivity_seesaw(const MapSpec& phi, const SeesawOptions& opts = {});

/// One seesaw run from the given start; returns the objective after every half step.
std::vector<double> positivity_seesaw_trace(const MapSpec& phi, ComplexVector x, ComplexVector y,
                                            int iters, double improvement_tol = 1e-13);

/// || choi_c1 - U(3pi/2) o choi_c2 o U(pi/2) ||_max on action tensors.
double choi_relation_residual();

/// || phi_t - U(3pi/2) o phi_{1/t} o U(pi/2) ||_max with phi_t = generalized_choi(cho_kye_t(t)).
double cho_kye_relation_residual(double t);

/// || diagonal_scaling(phi, a) - phi o diag(a) ||_max.
double diagonal_extension_residual(const MapSpec& phi, std::span<const cplx> scales);

}  // namespace extwit
