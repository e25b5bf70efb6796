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

#include "extwit/maps.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "extwit/error.hpp"
#include "extwit/random.hpp"

namespace extwit {

namespace {

std::string fmt_num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

void require_dim(const MapSpec& phi, std::size_t d, const char* op) {
  if (phi.dim() != d) {
    throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": map acts on " +
                                                  std::to_string(phi.dim()) + "x" +
                                                  std::to_string(phi.dim()) + ", operand is " +
                                                  std::to_string(d) + "x" + std::to_string(d));
  }
}

// vec(A X A^dagger) = (conj(A) (x) A) vec(X) for column-major vec.
ComplexMatrix conjugation_action(const ComplexMatrix& a) { return kron(a.conj(), a); }

MapSpec diagonal_family(std::string label, double a, double b, double c) {
  return MapSpec::from_function(
      3,
      [a, b, c](const ComplexMatrix& x) {
        ComplexMatrix y = -0.5 * x;
        for (std::size_t k = 0; k < 3; ++k) {
          y(k, k) = 0.5 * (a * x(k, k) + b * x((k + 1) % 3, (k + 1) % 3) +
                           c * x((k + 2) % 3, (k + 2) % 3));
        }
        return y;
      },
      std::move(label));
}

}  // namespace

MapSpec::MapSpec(std::size_t dim, ComplexMatrix action, std::string label)
    : dim_(dim), action_(std::move(action)), label_(std::move(label)) {
  if (action_.rows() != dim * dim || action_.cols() != dim * dim) {
    throw Error(ErrorKind::DimensionMismatch, "action tensor must be dim^2 x dim^2");
  }
}

MapSpec MapSpec::from_function(std::size_t dim,
                               const std::function<ComplexMatrix(const ComplexMatrix&)>& fn,
                               std::string label) {
  const std::size_t d2 = dim * dim;
  ComplexMatrix action(d2, d2);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      const ComplexMatrix image = fn(matrix_unit(dim, i, j));
      const std::size_t col = i + j * dim;
      for (std::size_t l = 0; l < dim; ++l)
        for (std::size_t k = 0; k < dim; ++k) action(k + l * dim, col) = image(k, l);
    }
  }
  return MapSpec(dim, std::move(action), std::move(label));
}

ChoKyeParams::ChoKyeParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  for (double v : {a, b, c}) {
    if (!std::isfinite(v) || v < 0.0) {
      throw Error(ErrorKind::ConfigError, "Cho-Kye parameters must be finite and non-negative");
    }
  }
}

OperatorFactor::OperatorFactor(ComplexMatrix matrix, std::string label)
    : matrix_(std::move(matrix)), unitary_(false), label_(std::move(label)) {
  if (!matrix_.is_square()) throw Error(ErrorKind::DimensionMismatch, "operator must be square");
  if (std::abs(determinant(matrix_)) <= 1e-12) {
    throw Error(ErrorKind::SingularInput, "operator " + label_ + " is not full rank");
  }
  unitary_ = max_abs_diff(matrix_ * dagger(matrix_), ComplexMatrix::identity(dim())) <= 1e-10;
}

ComplexMatrix vec_to_matrix(std::span<const cplx> v, std::size_t dim) {
  if (v.size() != dim * dim) throw Error(ErrorKind::DimensionMismatch, "vec length mismatch");
  ComplexMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = v[i + j * dim];
  return m;
}

ComplexVector matrix_to_vec(const ComplexMatrix& m) {
  ComplexVector v(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) v[i + j * m.rows()] = m(i, j);
  return v;
}

ComplexMatrix matrix_unit(std::size_t dim, std::size_t i, std::size_t j) {
  ComplexMatrix e(dim, dim);
  e(i, j) = 1.0;
  return e;
}

ComplexMatrix apply_map(const MapSpec& phi, const ComplexMatrix& x) {
  if (!x.is_square()) throw Error(ErrorKind::DimensionMismatch, "apply_map: operand not square");
  require_dim(phi, x.rows(), "apply_map");
  return vec_to_matrix(phi.action() * matrix_to_vec(x), phi.dim());
}

MapSpec identity_map(std::size_t dim) {
  return MapSpec(dim, ComplexMatrix::identity(dim * dim), "id" + std::to_string(dim));
}

MapSpec transpose_map(std::size_t dim) {
  return MapSpec::from_function(
      dim, [](const ComplexMatrix& x) { return x.transpose(); }, "T" + std::to_string(dim));
}

MapSpec choi_c1() { return diagonal_family("choi1", 1.0, 1.0, 0.0); }
MapSpec choi_c2() { return diagonal_family("choi2", 1.0, 0.0, 1.0); }

MapSpec generalized_choi(const ChoKyeParams& p) {
  return diagonal_family("choi[" + fmt_num(p.a) + "," + fmt_num(p.b) + "," + fmt_num(p.c) + "]",
                         p.a, p.b, p.c);
}

ChoKyeParams cho_kye_t(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw Error(ErrorKind::ConfigError, "t must be finite and non-negative");
  }
  const double den = 1.0 - t + t * t;
  return ChoKyeParams((1.0 - t) * (1.0 - t) / den, t * t / den, 1.0 / den);
}

OperatorFactor unitary_u(double theta) {
  if (!std::isfinite(theta)) throw Error(ErrorKind::ConfigError, "theta must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return OperatorFactor(ComplexMatrix::from_rows({{c, 0.0, s}, {0.0, 1.0, 0.0}, {-s, 0.0, c}}),
                        "U(" + fmt_num(theta) + ")");
}

MapSpec inner_automorphism(const MapSpec& phi, const OperatorFactor& a) {
  require_dim(phi, a.dim(), "inner_automorphism");
  return MapSpec(phi.dim(), phi.action() * conjugation_action(a.matrix()),
                 phi.label() + " o " + a.label());
}

MapSpec outer_automorphism(const OperatorFactor& a, const MapSpec& phi) {
  require_dim(phi, a.dim(), "outer_automorphism");
  return MapSpec(phi.dim(), conjugation_action(a.matrix()) * phi.action(),
                 a.label() + " o " + phi.label());
}

MapSpec diagonal_scaling(const MapSpec& phi, std::span<const cplx> scales) {
  require_dim(phi, scales.size(), "diagonal_scaling");
  const std::size_t d = phi.dim();
  ComplexMatrix action = phi.action();
  std::string label = phi.label() + "_(";
  for (std::size_t j = 0; j < d; ++j) {
    if (scales[j] == cplx{}) throw Error(ErrorKind::SingularInput, "diagonal scale must be nonzero");
    for (std::size_t i = 0; i < d; ++i) {
      const cplx f = scales[i] * std::conj(scales[j]);
      for (std::size_t r = 0; r < d * d; ++r) action(r, i + j * d) *= f;
    }
    label += (j ? "," : "") + fmt_num(std::abs(scales[j]));
  }
  return MapSpec(d, std::move(action), label + ")");
}

OperatorFactor clamp_to_operation(const ComplexMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::DimensionMismatch, "operator must be square");
  if (std::abs(determinant(a)) <= 1e-12) {
    throw Error(ErrorKind::SingularInput, "operator is not full rank");
  }
  const double top = std::sqrt(hermitian_eigenvalues(a * dagger(a)).back());
  return OperatorFactor((1.0 / top) * a, "A");
}

ComplexMatrix choi_matrix(const MapSpec& phi) {
  const std::size_t d = phi.dim();
  ComplexMatrix c(d * d, d * d);
  const ComplexMatrix& t = phi.action();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) c(i * d + k, j * d + l) = t(k + l * d, i + j * d);
  return c;
}

bool is_cp(const MapSpec& phi, double tol) { return is_psd(choi_matrix(phi), tol); }

std::vector<ComplexMatrix> kraus_from_choi(const MapSpec& phi, double tol) {
  const auto es = hermitian_eigen(choi_matrix(phi));
  if (es.values.front() < -tol) {
    throw Error(ErrorKind::NotCP, phi.label() + " has Choi eigenvalue " + fmt_num(es.values.front()));
  }
  const std::size_t d = phi.dim();
  std::vector<ComplexMatrix> ops;
  for (std::size_t m = 0; m < es.values.size(); ++m) {
    if (es.values[m] <= tol) continue;
    const double w = std::sqrt(es.values[m]);
    ComplexMatrix v(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) v(k, i) = w * es.vectors(i * d + k, m);
    ops.push_back(std::move(v));
  }
  return ops;
}

double action_residual(const MapSpec& a, const MapSpec& b) {
  return max_abs_diff(a.action(), b.action());
}

double biquadratic_form(const MapSpec& phi, std::span<const cplx> x, std::span<const cplx> y) {
  if (x.size() != phi.dim() || y.size() != phi.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "biquadratic_form: vector length must equal dim");
  }
  const ComplexMatrix image = apply_map(phi, outer(x, x));
  const cplx f = inner(y, image * y);
  if (std::abs(f.imag()) > 1e-9) {
    throw Error(ErrorKind::NonRealValue, "imaginary part " + fmt_num(f.imag()));
  }
  return f.real();
}

namespace {

// K_y[i,j] = <y|phi(E_ij)|y>; F(x;y) = z^dagger K_y z with z = conj(x).
ComplexMatrix form_in_x(const MapSpec& phi, std::span<const cplx> y) {
  const std::size_t d = phi.dim();
  const ComplexMatrix& t = phi.action();
  ComplexMatrix k(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      cplx s = 0.0;
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t r = 0; r < d; ++r) s += std::conj(y[r]) * t(r + l * d, i + j * d) * y[l];
      k(i, j) = s;
    }
  }
  return k;
}

struct SeesawRun {
  double value;
  ComplexVector x;
  ComplexVector y;
  std::vector<double> trace;
};

SeesawRun run_positivity(const MapSpec& phi, ComplexVector x, ComplexVector y, int iters,
                         double improvement_tol) {
  SeesawRun run{std::numeric_limits<double>::infinity(), std::move(x), std::move(y), {}};
  for (int it = 0; it < iters; ++it) {
    const double before = run.value;

    const auto img = hermitian_eigen(apply_map(phi, outer(run.x, run.x)));
    for (std::size_t i = 0; i < run.y.size(); ++i) run.y[i] = img.vectors(i, 0);
    run.trace.push_back(img.values.front());

    const auto kx = hermitian_eigen(form_in_x(phi, run.y));
    for (std::size_t i = 0; i < run.x.size(); ++i) run.x[i] = std::conj(kx.vectors(i, 0));
    run.value = kx.values.front();
    run.trace.push_back(run.value);

    if (before - run.value < improvement_tol) break;
  }
  return run;
}

}  // namespace

std::vector<double> positivity_seesaw_trace(const MapSpec& phi, ComplexVector x, ComplexVector y,
                                            int iters, double improvement_tol) {
  return run_positivity(phi, normalized(x), normalized(y), iters, improvement_tol).trace;
}

PositivityResult positivity_seesaw(const MapSpec& phi, const SeesawOptions& opts) {
  random::Engine rng(opts.seed);
  PositivityResult best{std::numeric_limits<double>::infinity(), {}, {}};
  for (int r = 0; r < opts.restarts; ++r) {
    ComplexVector x = random::unit_vector(rng, phi.dim());
    ComplexVector y = random::unit_vector(rng, phi.dim());
    auto run = run_positivity(phi, std::move(x), std::move(y), opts.iters, opts.improvement_tol);
    if (run.value < best.min_value) best = {run.value, std::move(run.x), std::move(run.y)};
  }
  return best;
}

double choi_relation_residual() {
  using std::numbers::pi;
  const MapSpec composed =
      outer_automorphism(unitary_u(1.5 * pi), inner_automorphism(choi_c2(), unitary_u(0.5 * pi)));
  return action_residual(choi_c1(), composed);
}

double cho_kye_relation_residual(double t) {
  using std::numbers::pi;
  if (!(t > 0.0)) throw Error(ErrorKind::ConfigError, "t must be positive to form 1/t");
  const MapSpec direct = generalized_choi(cho_kye_t(t));
  const MapSpec composed = outer_automorphism(
      unitary_u(1.5 * pi), inner_automorphism(generalized_choi(cho_kye_t(1.0 / t)), unitary_u(0.5 * pi)));
  return action_residual(direct, composed);
}

double diagonal_extension_residual(const MapSpec& phi, std::span<const cplx> scales) {
  const OperatorFactor a(ComplexMatrix::diagonal(scales), "diag");
  return action_residual(diagonal_scaling(phi, scales), inner_automorphism(phi, a));
}

}  // namespace extwit
