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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace extwit {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

/// Dense row-major complex matrix. Dimensions are always positive.
class ComplexMatrix {
 public:
  /// Zero matrix of the given shape.
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const cplx> entries() const noexcept { return data_; }
  std::span<cplx> entries() noexcept { return data_; }

  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  cplx trace() const;
  /// Largest entry modulus.
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix m);
ComplexVector operator*(const ComplexMatrix& m, std::span<const cplx> v);

/// Bipartite split of a dA*dB dimensional space; first factor is the slow index.
struct BipartiteDims {
  std::size_t dA;
  std::size_t dB;

  BipartiteDims(std::size_t a, std::size_t b);
  std::size_t total() const noexcept { return dA * dB; }
  friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

inline constexpr double kHermitianTol = 1e-10;

ComplexMatrix dagger(const ComplexMatrix& m);

/// kron(A,B)[iA*rB + iB, jA*cB + jB] = A[iA,jA] * B[iB,jB].
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-norm of a - b; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& h, double tol = kHermitianTol);

/// |x><y|
ComplexMatrix outer(std::span<const cplx> x, std::span<const cplx> y);
/// <x|y>, conjugate-linear in x.
cplx inner(std::span<const cplx> x, std::span<const cplx> y);
double norm(std::span<const cplx> v);
ComplexVector normalized(std::span<const cplx> v);
ComplexVector kron(std::span<const cplx> x, std::span<const cplx> y);

/// Determinant by LU with partial pivoting.
cplx determinant(const ComplexMatrix& m);

struct EigenSystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelTol = 1e-13;

/// Cyclic complex Jacobi diagonalisation of a Hermitian matrix.
/// Throws NotHermitian when ||H - H^dagger||_max > tol and NoConvergence when
/// the sweep cap is reached first.
EigenSystem hermitian_eigen(const ComplexMatrix& h, double tol = kHermitianTol);

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h, double tol = kHermitianTol);
double min_eigenvalue(const ComplexMatrix& h, double tol = kHermitianTol);
/// Unit eigenvector for the smallest eigenvalue.
ComplexVector min_eigenvector(const ComplexMatrix& h, double tol = kHermitianTol);

/// Block (i,j) of the result is the transpose of block (i,j) of rho.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteDims& dims);

bool is_psd(const ComplexMatrix& h, double tol);

}  // namespace extwit
