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
#include <random>

#include "extwit/linalg.hpp"

// Seeded generators shared by the optimisers and the property suites.
namespace extwit::random {

using Engine = std::mt19937_64;

/// Independent standard complex Gaussian entries.
ComplexVector gaussian_vector(Engine& rng, std::size_t n);
ComplexVector unit_vector(Engine& rng, std::size_t n);
ComplexMatrix gaussian_matrix(Engine& rng, std::size_t rows, std::size_t cols);

/// (G + G^dagger) / 2 for a complex Gaussian G.
ComplexMatrix hermitian(Engine& rng, std::size_t n);

/// Haar-distributed unitary (Gram-Schmidt of a Gaussian matrix).
ComplexMatrix unitary(Engine& rng, std::size_t n);

/// G G^dagger / tr(G G^dagger), full rank almost surely.
ComplexMatrix density(Engine& rng, std::size_t n);

/// Mixture of `terms` random product states with random weights.
ComplexMatrix separable_state(Engine& rng, const BipartiteDims& dims, std::size_t terms);

}  // namespace extwit::random
