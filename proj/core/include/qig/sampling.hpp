// Copyright 2026 The qig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <vector>

#include "qig/random.hpp"
#include "qig/state.hpp"

namespace qig {

// Matrix with i.i.d. standard complex Gaussian entries (each of the real and
// imaginary parts is N(0,1)), filled row-major for reproducibility.
Matrix random_ginibre(Index rows, Index cols, RngStream& rng);

// G G*/Tr(G G*) for a square Ginibre G; if the smallest eigenvalue falls under
// the faithfulness floor e, the draw is mixed with the identity,
// (1-delta) rho + delta I/n with delta = 10 e n, which restores faithfulness.
DensityMatrix random_density(Index n, RngStream& rng);

// (G + G*)/2 for Ginibre G: a GUE-distributed Hermitian observable.
Observable random_observable(Index n, RngStream& rng);

// m independent observables; centered against the given state when provided.
std::vector<Observable> random_observable_tuple(Index n, int m, RngStream& rng,
                                                const DensityMatrix* centered_against = nullptr);

// Haar-distributed unitary (QR of a Ginibre matrix with the phase convention
// fixed by the diagonal of R).
Matrix random_unitary(Index n, RngStream& rng);

}  // namespace qig
