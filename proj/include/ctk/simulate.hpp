// Copyright 2026 The ctk Authors
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

#ifndef CTK_SIMULATE_HPP
#define CTK_SIMULATE_HPP

#include <optional>
#include <vector>

#include "ctk/linalg.hpp"

namespace ctk::sim {

/// Pure state of an ordered list of finite factors; the first factor is the
/// most significant index digit (matching the Kronecker product order).
struct StateVector {
  std::vector<int> dims;
  cvec amplitudes;

  static StateVector product(std::vector<int> dims, const std::vector<cvec>& factors);
  int total_dim() const;
  int index_of(const std::vector<int>& digits) const;
};

/// Applies a unitary over the listed factors (in the listed order), leaving
/// the rest untouched.
void apply_unitary(StateVector& state, const cmat& u, const std::vector<int>& factors);

/// Outcome weights of the computational basis on the listed factors.
std::vector<double> marginal_weights(const StateVector& state, const std::vector<int>& factors);

/// Index of the basis outcome carrying all the weight, if any.
std::optional<int> sharp_outcome(const StateVector& state, const std::vector<int>& factors,
                                 double tau);

/// |i, m> -> |i, m + i mod d_ptr>: records a basis index into a pointer.
cmat controlled_shift(int d_ctrl, int d_ptr);

/// Basis permutation |i> -> |images[i]>.
cmat permutation_matrix(const std::vector<int>& images);

/// |v, w, r> -> |v, w, r xor [v == w]> on dims (d, d, 2).
cmat comparator(int d);

/// The unitary carrying in_k to out_k for every k, acting as any fixed
/// isometry on the orthogonal complement. The two lists must have equal Gram
/// matrices.
cmat unitary_extension(const std::vector<cvec>& ins, const std::vector<cvec>& outs,
                       double tau = 1e-9);

}  // namespace ctk::sim

#endif
