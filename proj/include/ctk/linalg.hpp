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

#ifndef CTK_LINALG_HPP
#define CTK_LINALG_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace ctk {

using cdouble = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;

inline cdouble overlap(const cvec& a, const cvec& b) { return a.dot(b); }

/// True when two unit vectors describe the same ray (equal up to phase).
bool same_ray(const cvec& a, const cvec& b, double tau);

/// Orthonormal basis of the column span; columns with singular value <= tau
/// are dropped.
cmat orthonormal_basis(const cmat& columns, double tau);

/// Orthonormal basis of the orthogonal complement of the column span inside
/// the ambient dim-dimensional space.
cmat orthocomplement(const cmat& columns, Eigen::Index dim, double tau);

/// Distance from v to the span of an orthonormal basis.
double distance_to_span(const cmat& basis, const cvec& v);

bool span_contains(const cmat& basis, const cvec& v, double tau);

/// True when the two orthonormal bases span the same subspace.
bool same_span(const cmat& a, const cmat& b, double tau);

/// Largest cosine of a principal angle between the two spans (0 when either
/// basis is empty).
double max_principal_cosine(const cmat& a, const cmat& b);

bool is_positive_semidefinite(const cmat& hermitian, double tau);

cvec kron(const cvec& a, const cvec& b);
cmat kron(const cmat& a, const cmat& b);

cvec random_unit_vector(std::mt19937_64& rng, Eigen::Index dim);
cmat random_unitary(std::mt19937_64& rng, Eigen::Index dim);

/// Minimizes ||g - W u|| over unit vectors u (trust-region subproblem on the
/// sphere, solved exactly via the secular equation).
cvec unit_norm_least_squares(const cmat& w, const cvec& g);

/// Round to the given number of significant decimal digits.
double round_significant(double value, int digits);

/// FNV-1a accumulation helpers used to derive per-query RNG streams.
uint64_t fnv1a(uint64_t state, const void* data, size_t bytes);
uint64_t hash_double(uint64_t state, double value);

}  // namespace ctk

#endif
