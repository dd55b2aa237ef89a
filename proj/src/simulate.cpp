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

#include "ctk/simulate.hpp"

#include <numeric>

#include "ctk/errors.hpp"

namespace ctk::sim {

namespace {

std::vector<int> strides_of(const std::vector<int>& dims) {
  std::vector<int> strides(dims.size(), 1);
  for (int f = static_cast<int>(dims.size()) - 2; f >= 0; --f) {
    strides[f] = strides[f + 1] * dims[f + 1];
  }
  return strides;
}

}  // namespace

StateVector StateVector::product(std::vector<int> dims, const std::vector<cvec>& factors) {
  if (dims.size() != factors.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one vector per factor");
  }
  cvec amp = cvec::Ones(1);
  for (size_t f = 0; f < factors.size(); ++f) {
    if (factors[f].size() != dims[f]) {
      throw Error(ErrorCode::DimensionMismatch, "factor vector has the wrong dimension");
    }
    amp = kron(amp, factors[f]);
  }
  return StateVector{std::move(dims), std::move(amp)};
}

int StateVector::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<int>());
}

int StateVector::index_of(const std::vector<int>& digits) const {
  if (digits.size() != dims.size()) {
    throw Error(ErrorCode::DimensionMismatch, "one digit per factor");
  }
  auto strides = strides_of(dims);
  int index = 0;
  for (size_t f = 0; f < dims.size(); ++f) {
    if (digits[f] < 0 || digits[f] >= dims[f]) {
      throw Error(ErrorCode::DimensionMismatch, "digit out of range");
    }
    index += digits[f] * strides[f];
  }
  return index;
}

void apply_unitary(StateVector& state, const cmat& u, const std::vector<int>& factors) {
  auto strides = strides_of(state.dims);
  int sub_dim = 1;
  std::vector<bool> touched(state.dims.size(), false);
  for (int f : factors) {
    if (f < 0 || f >= static_cast<int>(state.dims.size()) || touched[f]) {
      throw Error(ErrorCode::DimensionMismatch, "bad factor list");
    }
    touched[f] = true;
    sub_dim *= state.dims[f];
  }
  if (u.rows() != sub_dim || u.cols() != sub_dim) {
    throw Error(ErrorCode::DimensionMismatch, "operator does not match the factors");
  }

  std::vector<int> rest;
  int rest_dim = 1;
  for (size_t f = 0; f < state.dims.size(); ++f) {
    if (!touched[f]) {
      rest.push_back(static_cast<int>(f));
      rest_dim *= state.dims[f];
    }
  }

  cvec gathered(sub_dim);
  for (int r = 0; r < rest_dim; ++r) {
    int base = 0;
    int rr = r;
    for (int k = static_cast<int>(rest.size()) - 1; k >= 0; --k) {
      base += (rr % state.dims[rest[k]]) * strides[rest[k]];
      rr /= state.dims[rest[k]];
    }
    for (int s = 0; s < sub_dim; ++s) {
      int offset = 0;
      int ss = s;
      for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
        offset += (ss % state.dims[factors[k]]) * strides[factors[k]];
        ss /= state.dims[factors[k]];
      }
      gathered(s) = state.amplitudes(base + offset);
    }
    cvec transformed = u * gathered;
    for (int s = 0; s < sub_dim; ++s) {
      int offset = 0;
      int ss = s;
      for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
        offset += (ss % state.dims[factors[k]]) * strides[factors[k]];
        ss /= state.dims[factors[k]];
      }
      state.amplitudes(base + offset) = transformed(s);
    }
  }
}

std::vector<double> marginal_weights(const StateVector& state, const std::vector<int>& factors) {
  auto strides = strides_of(state.dims);
  int sub_dim = 1;
  for (int f : factors) sub_dim *= state.dims[f];
  std::vector<double> weights(sub_dim, 0.0);
  const int total = state.total_dim();
  for (int idx = 0; idx < total; ++idx) {
    int outcome = 0;
    for (int f : factors) {
      int digit = (idx / strides[f]) % state.dims[f];
      outcome = outcome * state.dims[f] + digit;
    }
    weights[outcome] += std::norm(state.amplitudes(idx));
  }
  return weights;
}

std::optional<int> sharp_outcome(const StateVector& state, const std::vector<int>& factors,
                                 double tau) {
  auto weights = marginal_weights(state, factors);
  for (size_t k = 0; k < weights.size(); ++k) {
    if (weights[k] >= 1.0 - tau) return static_cast<int>(k);
  }
  return std::nullopt;
}

cmat controlled_shift(int d_ctrl, int d_ptr) {
  const int total = d_ctrl * d_ptr;
  cmat u = cmat::Zero(total, total);
  for (int i = 0; i < d_ctrl; ++i) {
    for (int m = 0; m < d_ptr; ++m) {
      u(i * d_ptr + (m + i) % d_ptr, i * d_ptr + m) = 1.0;
    }
  }
  return u;
}

cmat permutation_matrix(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  cmat u = cmat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (images[i] < 0 || images[i] >= n) {
      throw Error(ErrorCode::ValidationError, "permutation image out of range");
    }
    u(images[i], i) = 1.0;
  }
  return u;
}

cmat comparator(int d) {
  const int total = d * d * 2;
  cmat u = cmat::Zero(total, total);
  for (int v = 0; v < d; ++v) {
    for (int w = 0; w < d; ++w) {
      for (int r = 0; r < 2; ++r) {
        const int flip = v == w ? 1 - r : r;
        u((v * d + w) * 2 + flip, (v * d + w) * 2 + r) = 1.0;
      }
    }
  }
  return u;
}

cmat unitary_extension(const std::vector<cvec>& ins, const std::vector<cvec>& outs,
                       double tau) {
  if (ins.empty() || ins.size() != outs.size()) {
    throw Error(ErrorCode::DimensionMismatch, "paired vector lists required");
  }
  const Eigen::Index d = ins.front().size();
  for (size_t i = 0; i < ins.size(); ++i) {
    if (ins[i].size() != d || outs[i].size() != d) {
      throw Error(ErrorCode::DimensionMismatch, "all vectors must share one dimension");
    }
    for (size_t j = 0; j < ins.size(); ++j) {
      if (std::abs(overlap(ins[i], ins[j]) - overlap(outs[i], outs[j])) > 1e-7) {
        throw Error(ErrorCode::ValidationError,
                    "the map does not preserve inner products");
      }
    }
  }

  // Paired Gram-Schmidt; equal Grams keep the two residual norms equal.
  std::vector<cvec> qin, qout;
  for (size_t k = 0; k < ins.size(); ++k) {
    cvec v = ins[k];
    cvec w = outs[k];
    for (size_t r = 0; r < qin.size(); ++r) {
      cdouble c = overlap(qin[r], ins[k]);
      v -= c * qin[r];
      w -= c * qout[r];
    }
    const double nv = v.norm();
    if (nv <= tau * 100) continue;
    qin.push_back(v / nv);
    qout.push_back(w / w.norm());
  }

  cmat u = cmat::Zero(d, d);
  for (size_t r = 0; r < qin.size(); ++r) u += qout[r] * qin[r].adjoint();
  cmat min(d, static_cast<Eigen::Index>(qin.size()));
  cmat mout(d, static_cast<Eigen::Index>(qout.size()));
  for (size_t r = 0; r < qin.size(); ++r) {
    min.col(static_cast<Eigen::Index>(r)) = qin[r];
    mout.col(static_cast<Eigen::Index>(r)) = qout[r];
  }
  cmat cin = orthocomplement(min, d, tau);
  cmat cout = orthocomplement(mout, d, tau);
  u += cout * cin.adjoint();

  if ((u.adjoint() * u - cmat::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-7) {
    throw Error(ErrorCode::ValidationError, "extension failed to close to a unitary");
  }
  return u;
}

}  // namespace ctk::sim
