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

#include "ctk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "ctk/errors.hpp"

namespace ctk {

bool same_ray(const cvec& a, const cvec& b, double tau) {
  if (a.size() != b.size()) return false;
  return std::abs(overlap(a, b)) >= 1.0 - tau;
}

cmat orthonormal_basis(const cmat& columns, double tau) {
  if (columns.cols() == 0) return cmat(columns.rows(), 0);
  Eigen::JacobiSVD<cmat> svd(columns, Eigen::ComputeThinU);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tau) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

cmat orthocomplement(const cmat& columns, Eigen::Index dim, double tau) {
  if (columns.cols() == 0) return cmat::Identity(dim, dim);
  Eigen::JacobiSVD<cmat> svd(columns, Eigen::ComputeFullU);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tau) ++rank;
  }
  return svd.matrixU().rightCols(dim - rank);
}

double distance_to_span(const cmat& basis, const cvec& v) {
  if (basis.cols() == 0) return v.norm();
  cvec residual = v - basis * (basis.adjoint() * v);
  return residual.norm();
}

bool span_contains(const cmat& basis, const cvec& v, double tau) {
  return distance_to_span(basis, v) <= tau;
}

bool same_span(const cmat& a, const cmat& b, double tau) {
  if (a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < b.cols(); ++i) {
    if (!span_contains(a, b.col(i), tau)) return false;
  }
  return true;
}

double max_principal_cosine(const cmat& a, const cmat& b) {
  if (a.cols() == 0 || b.cols() == 0) return 0.0;
  cmat cross = a.adjoint() * b;
  Eigen::JacobiSVD<cmat> svd(cross);
  double c = svd.singularValues()(0);
  return std::clamp(c, 0.0, 1.0);
}

bool is_positive_semidefinite(const cmat& hermitian, double tau) {
  Eigen::SelfAdjointEigenSolver<cmat> es(hermitian, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tau;
}

cvec kron(const cvec& a, const cvec& b) {
  cvec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

cmat kron(const cmat& a, const cmat& b) {
  cmat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

cvec random_unit_vector(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  cvec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = cdouble(gauss(rng), gauss(rng));
  double n = v.norm();
  if (n == 0.0) {
    v.setZero();
    v(0) = 1.0;
    return v;
  }
  return v / n;
}

cmat random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  cmat m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = cdouble(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<cmat> qr(m);
  cmat q = qr.householderQ();
  // Fix the phase convention so Q is unique given R's diagonal signs.
  cmat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    cdouble d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

cvec unit_norm_least_squares(const cmat& w, const cvec& g) {
  const Eigen::Index k = w.cols();
  if (k == 0) throw Error(ErrorCode::DimensionMismatch, "empty least-squares system");
  cmat a = w.adjoint() * w;
  cvec r = w.adjoint() * g;

  Eigen::SelfAdjointEigenSolver<cmat> es(a);
  Eigen::VectorXd lambda = es.eigenvalues();
  cvec beta = es.eigenvectors().adjoint() * r;

  const double lmin = lambda(0);
  const double tiny = 1e-14 * (1.0 + lambda(k - 1));

  if (r.norm() <= tiny) {
    // Objective reduces to u^H A u; the best unit u is the bottom eigenvector.
    return es.eigenvectors().col(0);
  }

  auto norm2_at = [&](double mu) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < k; ++i) {
      double d = lambda(i) + mu;
      s += std::norm(beta(i)) / (d * d);
    }
    return s;
  };

  // Detect the hard case: no weight on the bottom eigenspace and the interior
  // solution at mu -> -lmin is still short of the sphere.
  bool bottom_weight = false;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (std::abs(lambda(i) - lmin) <= tiny && std::abs(beta(i)) > tiny) {
      bottom_weight = true;
      break;
    }
  }
  if (!bottom_weight) {
    double s = 0.0;
    cvec y = cvec::Zero(k);
    for (Eigen::Index i = 0; i < k; ++i) {
      if (std::abs(lambda(i) - lmin) <= tiny) continue;
      y(i) = beta(i) / (lambda(i) - lmin);
      s += std::norm(y(i));
    }
    if (s <= 1.0) {
      // Pad with bottom-eigenspace content to reach the sphere.
      for (Eigen::Index i = 0; i < k; ++i) {
        if (std::abs(lambda(i) - lmin) <= tiny) {
          y(i) = std::sqrt(std::max(0.0, 1.0 - s));
          break;
        }
      }
      return es.eigenvectors() * y;
    }
  }

  // Secular equation: ||u(mu)|| is strictly decreasing on (-lmin, inf).
  double lo = -lmin;
  double hi = std::max(1.0, -lmin + 1.0);
  while (norm2_at(hi) > 1.0) hi = lo + (hi - lo) * 2.0 + 1.0;
  for (int iter = 0; iter < 200; ++iter) {
    double mid = lo + (hi - lo) / 2.0;
    if (mid <= -lmin) mid = std::nextafter(-lmin, hi);
    if (norm2_at(mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  double mu = hi;
  cvec y(k);
  for (Eigen::Index i = 0; i < k; ++i) y(i) = beta(i) / (lambda(i) + mu);
  cvec u = es.eigenvectors() * y;
  double n = u.norm();
  return n > 0 ? cvec(u / n) : u;
}

double round_significant(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  double magnitude = std::pow(10.0, digits - 1 - (int)std::floor(std::log10(std::abs(value))));
  return std::round(value * magnitude) / magnitude;
}

uint64_t fnv1a(uint64_t state, const void* data, size_t bytes) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  uint64_t h = state ? state : 14695981039346656037ull;
  for (size_t i = 0; i < bytes; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t hash_double(uint64_t state, double value) {
  double r = round_significant(value, 12);
  uint64_t bits;
  std::memcpy(&bits, &r, sizeof bits);
  return fnv1a(state, &bits, sizeof bits);
}

}  // namespace ctk
