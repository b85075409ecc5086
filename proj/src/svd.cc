// Copyright 2026 The TopicForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "topicforge/svd.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "topicforge/random.h"

namespace topicforge {
namespace {

constexpr int kMaxSweeps = 80;

// Jacobi on the columns of a tall matrix (m >= n).
SvdResult jacobi_tall(Eigen::MatrixXd work) {
  const Eigen::Index n = work.cols();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  // Columns count as orthogonal once |<p,q>| <= m * eps * |p| |q|.
  const double tol = static_cast<double>(work.rows()) *
                     std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = work.col(p).squaredNorm();
        const double beta = work.col(q).squaredNorm();
        const double gamma = work.col(p).dot(work.col(q));
        if (gamma == 0.0 ||
            std::abs(gamma) <= tol * std::sqrt(alpha * beta)) {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (Eigen::Index i = 0; i < work.rows(); ++i) {
          const double wp = work(i, p);
          const double wq = work(i, q);
          work(i, p) = c * wp - s * wq;
          work(i, q) = s * wp + c * wq;
        }
        for (Eigen::Index i = 0; i < n; ++i) {
          const double vp = v(i, p);
          const double vq = v(i, q);
          v(i, p) = c * vp - s * vq;
          v(i, q) = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }

  std::vector<double> norms(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    norms[static_cast<std::size_t>(j)] = work.col(j).norm();
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&norms](Eigen::Index a, Eigen::Index b) {
                     return norms[static_cast<std::size_t>(a)] >
                            norms[static_cast<std::size_t>(b)];
                   });

  SvdResult out;
  out.u = Eigen::MatrixXd::Zero(work.rows(), n);
  out.s = Vector::Zero(n);
  out.v = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    const double sigma = norms[static_cast<std::size_t>(src)];
    out.s[j] = sigma;
    out.v.col(j) = v.col(src);
    if (sigma > 0.0) out.u.col(j) = work.col(src) / sigma;
  }
  return out;
}

// y = A x and y = A^T x for the sparse docs x terms matrix.
Eigen::MatrixXd multiply(const DocTermMatrix& a, const Eigen::MatrixXd& x) {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(a.n_docs()), x.cols());
  for (std::size_t d = 0; d < a.n_docs(); ++d) {
    const auto terms = a.row_terms(d);
    const auto weights = a.row_weights(d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      y.row(static_cast<Eigen::Index>(d)) +=
          weights[i] * x.row(static_cast<Eigen::Index>(terms[i]));
    }
  }
  return y;
}

Eigen::MatrixXd multiply_transposed(const DocTermMatrix& a,
                                    const Eigen::MatrixXd& x) {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(
      static_cast<Eigen::Index>(a.n_terms()), x.cols());
  for (std::size_t d = 0; d < a.n_docs(); ++d) {
    const auto terms = a.row_terms(d);
    const auto weights = a.row_weights(d);
    for (std::size_t i = 0; i < terms.size(); ++i) {
      y.row(static_cast<Eigen::Index>(terms[i])) +=
          weights[i] * x.row(static_cast<Eigen::Index>(d));
    }
  }
  return y;
}

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& y) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
  return qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
}

}  // namespace

SvdResult jacobi_svd(const Eigen::MatrixXd& a) {
  if (a.rows() >= a.cols()) return jacobi_tall(a);
  SvdResult t = jacobi_tall(a.transpose());
  std::swap(t.u, t.v);
  return t;
}

SvdResult randomized_svd(const DocTermMatrix& m, std::size_t k,
                         std::size_t oversample, std::size_t power_iters,
                         std::uint64_t seed) {
  const std::size_t min_dim = std::min(m.n_docs(), m.n_terms());
  const auto width = static_cast<Eigen::Index>(std::min(k + oversample, min_dim));

  Rng rng(seed);
  Eigen::MatrixXd omega(static_cast<Eigen::Index>(m.n_terms()), width);
  for (Eigen::Index r = 0; r < omega.rows(); ++r) {
    for (Eigen::Index c = 0; c < width; ++c) omega(r, c) = 2.0 * rng.uniform() - 1.0;
  }

  Eigen::MatrixXd q = orthonormal_basis(multiply(m, omega));
  for (std::size_t i = 0; i < power_iters; ++i) {
    const Eigen::MatrixXd z = orthonormal_basis(multiply_transposed(m, q));
    q = orthonormal_basis(multiply(m, z));
  }

  // B = Q^T A, formed as (A^T Q)^T.
  const Eigen::MatrixXd b = multiply_transposed(m, q).transpose();
  SvdResult small = jacobi_svd(b);
  small.u = q * small.u;
  return small;
}

}  // namespace topicforge
