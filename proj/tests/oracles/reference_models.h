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

// Test-only reference implementations. They share nothing with the library
// code paths they check: dense arrays instead of sparse rows, a materialized
// posterior tensor for EM, per-token recomputation for Gibbs, and Eigen's
// two-sided Jacobi SVD as the decomposition oracle.

#ifndef TOPICFORGE_TESTS_ORACLES_REFERENCE_MODELS_H_
#define TOPICFORGE_TESTS_ORACLES_REFERENCE_MODELS_H_

#include <Eigen/SVD>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

// Textbook EM for pLSA with the full doc x term x topic posterior stored.
struct EmResult {
  Dense p_z_d;  // docs x K
  Dense p_w_z;  // K x terms
};

inline EmResult plsa_em(const Dense& counts, int k, int iterations,
                        std::uint64_t seed) {
  const int docs = static_cast<int>(counts.size());
  const int terms = static_cast<int>(counts[0].size());
  std::mt19937 gen(static_cast<std::uint32_t>(seed));
  std::uniform_real_distribution<double> unif(0.1, 1.0);
  EmResult r{Dense(docs, std::vector<double>(k)),
             Dense(k, std::vector<double>(terms))};
  for (auto& row : r.p_z_d) {
    double s = 0;
    for (double& x : row) s += (x = unif(gen));
    for (double& x : row) x /= s;
  }
  for (auto& row : r.p_w_z) {
    double s = 0;
    for (double& x : row) s += (x = unif(gen));
    for (double& x : row) x /= s;
  }
  std::vector<Dense> post(docs, Dense(terms, std::vector<double>(k)));
  for (int it = 0; it < iterations; ++it) {
    for (int d = 0; d < docs; ++d) {
      for (int w = 0; w < terms; ++w) {
        double s = 0;
        for (int z = 0; z < k; ++z) {
          s += post[d][w][z] = r.p_z_d[d][z] * r.p_w_z[z][w];
        }
        for (int z = 0; z < k; ++z) post[d][w][z] = s > 0 ? post[d][w][z] / s : 0;
      }
    }
    for (int z = 0; z < k; ++z) {
      double s = 0;
      for (int w = 0; w < terms; ++w) {
        double acc = 0;
        for (int d = 0; d < docs; ++d) acc += counts[d][w] * post[d][w][z];
        s += r.p_w_z[z][w] = acc;
      }
      for (int w = 0; w < terms; ++w) r.p_w_z[z][w] /= s;
    }
    for (int d = 0; d < docs; ++d) {
      double s = 0;
      for (int z = 0; z < k; ++z) {
        double acc = 0;
        for (int w = 0; w < terms; ++w) acc += counts[d][w] * post[d][w][z];
        s += r.p_z_d[d][z] = acc;
      }
      for (int z = 0; z < k; ++z) r.p_z_d[d][z] /= s;
    }
  }
  return r;
}

// Straightforward collapsed Gibbs sampler: counts are recomputed from the
// label vector for every token, so no incremental bookkeeping is shared
// with the library sampler.
struct GibbsResult {
  Dense phi;  // K x terms
};

inline GibbsResult lda_gibbs(const Dense& counts, int k, double alpha,
                             double beta, int sweeps, std::uint64_t seed) {
  const int docs = static_cast<int>(counts.size());
  const int terms = static_cast<int>(counts[0].size());
  std::vector<int> tok_doc, tok_term;
  for (int d = 0; d < docs; ++d) {
    for (int w = 0; w < terms; ++w) {
      for (int c = 0; c < static_cast<int>(counts[d][w]); ++c) {
        tok_doc.push_back(d);
        tok_term.push_back(w);
      }
    }
  }
  const int n = static_cast<int>(tok_doc.size());
  std::mt19937 gen(static_cast<std::uint32_t>(seed));
  std::uniform_int_distribution<int> pick(0, k - 1);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<int> z(n);
  for (int& x : z) x = pick(gen);
  for (int s = 0; s < sweeps; ++s) {
    for (int i = 0; i < n; ++i) {
      std::vector<double> ndk(k, 0), nkw(k, 0), nk(k, 0);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        nk[z[j]] += 1;
        if (tok_doc[j] == tok_doc[i]) ndk[z[j]] += 1;
        if (tok_term[j] == tok_term[i]) nkw[z[j]] += 1;
      }
      std::vector<double> p(k);
      double total = 0;
      for (int t = 0; t < k; ++t) {
        total += p[t] = (ndk[t] + alpha) * (nkw[t] + beta) / (nk[t] + terms * beta);
      }
      double u = unif(gen) * total;
      int chosen = k - 1;
      for (int t = 0; t < k; ++t) {
        if ((u -= p[t]) < 0) {
          chosen = t;
          break;
        }
      }
      z[i] = chosen;
    }
  }
  GibbsResult r{Dense(k, std::vector<double>(terms, beta))};
  std::vector<double> nk(k, terms * beta);
  for (int i = 0; i < n; ++i) {
    r.phi[z[i]][tok_term[i]] += 1;
    nk[z[i]] += 1;
  }
  for (int t = 0; t < k; ++t) {
    for (double& x : r.phi[t]) x /= nk[t];
  }
  return r;
}

// Singular values from Eigen's two-sided Jacobi SVD, descending.
inline Eigen::VectorXd singular_values(const Eigen::MatrixXd& a) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  return svd.singularValues();
}

}  // namespace oracle

#endif  // TOPICFORGE_TESTS_ORACLES_REFERENCE_MODELS_H_
