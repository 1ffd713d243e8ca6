// litta/optim.h

// Copyright 2026  The litta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef LITTA_OPTIM_H_
#define LITTA_OPTIM_H_

#include <cstdint>

#include <Eigen/Dense>

namespace litta {

struct AdamWConfig {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double weight_decay = 0.01;
};

/// First and second moments; zero at the start of every episode.
struct AdamWState {
  Eigen::VectorXd m;
  Eigen::VectorXd v;
  int64_t step = 0;

  void Reset(Eigen::Index size) {
    m = Eigen::VectorXd::Zero(size);
    v = Eigen::VectorXd::Zero(size);
    step = 0;
  }
};

/// One AdamW update with decoupled weight decay:
///   p <- p - lr * m_hat / (sqrt(v_hat) + eps) - lr * weight_decay * p
/// Throws std::domain_error on a non-finite gradient, leaving params and
/// state untouched.
void AdamWStep(Eigen::Ref<Eigen::VectorXd> params, const Eigen::Ref<const Eigen::VectorXd> &grads,
               AdamWState *state, double lr, const AdamWConfig &config);

/// lr_min + (lr_max - lr_min) (1 + cos(pi step / total_steps)) / 2.
/// Requires total_steps >= 1 and 0 <= step <= total_steps.
double CosineLr(int step, int total_steps, double lr_max, double lr_min);

}  // namespace litta

#endif  // LITTA_OPTIM_H_
