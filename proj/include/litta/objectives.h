// litta/objectives.h

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

#ifndef LITTA_OBJECTIVES_H_
#define LITTA_OBJECTIVES_H_

#include <string>

#include "litta/ctc.h"

namespace litta {

struct TtaLossConfig {
  enum class Kind { kShannon, kRenyi };

  Kind kind = Kind::kRenyi;
  double temperature = 2.5;
  double renyi_gamma = 0.8;
  /// Frames whose (untempered) blank posterior exceeds this are left out of
  /// the mean. 1.0 keeps every frame.
  double blank_threshold = 0.95;

  void Validate() const;
};

/// "shannon_em" / "renyi_em"; also accepts the CLI labels "em" / "sgem".
TtaLossConfig::Kind ParseTtaKind(const std::string &name);
std::string TtaKindName(TtaLossConfig::Kind kind);

struct LossAndGrad {
  double value = 0.0;
  Matrix grad;  // L x C, d value / d logits
};

/// Indices of frames retained by the blank filter.
std::vector<int> RetainedFrames(const LogitMatrix &logits, double blank_threshold);

/// Mean over retained frames of H(softmax(logits_t / T)).
LossAndGrad ShannonEntropyLoss(const LogitMatrix &logits, const TtaLossConfig &config);

/// Mean over retained frames of (1 / (1 - g)) log sum_k p_k^g,
/// p = softmax(logits_t / T). Rejects g == 1.
LossAndGrad RenyiEntropyLoss(const LogitMatrix &logits, const TtaLossConfig &config);

/// Dispatches on config.kind.
LossAndGrad TtaLoss(const LogitMatrix &logits, const TtaLossConfig &config);

/// l_tta / (l_tta + l_ctc), 0 when both are 0. Throws on negative or
/// non-finite input.
double AdaptiveLambda(double l_tta, double l_ctc);

struct CompositeLoss {
  double l_tta = 0.0;
  /// +inf when the correction has no alignment; 0 when it is empty.
  double l_ctc = 0.0;
  double lambda_li = 0.0;
  double total = 0.0;
  Matrix grad;
  /// False when the CTC term was dropped (empty or infeasible correction).
  bool ctc_applied = false;
};

/// total = l_tta + lambda_li * l_ctc with lambda_li = AdaptiveLambda(l_tta,
/// l_ctc) held constant in the gradient. An empty or infeasible correction
/// drops the CTC term (lambda_li = 0, total = l_tta).
CompositeLoss ComputeCompositeLoss(const LogitMatrix &logits, const Transcription &correction,
                                   const TtaLossConfig &config);

}  // namespace litta

#endif  // LITTA_OBJECTIVES_H_
