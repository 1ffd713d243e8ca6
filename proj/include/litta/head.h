// litta/head.h

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

#ifndef LITTA_HEAD_H_
#define LITTA_HEAD_H_

#include "litta/ctc.h"
#include "litta/data.h"

namespace litta {

/// Affine map from D-dim frames to C logits: logits_t = W h_t + b.
struct AdaptableHead {
  Matrix weights;  // C x D
  Vector bias;     // C
  Vocab vocab = Vocab::Default();

  int NumClasses() const { return static_cast<int>(weights.rows()); }
  int Dim() const { return static_cast<int>(weights.cols()); }

  /// Throws on shape mismatch with the vocabulary or non-finite entries.
  void Validate() const;

  /// L x C logits for an L x D frame matrix.
  LogitMatrix Logits(const Matrix &frames) const;

  bool operator==(const AdaptableHead &other) const {
    return weights == other.weights && bias == other.bias && vocab == other.vocab;
  }
};

struct RidgeOptions {
  double ridge = 1.0;
  /// Magnitude of the one-hot regression targets.
  double target_scale = 1.0;
};

/// Closed-form ridge regression from frames to one-hot logit targets, using
/// each utterance's forced alignment. Frames and targets are centered so the
/// bias is unpenalized; only W is shrunk. Throws std::invalid_argument if an
/// alignment is missing or the normal equations are singular (ridge = 0).
AdaptableHead FitSourceHead(const DatasetManifest &clean, const Vocab &vocab,
                            const RidgeOptions &options);

}  // namespace litta

#endif  // LITTA_HEAD_H_
