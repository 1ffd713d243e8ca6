// litta/decoder.h

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

#ifndef LITTA_DECODER_H_
#define LITTA_DECODER_H_

#include <string>
#include <vector>

#include "litta/ctc.h"
#include "litta/ngram-lm.h"

namespace litta {

struct DecodeConfig {
  enum class Mode { kGreedy, kBeam };

  int beam_width = 8;
  /// LM weight in score = log p_AM + lambda * log p_LM.
  double lambda = 0.3;
  Mode mode = Mode::kGreedy;

  void Validate() const;
};

struct Hypothesis {
  Transcription text;
  double am_logprob = 0.0;
  double lm_logprob = 0.0;
  double fused_score = 0.0;
};

/// CTC prefix beam search with character-synchronous shallow fusion. The LM
/// term is added at every emitted character and the end-of-sentence term at
/// finalization, so lm_logprob == lm->LogProb(text). With lm == nullptr the
/// search is acoustic only. Returns at most beam_width hypotheses sorted by
/// fused score (descending), ties broken by text.
std::vector<Hypothesis> BeamSearch(const LogitMatrix &logits, const NGramLm *lm,
                                   const DecodeConfig &config);

/// Exhaustive ranking of every collapsed sequence by path enumeration.
/// Testing oracle; throws if C^L > 1e6.
std::vector<Hypothesis> DecodeExhaustive(const LogitMatrix &logits, const NGramLm *lm,
                                         double lambda);

/// Greedy or beam according to config.mode; returns the top transcription.
Transcription Decode(const LogitMatrix &logits, const NGramLm *lm, const DecodeConfig &config);

}  // namespace litta

#endif  // LITTA_DECODER_H_
