// litta/adapt.h

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

#ifndef LITTA_ADAPT_H_
#define LITTA_ADAPT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "litta/corrector.h"
#include "litta/data.h"
#include "litta/head.h"
#include "litta/ngram-lm.h"
#include "litta/objectives.h"
#include "litta/optim.h"

namespace litta {

enum class AdaptMethod { kNone, kEm, kSgem, kLitta };

std::string AdaptMethodName(AdaptMethod method);
/// none / em / sgem / litta.
AdaptMethod ParseAdaptMethod(const std::string &name);

struct AdaptConfig {
  AdaptMethod method = AdaptMethod::kLitta;
  int steps = 10;
  double lr_max = 4e-5;
  double lr_min = 2e-5;
  AdamWConfig adamw;
  /// The litta entropy term; em and sgem force Shannon and Renyi
  /// respectively and keep the remaining fields.
  TtaLossConfig objective;
  CorrectorSpec corrector;
  int correct_every = 1;
  uint64_t seed = 0;
  /// Store the adapted head in each trace.
  bool keep_final_head = true;

  /// The corrector spec is checked where a corrector is built from it.
  void Validate() const;
};

/// CosineLr over the config's schedule.
double CosineLr(int step, const AdaptConfig &config);

struct StepRecord {
  int step = 0;
  double lr = 0.0;
  double l_tta = 0.0;
  /// 0 when the method has no CTC term or it was dropped this step.
  double l_ctc = 0.0;
  double lambda_li = 0.0;
  double total = 0.0;
  std::string decoded_text;
  /// Empty for methods without a corrector.
  std::string correction_text;
  std::optional<double> wer;
  double ppl = 0.0;

  bool operator==(const StepRecord &) const = default;
};

struct AdaptationTrace {
  std::string id;
  std::optional<std::string> reference;
  /// steps + 1 rows (1 for method none); shorter if the episode aborted.
  std::vector<StepRecord> steps;
  std::string final_text;
  std::optional<double> final_wer;
  double final_ppl = 0.0;
  std::optional<AdaptableHead> final_head;
  /// Non-empty when the episode aborted; the head is then reverted and the
  /// final fields describe the unadapted model.
  std::string error;

  bool operator==(const AdaptationTrace &) const = default;
};

/// One episode on a private copy of `head`. `corrector` is required for
/// method litta and ignored otherwise. Never throws for per-utterance
/// failures; they are recorded in AdaptationTrace::error.
AdaptationTrace AdaptUtterance(const AdaptableHead &head, const Utterance &utt,
                               const AdaptConfig &config, const NGramLm &lm_for_ppl,
                               Corrector *corrector);

/// Independent episodes from the same base head, results in manifest order.
/// num_threads <= 1 runs serially. For litta without a corrector one is built
/// from config.corrector and shared across episodes.
std::vector<AdaptationTrace> AdaptManifest(const AdaptableHead &head,
                                           const DatasetManifest &manifest,
                                           const AdaptConfig &config, const NGramLm &lm_for_ppl,
                                           Corrector *corrector = nullptr, int num_threads = 1);

}  // namespace litta

#endif  // LITTA_ADAPT_H_
