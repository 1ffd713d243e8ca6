// litta/experiment.h

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

// End-to-end benchmark: generate -> shift -> fit head -> adapt with every
// method -> report, repeated per seed.

#ifndef LITTA_EXPERIMENT_H_
#define LITTA_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "litta/adapt.h"
#include "litta/data.h"
#include "litta/head.h"
#include "litta/io.h"
#include "litta/report.h"

namespace litta {

/// Half-open sentence index range [begin, end) into the corpus.
struct SentenceRange {
  int begin = 0;
  int end = 0;
};

struct ConditionSpec {
  std::string name;
  ShiftConfig shift;  // seed is replaced per run
};

struct ExperimentConfig {
  std::string corpus_path;
  SentenceRange ppl_lm_sentences{80, 160};
  SentenceRange head_sentences{160, 280};
  SentenceRange bench_sentences{280, 520};
  std::vector<uint64_t> seeds{1, 2, 3, 4, 5};
  /// Generator settings; `seed` is overridden for head and benchmark data.
  GenParams generator;
  uint64_t head_seed = 11;
  RidgeOptions ridge;
  int lm_order = 4;
  double lm_add_k = 0.01;
  /// Drop benchmark utterances whose reference PPL is not below this.
  std::optional<double> gt_ppl_max;
  std::vector<ConditionSpec> conditions;
  std::vector<AdaptMethod> methods{AdaptMethod::kNone, AdaptMethod::kEm, AdaptMethod::kSgem,
                                   AdaptMethod::kLitta};
  /// method is set per run. A lexicon corrector without a path uses the
  /// word counts of the benchmark sentences.
  AdaptConfig adapt;
  int threads = 1;
  /// Traces and reports are written below this directory when non-empty.
  std::string out_dir;

  void Validate() const;
};

/// Relative corpus and output paths are resolved against `base_dir`.
ExperimentConfig ExperimentConfigFromJson(const Json &json, const std::string &base_dir = "");
ExperimentConfig ReadExperimentConfig(const std::string &path);

struct SeedResult {
  uint64_t seed = 0;
  /// Greedy WER of the fitted head on the unshifted benchmark, percent.
  double clean_wer_percent = 0.0;
  MetricReport report;
  /// condition -> method -> mean PPL per step.
  std::map<std::string, std::map<std::string, std::vector<PplPoint>>> ppl_curves;
};

/// Sees each (seed, condition, method) cell's traces as soon as they exist.
using TraceObserver = std::function<void(uint64_t seed, const std::string &condition,
                                         const std::string &method,
                                         const std::vector<AdaptationTrace> &traces)>;

/// Runs every seed. Progress lines go to `log` when given.
std::vector<SeedResult> RunExperiment(const ExperimentConfig &config,
                                      std::ostream *log = nullptr,
                                      const TraceObserver &observer = nullptr);

}  // namespace litta

#endif  // LITTA_EXPERIMENT_H_
