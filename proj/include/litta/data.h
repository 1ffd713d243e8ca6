// litta/data.h

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

#ifndef LITTA_DATA_H_
#define LITTA_DATA_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "litta/ctc.h"
#include "litta/ngram-lm.h"
#include "litta/vocab.h"

namespace litta {

/// Mixes a global seed with a string key (FNV-1a followed by splitmix64).
/// Per-utterance randomness is keyed this way so results do not depend on
/// processing order.
uint64_t DeriveSeed(uint64_t seed, std::string_view key);

struct Utterance {
  std::string id;
  /// L x D features.
  Matrix frames;
  /// Ground truth, absent for unlabeled target data.
  std::optional<Transcription> reference;
  /// Forced per-frame class labels from the generator (empty if unknown).
  std::vector<int> alignment;

  int NumFrames() const { return static_cast<int>(frames.rows()); }
  int Dim() const { return static_cast<int>(frames.cols()); }
};

/// Geometry of the per-class prototype embeddings. Character prototypes share
/// a common offset of norm offset * sqrt(dim) plus N(0, spread^2) deviations;
/// the blank ("silence") prototype is N(0, blank_scale^2), i.e. low energy.
struct PrototypeSpec {
  int dim = 16;
  uint64_t seed = 7;
  double offset = 1.0;
  double spread = 1.0;
  double blank_scale = 0.3;

  bool operator==(const PrototypeSpec &) const = default;
};

/// C x D prototype table, row = class index.
Matrix MakePrototypes(const PrototypeSpec &spec, const Vocab &vocab);

struct ShiftConfig {
  enum class Kind { kAdditiveNoise, kChannelScale, kConfusionDrift };

  Kind kind = Kind::kAdditiveNoise;
  double snr_db = 10.0;
  double scale = 1.0;
  double drift_fraction = 0.0;
  uint64_t seed = 0;

  /// Throws on non-finite snr (+inf allowed) or drift outside [0, 1].
  void Validate() const;
};

std::string ShiftKindName(ShiftConfig::Kind kind);
/// Accepts additive_noise / channel_scale / confusion_drift; throws otherwise.
ShiftConfig::Kind ParseShiftKind(const std::string &name);

struct DatasetManifest {
  std::string name;
  std::vector<Utterance> utterances;
  /// Shifts applied so far, in order.
  std::vector<ShiftConfig> shifts;
  /// Present for generator-produced manifests.
  std::optional<PrototypeSpec> prototypes;

  /// Throws on duplicate ids.
  void CheckIds() const;
};

struct GenParams {
  PrototypeSpec prototypes;
  int min_duration = 2;
  int max_duration = 5;
  /// Emission noise standard deviation.
  double sigma = 0.3;
  /// Leading/trailing silence, frames, sampled uniformly in [0, max].
  int max_edge_blank = 2;
  /// Probability of a one-frame blank between two different characters.
  /// Identical neighbours always get 1-2 blank frames.
  double gap_probability = 0.3;
  uint64_t seed = 1;
};

/// One utterance per sentence (lowercased). Throws std::invalid_argument
/// naming the character and sentence id for out-of-vocabulary input.
DatasetManifest GenBenchmark(const std::vector<std::string> &corpus, const Vocab &vocab,
                             const GenParams &params, const std::string &name = "bench");

/// Source pairs drift toward targets: (m,n) moves m's prototype toward n.
const std::vector<std::pair<char, char>> &ConfusablePairs();

/// Pure: returns a new manifest. confusion_drift needs alignments and a
/// prototype spec on the manifest.
DatasetManifest ApplyShift(const DatasetManifest &manifest, const ShiftConfig &shift,
                           const Vocab &vocab = Vocab::Default());

/// Keeps utterances whose reference perplexity is strictly below `threshold`.
DatasetManifest FilterByGtPpl(const DatasetManifest &manifest, const NGramLm &lm,
                              double threshold);

/// Mean of squared entries.
double SignalPower(const Matrix &frames);

}  // namespace litta

#endif  // LITTA_DATA_H_
