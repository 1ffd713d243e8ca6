// litta/ctc.h

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

#ifndef LITTA_CTC_H_
#define LITTA_CTC_H_

#include <cmath>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "litta/vocab.h"

namespace litta {

/// Row-major so that a frame is a contiguous row.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

/// log(exp(a) + exp(b)) with kLogZero handled explicitly.
inline double LogAdd(double a, double b) {
  if (a == kLogZero) return b;
  if (b == kLogZero) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

/// Row-wise log-softmax.
Matrix LogSoftmaxRows(const Matrix &scores);

/// A label sequence over a vocabulary, never containing the blank.
class Transcription {
 public:
  Transcription() = default;
  /// Throws std::invalid_argument naming the first character not in `vocab`.
  Transcription(std::string text, const Vocab &vocab);

  const std::string &Text() const { return text_; }
  bool Empty() const { return text_.empty(); }
  size_t Length() const { return text_.size(); }

  /// Class indices under `vocab`; throws if a character is missing from it.
  std::vector<int> Labels(const Vocab &vocab) const;

  bool operator==(const Transcription &other) const = default;

 private:
  std::string text_;
};

/// Per-utterance L x C matrix of unnormalized class scores.
class LogitMatrix {
 public:
  /// Throws if the column count differs from vocab.Size() or any entry is
  /// non-finite.
  LogitMatrix(Matrix values, Vocab vocab);

  const Matrix &Values() const { return values_; }
  const Vocab &GetVocab() const { return vocab_; }
  int NumFrames() const { return static_cast<int>(values_.rows()); }
  int NumClasses() const { return static_cast<int>(values_.cols()); }

 private:
  Matrix values_;
  Vocab vocab_;
};

struct CtcResult {
  /// -log p(target | logits); +inf when no alignment exists.
  double loss = 0.0;
  /// d loss / d logits, L x C. Zero when loss is +inf.
  Matrix grad;
};

/// Merges adjacent repeats, then drops blanks.
Transcription Collapse(std::span<const int> path, const Vocab &vocab);

/// Log-space forward-backward over the blank-interleaved target.
CtcResult CtcForwardBackward(const LogitMatrix &logits, const Transcription &target);

/// Sum of softmax path probabilities over all C^L paths collapsing to
/// `target`. Testing oracle; throws std::invalid_argument if C^L > 1e6.
double BruteForceCtc(const LogitMatrix &logits, const Transcription &target);

/// Every collapsed sequence reachable on `logits`, mapped to its total path
/// probability (linear space), by enumeration of all C^L paths. Same size
/// limit as BruteForceCtc.
std::map<std::string, double> EnumerateCollapsed(const LogitMatrix &logits);

/// Per-frame argmax (lowest index wins ties), then collapse.
Transcription GreedyDecode(const LogitMatrix &logits);

/// The argmax path that GreedyDecode collapses.
std::vector<int> ArgmaxPath(const Matrix &scores);

}  // namespace litta

#endif  // LITTA_CTC_H_
