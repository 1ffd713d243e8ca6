// litta/ngram-lm.h

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

#ifndef LITTA_NGRAM_LM_H_
#define LITTA_NGRAM_LM_H_

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "litta/vocab.h"

namespace litta {

/// Character n-gram model with add-k smoothing.
///
/// Outcomes are the vocabulary symbols plus end-of-sentence, so V' = |symbols|
/// + 1. Contexts are the previous n-1 characters, left-padded with kBos.
///   p(c | h) = (count(h, c) + k) / (count(h) + k V')
/// Unseen contexts therefore get the uniform distribution.
class NGramLm {
 public:
  static constexpr char kBos = '^';
  static constexpr char kEos = '$';

  /// context -> (outcome -> count); outcome kEos marks end of sentence.
  using CountTable = std::map<std::string, std::map<char, int>>;

  /// Sentences are lowercased; any other character outside `vocab` is
  /// rejected. Throws std::invalid_argument on an empty corpus, order < 1 or
  /// add_k <= 0.
  static NGramLm Train(const std::vector<std::string> &corpus, int order, double add_k,
                       const Vocab &vocab = Vocab::Default());

  static NGramLm FromCounts(int order, double add_k, const Vocab &vocab, CountTable counts);

  int Order() const { return order_; }
  double AddK() const { return add_k_; }
  const Vocab &GetVocab() const { return vocab_; }
  const CountTable &Counts() const { return counts_; }
  /// V' = |symbols| + 1.
  int NumOutcomes() const { return static_cast<int>(vocab_.Symbols().size()) + 1; }

  /// The n-1 character context following `prefix` (a sentence prefix).
  std::string ContextAfter(std::string_view prefix) const;

  /// `outcome` is a vocabulary symbol or kEos; `context` has length n-1.
  double ConditionalProb(std::string_view context, char outcome) const;
  double ConditionalLogProb(std::string_view context, char outcome) const {
    return std::log(ConditionalProb(context, outcome));
  }

  /// Sum of per-character log probabilities, including end of sentence.
  double LogProb(std::string_view text) const;

  /// exp(-LogProb / (|text| + 1)).
  double Perplexity(std::string_view text) const;

  /// Ancestral sample, stopping at end of sentence or `max_length`.
  std::string Sample(std::mt19937_64 &rng, size_t max_length) const;

 private:
  NGramLm(int order, double add_k, Vocab vocab, CountTable counts);

  void CheckText(std::string_view text) const;

  int order_;
  double add_k_;
  Vocab vocab_;
  CountTable counts_;
  std::map<std::string, int> context_totals_;
};

}  // namespace litta

#endif  // LITTA_NGRAM_LM_H_
