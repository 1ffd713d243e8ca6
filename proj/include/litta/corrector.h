// litta/corrector.h

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

#ifndef LITTA_CORRECTOR_H_
#define LITTA_CORRECTOR_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "litta/ctc.h"

namespace litta {

struct CorrectorSpec {
  enum class Kind { kIdentity, kLexicon, kHttp };

  Kind kind = Kind::kIdentity;

  // lexicon
  std::string lexicon_path;
  int max_edit_distance = 1;

  // http
  std::string endpoint_url;
  std::string model_name;
  std::string api_key;
  int timeout_ms = 10000;
  int max_retries = 3;
  int initial_backoff_ms = 250;
  int max_in_flight = 4;

  bool cache_enabled = true;

  /// Throws if http fields are missing for kind http (or set for other
  /// kinds), or numeric fields are negative.
  void Validate() const;
};

std::string CorrectorKindName(CorrectorSpec::Kind kind);
CorrectorSpec::Kind ParseCorrectorKind(const std::string &name);

struct CorrectionOutcome {
  enum class Source { kIdentity, kLexicon, kHttp, kFallbackIdentity };

  Transcription corrected;
  bool changed = false;
  Source source = Source::kIdentity;
  int64_t latency_ms = 0;
};

std::string SourceName(CorrectionOutcome::Source source);

/// The instruction sent to the external model, with the transcript placed
/// between the << >> markers.
std::string BuildPrompt(const Transcription &transcript);

/// Text -> corrected text channel. Implementations are immutable after
/// construction; the outcome cache is internally synchronized, so one
/// instance may serve concurrent episodes.
class Corrector {
 public:
  explicit Corrector(Vocab vocab, bool cache_enabled)
      : vocab_(std::move(vocab)), cache_enabled_(cache_enabled) {}
  virtual ~Corrector() = default;

  Corrector(const Corrector &) = delete;
  Corrector &operator=(const Corrector &) = delete;

  /// Never throws; an internal failure yields the input with source
  /// kFallbackIdentity.
  CorrectionOutcome Correct(const Transcription &transcript);

  const Vocab &GetVocab() const { return vocab_; }

 protected:
  virtual CorrectionOutcome CorrectUncached(const Transcription &transcript) = 0;

  /// Builds an outcome, setting `changed` from the texts.
  static CorrectionOutcome MakeOutcome(const Transcription &input, Transcription corrected,
                                       CorrectionOutcome::Source source);

 private:
  Vocab vocab_;
  bool cache_enabled_;
  std::mutex cache_mutex_;
  std::unordered_map<std::string, CorrectionOutcome> cache_;
};

class IdentityCorrector : public Corrector {
 public:
  explicit IdentityCorrector(Vocab vocab, bool cache_enabled = false)
      : Corrector(std::move(vocab), cache_enabled) {}

 protected:
  CorrectionOutcome CorrectUncached(const Transcription &transcript) override;
};

/// Word-level nearest-neighbour replacement against a frequency lexicon.
class LexiconCorrector : public Corrector {
 public:
  /// Words are normalized against `vocab`; empty ones are dropped and
  /// duplicates have their frequencies summed.
  LexiconCorrector(const std::map<std::string, int64_t> &word_counts, int max_edit_distance,
                   Vocab vocab, bool cache_enabled = true);

  /// One word per line, optional tab-separated frequency (default 1).
  /// Throws std::runtime_error if the file cannot be read.
  static std::map<std::string, int64_t> LoadLexicon(const std::string &path);

  /// Word frequencies over whitespace-separated sentences.
  static std::map<std::string, int64_t> CountWords(const std::vector<std::string> &sentences);

  /// Nearest lexicon word within the edit budget: smallest distance, then
  /// highest frequency, then lexicographic. Returns `word` if none.
  std::string CorrectWord(const std::string &word) const;

 protected:
  CorrectionOutcome CorrectUncached(const Transcription &transcript) override;

 private:
  struct Entry {
    std::string word;
    int64_t count;
  };
  std::vector<Entry> entries_;  // sorted by word
  std::unordered_map<std::string, int64_t> index_;
  int max_edit_distance_;
};

/// Chat-completion client. Sends {model, messages:[{role:"user", content:
/// BuildPrompt(y')}]} and takes the first text segment of the first choice.
/// Retries connection errors, 408/429 and 5xx with exponential backoff from
/// initial_backoff_ms, all within timeout_ms; anything else falls back to the
/// identity.
class HttpCorrector : public Corrector {
 public:
  HttpCorrector(const CorrectorSpec &spec, Vocab vocab);
  ~HttpCorrector() override;

 protected:
  CorrectionOutcome CorrectUncached(const Transcription &transcript) override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Extracts the correction text from a chat-completion response body, or
/// returns false if the body does not have the expected shape.
bool ParseChatResponse(const std::string &body, std::string *text);

/// Builds the implementation named by spec.kind. Lexicon files are read
/// here, so an unreadable file fails at construction, never mid-episode.
std::unique_ptr<Corrector> MakeCorrector(const CorrectorSpec &spec, const Vocab &vocab);

/// Fills the http fields from LITTA_LLM_ENDPOINT, LITTA_LLM_API_KEY and
/// LITTA_LLM_MODEL where they are set and the spec field is empty.
void ApplyCorrectorEnvironment(CorrectorSpec *spec);

}  // namespace litta

#endif  // LITTA_CORRECTOR_H_
