// litta/vocab.h

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

#ifndef LITTA_VOCAB_H_
#define LITTA_VOCAB_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace litta {

/// Character vocabulary with the CTC blank at index 0.
///
/// Symbols are single bytes. The blank has no printable form; it is rendered
/// as "<blank>" in files. Index lookup is a flat 256-entry table, so the class
/// is cheap to copy and safe to share across threads.
class Vocab {
 public:
  static constexpr int kBlank = 0;

  /// Builds a vocabulary from the non-blank symbols, in order. Index 0 is
  /// reserved for blank, so symbol i of `symbols` gets index i + 1.
  explicit Vocab(std::string_view symbols);

  /// blank + a-z + space + apostrophe (C = 29).
  static const Vocab &Default();

  int Size() const { return static_cast<int>(symbols_.size()) + 1; }
  int BlankIndex() const { return kBlank; }

  /// Returns -1 for characters outside the vocabulary (and for the blank).
  int IndexOf(char c) const { return index_[static_cast<unsigned char>(c)]; }
  bool Contains(char c) const { return IndexOf(c) > 0; }

  /// Symbol for a non-blank index. Precondition: 1 <= index < Size().
  char SymbolAt(int index) const { return symbols_[index - 1]; }

  /// Non-blank symbols in index order.
  const std::string &Symbols() const { return symbols_; }

  /// File form: ["<blank>", "a", ...].
  std::vector<std::string> ToStrings() const;
  static Vocab FromStrings(const std::vector<std::string> &entries);

  bool operator==(const Vocab &other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<int, 256> index_;
};

/// Canonical text form used for scoring and for untrusted corrector output:
/// lowercase, characters outside `vocab` dropped, any whitespace run collapsed
/// to one space, leading/trailing space removed.
std::string NormalizeText(std::string_view text, const Vocab &vocab);

/// Splits on single spaces, skipping empty tokens.
std::vector<std::string> SplitWords(std::string_view text);

}  // namespace litta

#endif  // LITTA_VOCAB_H_
