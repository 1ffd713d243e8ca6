// litta/metrics.h

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

#ifndef LITTA_METRICS_H_
#define LITTA_METRICS_H_

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace litta {

/// Levenshtein distance with unit substitution, insertion and deletion cost.
template <typename T>
int EditDistance(std::span<const T> a, std::span<const T> b) {
  std::vector<int> row(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) row[j] = static_cast<int>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    int diag = row[0];
    row[0] = static_cast<int>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      int up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

inline int EditDistance(std::string_view a, std::string_view b) {
  return EditDistance<char>(std::span<const char>(a.data(), a.size()),
                            std::span<const char>(b.data(), b.size()));
}

struct ErrorCounts {
  int errors = 0;
  int reference_length = 0;

  double Rate() const { return static_cast<double>(errors) / reference_length; }
};

/// Word-level edit distance and reference word count. Throws
/// std::invalid_argument if the reference has no words.
ErrorCounts WordErrors(std::string_view reference, std::string_view hypothesis);
/// Character-level counterpart. Throws if the reference is empty.
ErrorCounts CharErrors(std::string_view reference, std::string_view hypothesis);

/// Word error rate as a fraction (may exceed 1).
double Wer(std::string_view reference, std::string_view hypothesis);
/// Character error rate as a fraction.
double Cer(std::string_view reference, std::string_view hypothesis);

}  // namespace litta

#endif  // LITTA_METRICS_H_
