// litta/report.h

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

#ifndef LITTA_REPORT_H_
#define LITTA_REPORT_H_

#include <map>
#include <string>
#include <vector>

#include "litta/adapt.h"

namespace litta {

struct PplPoint {
  int step = 0;
  double mean_ppl = 0.0;
  /// Standard error of the mean (sample deviation / sqrt(n)); 0 for n = 1.
  double stderr_ppl = 0.0;
};

/// Mean PPL per step index. Throws on empty input or traces of different
/// lengths.
std::vector<PplPoint> PplCurve(const std::vector<AdaptationTrace> &traces);
/// "step,mean_ppl,stderr" header plus one row per point.
std::string PplCurveCsv(const std::vector<PplPoint> &curve);

struct ReportRow {
  std::string condition;
  std::string method;
  /// Corpus-level: total word edits / total reference words, in percent.
  double wer_percent = 0.0;
  /// Mean of per-utterance WERs, in percent.
  double wer_mean_percent = 0.0;
  /// Mean final-step PPL over utterances.
  double ppl_mean = 0.0;
  int n_utts = 0;
};

struct MetricReport {
  /// Condition-major, methods in the order none, em, sgem, litta, others.
  std::vector<ReportRow> rows;
  /// One row per method with condition "average": arithmetic means of the
  /// per-condition values, n_utts summed.
  std::vector<ReportRow> averages;

  /// nullptr if absent; condition "average" looks in `averages`.
  const ReportRow *Find(const std::string &condition, const std::string &method) const;
  std::string ToCsv() const;
  std::string ToTable() const;
};

/// condition -> method -> traces.
using TraceSets = std::map<std::string, std::map<std::string, std::vector<AdaptationTrace>>>;

/// Throws std::invalid_argument on an empty cell or a trace without a
/// reference.
MetricReport BuildReport(const TraceSets &trace_sets);

/// File name for one cell: "<condition>__<method>.jsonl".
std::string TraceFileName(const std::string &condition, const std::string &method);
/// Loads every "<condition>__<method>.jsonl" file in `dir`.
TraceSets LoadTraceDir(const std::string &dir);

}  // namespace litta

#endif  // LITTA_REPORT_H_
