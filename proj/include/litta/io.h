// litta/io.h

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

// File formats. All readers throw std::runtime_error naming the file (and
// line, for JSON Lines) on malformed input.
//
//   manifest   JSON Lines {"id", "frames": [[...]], "ref": string|null,
//              "align": [int...] (optional)}; sidecar <path>.meta.json with
//              {"name", "vocab", "shifts", "prototypes"}.
//   head       {"W": C rows of D, "b": [C], "vocab": ["<blank>", ...]}
//   lm         {"n", "add_k", "counts": {context: {symbol: int}}, "vocab"}
//   traces     JSON Lines, one episode per line.
//   hyps       JSON Lines {"id", "text", "am", "lm", "score"}.

#ifndef LITTA_IO_H_
#define LITTA_IO_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "litta/adapt.h"
#include "litta/data.h"
#include "litta/decoder.h"
#include "litta/head.h"
#include "litta/ngram-lm.h"

namespace litta {

using Json = nlohmann::ordered_json;

/// Non-empty lines with surrounding whitespace removed.
std::vector<std::string> ReadLines(const std::string &path);
void WriteText(const std::string &path, const std::string &contents);

std::string ManifestMetaPath(const std::string &manifest_path);
void WriteManifest(const DatasetManifest &manifest, const std::string &path,
                   const Vocab &vocab = Vocab::Default());
/// The sidecar is optional; without it the default vocabulary is assumed.
DatasetManifest ReadManifest(const std::string &path);

Json ShiftToJson(const ShiftConfig &shift);
ShiftConfig ShiftFromJson(const Json &json);

Json HeadToJson(const AdaptableHead &head);
AdaptableHead HeadFromJson(const Json &json);
void WriteHead(const AdaptableHead &head, const std::string &path);
AdaptableHead ReadHead(const std::string &path);

Json LmToJson(const NGramLm &lm);
NGramLm LmFromJson(const Json &json);
void WriteLm(const NGramLm &lm, const std::string &path);
NGramLm ReadLm(const std::string &path);

/// Field names mirror AdaptConfig; absent fields keep their defaults and
/// unknown fields are rejected.
Json AdaptConfigToJson(const AdaptConfig &config);
AdaptConfig AdaptConfigFromJson(const Json &json);
AdaptConfig ReadAdaptConfig(const std::string &path);

Json TraceToJson(const AdaptationTrace &trace);
AdaptationTrace TraceFromJson(const Json &json);
void WriteTraces(const std::vector<AdaptationTrace> &traces, const std::string &path);
std::vector<AdaptationTrace> ReadTraces(const std::string &path);

Json HypothesisToJson(const std::string &id, const Hypothesis &hyp);

/// Parses a whole JSON document from a file.
Json ReadJsonFile(const std::string &path);

/// Throws std::invalid_argument naming `section` if `json` is not an object
/// or has a key outside `allowed`.
void CheckKeys(const Json &json, std::initializer_list<const char *> allowed,
               const std::string &section);

}  // namespace litta

#endif  // LITTA_IO_H_
