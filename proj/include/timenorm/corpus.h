// Copyright 2026 The timenorm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Corpus readers and evaluation on gold mentions.
//
// Two formats are read. TimeML documents contribute one expression per
// TIMEX3 element, with the creation-time TIMEX3 (or the DCT element) as the
// base time. TSV files hold one expression per line:
//
//   surface <TAB> type <TAB> value <TAB> dct
//
// Blank lines and lines starting with '#' are ignored.

#ifndef TIMENORM_CORPUS_H_
#define TIMENORM_CORPUS_H_

#include <map>
#include <string>
#include <vector>

#include "timenorm/normalizer.h"

namespace timenorm {

struct IngestStats {
  int documents = 0;
  int malformed = 0;    // files skipped as malformed XML
  int missing_dct = 0;  // documents skipped for lack of a creation time
  std::vector<std::string> warnings;
};

// Reads TimeML files. Directories are searched recursively for .tml and
// .xml files, in path order. Throws Error(kIo) when a path cannot be read.
std::vector<AnnotatedExpression> IngestTimeml(
    const std::vector<std::string> &paths,
    const Lexicon &lexicon = Lexicon::Default(), IngestStats *stats = nullptr);

// Parses TimeML text of one document. Throws Error(kMalformedXml) or
// Error(kMissingDct).
std::vector<AnnotatedExpression> ParseTimeml(
    std::string_view text, const std::string &doc_id,
    const Lexicon &lexicon = Lexicon::Default());

// Reads TSV files. Throws Error(kIo) or Error(kBadLine).
std::vector<AnnotatedExpression> IngestTsv(
    const std::vector<std::string> &paths,
    const Lexicon &lexicon = Lexicon::Default());

struct EvalReport {
  int total = 0;
  int skipped = 0;  // gold value outside the supported grammar
  int type_correct = 0;
  int value_correct = 0;
  // unseen_pattern, bad_rule, exec_error, other
  std::map<std::string, int> errors;

  int scored() const { return total - skipped; }
  double type_accuracy() const;
  double value_accuracy() const;

  std::string ToJson() const;
  std::string ToText() const;
};

// Normalizes every expression against its own creation time.
EvalReport Evaluate(const RuleStore &store,
                    const std::vector<AnnotatedExpression> &test,
                    const Lexicon &lexicon = Lexicon::Default());

}  // namespace timenorm

#endif  // TIMENORM_CORPUS_H_
