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

// Command line front end: learn, apply, capture and eval.
//
// Exit status is 0 on success, 1 on usage errors and 2 when a corpus or
// rule file cannot be read.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "timenorm/corpus.h"

namespace timenorm {
namespace {

constexpr int kUsage = 1;
constexpr int kUnreadable = 2;

struct LexiconFlags {
  std::string entries;
  std::string stopwords;

  void Add(CLI::App *cmd) {
    cmd->add_option("--lexicon", entries,
                    "Extra lexicon entries (TYPE<TAB>canonical<TAB>variants)");
    cmd->add_option("--stopwords", stopwords, "Stop-word list, one per line");
  }

  Lexicon Build() const {
    Lexicon lexicon;
    if (!entries.empty()) lexicon.LoadEntries(entries);
    if (!stopwords.empty()) lexicon.LoadStopwords(stopwords);
    return lexicon;
  }
};

std::vector<AnnotatedExpression> ReadCorpus(
    const std::vector<std::string> &paths, const std::string &format,
    const Lexicon &lexicon) {
  if (format == "tsv") return IngestTsv(paths, lexicon);
  IngestStats stats;
  auto exprs = IngestTimeml(paths, lexicon, &stats);
  for (const std::string &w : stats.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  return exprs;
}

std::vector<int> ParsePool(const std::string &text) {
  std::vector<int> pool;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::istringstream words(item);
    std::string w;
    while (words >> w) pool.push_back(std::stoi(w));
  }
  return pool;
}

std::string FormatResult(const NormalizationResult &r) {
  if (r.via == Via::kFailed) return "NONE\tFAILED\tvia=failed";
  return r.timex_type + "\t" + r.value + "\tvia=" + std::string(ViaName(r.via));
}

int Run(int argc, char **argv) {
  CLI::App app{"Learns and applies time expression normalization rules."};
  app.require_subcommand(1);

  // learn
  CLI::App *learn = app.add_subcommand("learn", "Learn rules from a corpus");
  std::vector<std::string> learn_corpus;
  std::string learn_format = "timeml";
  std::string learn_out;
  int max_length = 3;
  bool learn_stats = false;
  LexiconFlags learn_lex;
  learn->add_option("--corpus", learn_corpus, "Corpus files or directories")
      ->required();
  learn->add_option("--format", learn_format)
      ->check(CLI::IsMember({"timeml", "tsv"}));
  learn->add_option("--out", learn_out, "Rule file to write")->required();
  learn->add_option("--max-length", max_length, "Longest captured sequence")
      ->check(CLI::Range(1, 4));
  learn->add_flag("--stats", learn_stats, "Print learning statistics");
  learn_lex.Add(learn);

  // apply
  CLI::App *apply = app.add_subcommand("apply", "Normalize expressions");
  std::string apply_rules;
  std::string apply_dct;
  std::string apply_expr;
  std::string apply_batch;
  LexiconFlags apply_lex;
  apply->add_option("--rules", apply_rules)->required();
  apply->add_option("--dct", apply_dct, "Document creation time");
  apply->add_option("--expr", apply_expr, "Expression to normalize");
  apply->add_option("--batch", apply_batch,
                    "TSV file of expr<TAB>dct lines ('-' for stdin)");
  apply_lex.Add(apply);

  // capture
  CLI::App *capture = app.add_subcommand(
      "capture", "Print the operation sequences from base to target");
  std::string cap_base;
  std::string cap_target;
  std::string cap_pool;
  int cap_length = 3;
  capture->add_option("--base", cap_base)->required();
  capture->add_option("--target", cap_target)->required();
  capture->add_option("--pool", cap_pool, "Integers, comma separated");
  capture->add_option("--max-length", cap_length)->check(CLI::Range(1, 4));

  // eval
  CLI::App *eval = app.add_subcommand("eval", "Evaluate rules on a corpus");
  std::string eval_rules;
  std::vector<std::string> eval_corpus;
  std::string eval_format = "timeml";
  std::string eval_report = "text";
  LexiconFlags eval_lex;
  eval->add_option("--rules", eval_rules)->required();
  eval->add_option("--corpus", eval_corpus)->required();
  eval->add_option("--format", eval_format)
      ->check(CLI::IsMember({"timeml", "tsv"}));
  eval->add_option("--report", eval_report)
      ->check(CLI::IsMember({"json", "text"}));
  eval_lex.Add(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*learn) {
      Lexicon lexicon = learn_lex.Build();
      auto corpus = ReadCorpus(learn_corpus, learn_format, lexicon);
      CaptureOptions options;
      options.max_length = max_length;
      LearnStats stats;
      RuleStore store = Learn(corpus, options, &stats);
      store.Save(learn_out);
      if (learn_stats) {
        std::cerr << "expressions " << stats.expressions << "\n"
                  << "skipped " << stats.skipped << "\n"
                  << "captured " << stats.captured << "\n"
                  << "no_sequence " << stats.no_sequence << "\n"
                  << "budget_exceeded " << stats.budget_exceeded << "\n"
                  << "mean_candidates " << stats.MeanCandidates() << "\n"
                  << "rules " << store.size() << "\n";
      }
      return 0;
    }

    if (*apply) {
      Lexicon lexicon = apply_lex.Build();
      RuleStore store = RuleStore::Load(apply_rules);
      if (!apply_batch.empty()) {
        std::ifstream file;
        std::istream *in = &std::cin;
        if (apply_batch != "-") {
          file.open(apply_batch);
          if (!file) throw Error(ErrorCode::kIo, "cannot read " + apply_batch);
          in = &file;
        }
        std::string line;
        while (std::getline(*in, line)) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.empty()) continue;
          size_t tab = line.find('\t');
          std::optional<Instant> dct;
          if (tab != std::string::npos) dct = ParseDct(line.substr(tab + 1));
          if (!dct) {
            std::cout << "NONE\tFAILED\tvia=failed\n";
            continue;
          }
          auto tokens = lexicon.Tokenize(line.substr(0, tab));
          std::cout << FormatResult(Normalize(tokens, *dct, store, lexicon))
                    << "\n";
        }
        return 0;
      }
      if (apply_expr.empty() || apply_dct.empty()) {
        std::cerr << "apply needs --expr and --dct, or --batch\n";
        return kUsage;
      }
      auto dct = ParseDct(apply_dct);
      if (!dct) {
        std::cerr << "bad --dct '" << apply_dct << "'\n";
        return kUsage;
      }
      auto tokens = lexicon.Tokenize(apply_expr);
      std::cout << FormatResult(Normalize(tokens, *dct, store, lexicon))
                << "\n";
      return 0;
    }

    if (*capture) {
      CaptureTask task;
      task.base = ParseTimexValue(cap_base);
      task.target = ParseTimexValue(cap_target);
      task.pool = ParsePool(cap_pool);
      CaptureOptions options;
      options.max_length = cap_length;
      CaptureResult result = Capture(task, options);
      for (const OperationSequence &seq : result.sequences) {
        std::cout << ToString(seq) << "\n";
      }
      if (result.status == CaptureStatus::kBudgetExceeded) {
        std::cerr << "warning: search budget exceeded\n";
      }
      return 0;
    }

    if (*eval) {
      Lexicon lexicon = eval_lex.Build();
      RuleStore store = RuleStore::Load(eval_rules);
      auto corpus = ReadCorpus(eval_corpus, eval_format, lexicon);
      EvalReport report = Evaluate(store, corpus, lexicon);
      std::cout << (eval_report == "json" ? report.ToJson() : report.ToText());
      return 0;
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kIo:
      case ErrorCode::kBadLine:
      case ErrorCode::kMalformedXml:
      case ErrorCode::kMissingDct:
      case ErrorCode::kSyntax:
      case ErrorCode::kEmptyCorpus:
        return kUnreadable;
      default:
        return kUsage;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return 0;
}

}  // namespace
}  // namespace timenorm

int main(int argc, char **argv) { return timenorm::Run(argc, argv); }
