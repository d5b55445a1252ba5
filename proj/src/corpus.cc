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

#include "timenorm/corpus.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace timenorm {

namespace fs = std::filesystem;

namespace {

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string DecodeEntities(std::string_view s) {
  static const std::pair<std::string_view, char> kEntities[] = {
      {"&amp;", '&'}, {"&lt;", '<'}, {"&gt;", '>'}, {"&quot;", '"'},
      {"&apos;", '\''}};
  std::string out;
  for (size_t i = 0; i < s.size();) {
    bool replaced = false;
    if (s[i] == '&') {
      for (const auto &[name, c] : kEntities) {
        if (s.substr(i, name.size()) == name) {
          out += c;
          i += name.size();
          replaced = true;
          break;
        }
      }
    }
    if (!replaced) out += s[i++];
  }
  return out;
}

// Drops markup and collapses whitespace.
std::string PlainText(std::string_view s) {
  std::string out;
  bool in_tag = false;
  bool space = false;
  for (char c : s) {
    if (c == '<') {
      in_tag = true;
      continue;
    }
    if (c == '>' && in_tag) {
      in_tag = false;
      continue;
    }
    if (in_tag) continue;
    if (std::isspace(static_cast<unsigned char>(c))) {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return DecodeEntities(out);
}

struct XmlTag {
  std::string name;
  bool closing = false;
  bool self_closing = false;
  std::map<std::string, std::string> attrs;
};

std::string Attr(const XmlTag &tag, const std::string &name) {
  auto it = tag.attrs.find(name);
  return it == tag.attrs.end() ? std::string() : it->second;
}

// Parses the tag starting at text[pos] == '<'. Returns the position after
// '>' or npos when the tag is unterminated.
size_t ParseTag(std::string_view text, size_t pos, XmlTag *tag) {
  size_t end = text.find('>', pos);
  if (end == std::string_view::npos) return end;
  std::string_view body = text.substr(pos + 1, end - pos - 1);
  if (!body.empty() && body.back() == '/') {
    tag->self_closing = true;
    body.remove_suffix(1);
  }
  if (!body.empty() && body.front() == '/') {
    tag->closing = true;
    body.remove_prefix(1);
  }
  size_t i = 0;
  while (i < body.size() && !std::isspace(static_cast<unsigned char>(body[i]))) {
    ++i;
  }
  tag->name = std::string(body.substr(0, i));
  while (i < body.size()) {
    while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) {
      ++i;
    }
    size_t eq = body.find('=', i);
    if (eq == std::string_view::npos) break;
    std::string name(body.substr(i, eq - i));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) {
      name.pop_back();
    }
    size_t q = eq + 1;
    while (q < body.size() && std::isspace(static_cast<unsigned char>(body[q]))) {
      ++q;
    }
    if (q >= body.size() || (body[q] != '"' && body[q] != '\'')) break;
    size_t close = body.find(body[q], q + 1);
    if (close == std::string_view::npos) return std::string_view::npos;
    tag->attrs[name] = DecodeEntities(body.substr(q + 1, close - q - 1));
    i = close + 1;
  }
  return end + 1;
}

std::vector<std::string> ExpandPaths(const std::vector<std::string> &paths) {
  std::vector<std::string> files;
  for (const std::string &p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> found;
      for (const auto &entry : fs::recursive_directory_iterator(p)) {
        if (!entry.is_regular_file()) continue;
        std::string ext = entry.path().extension().string();
        if (ext == ".tml" || ext == ".xml" || ext == ".TML") {
          found.push_back(entry.path().string());
        }
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p, ec)) {
      files.push_back(p);
    } else {
      throw Error(ErrorCode::kIo, "cannot read " + p);
    }
  }
  return files;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> cols;
  size_t start = 0;
  while (true) {
    size_t pos = line.find('\t', start);
    cols.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cols;
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string FormatFraction(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::vector<AnnotatedExpression> ParseTimeml(std::string_view text,
                                             const std::string &doc_id,
                                             const Lexicon &lexicon) {
  struct Pending {
    XmlTag tag;
    size_t content_begin;
  };
  std::vector<AnnotatedExpression> out;
  std::optional<Pending> open;
  std::optional<std::string> dct_value;
  std::optional<size_t> dct_begin;
  std::string dct_text;
  int depth_in_dct = 0;

  size_t pos = 0;
  while ((pos = text.find('<', pos)) != std::string_view::npos) {
    if (text.substr(pos, 4) == "<!--") {
      size_t end = text.find("-->", pos);
      if (end == std::string_view::npos) {
        throw Error(ErrorCode::kMalformedXml, doc_id + ": unterminated comment");
      }
      pos = end + 3;
      continue;
    }
    if (text.substr(pos, 2) == "<?" || text.substr(pos, 2) == "<!") {
      size_t end = text.find('>', pos);
      if (end == std::string_view::npos) break;
      pos = end + 1;
      continue;
    }
    XmlTag tag;
    size_t next = ParseTag(text, pos, &tag);
    if (next == std::string_view::npos) {
      throw Error(ErrorCode::kMalformedXml, doc_id + ": unterminated tag");
    }
    if (tag.name == "DCT") {
      if (tag.closing) {
        if (dct_begin) {
          dct_text = PlainText(text.substr(*dct_begin, pos - *dct_begin));
        }
        depth_in_dct = 0;
      } else if (!tag.self_closing) {
        depth_in_dct = 1;
        dct_begin = next;
      }
    } else if (tag.name == "TIMEX3") {
      if (tag.closing) {
        if (!open) {
          throw Error(ErrorCode::kMalformedXml, doc_id + ": stray </TIMEX3>");
        }
        const XmlTag &t = open->tag;
        bool creation = depth_in_dct > 0 ||
                        Attr(t, "functionInDocument") == "CREATION_TIME";
        if (creation) {
          if (!dct_value && t.attrs.count("value")) dct_value = Attr(t, "value");
        } else {
          AnnotatedExpression e;
          e.doc_id = doc_id;
          e.surface = PlainText(
              text.substr(open->content_begin, pos - open->content_begin));
          e.tokens = lexicon.Tokenize(e.surface);
          e.gold_type = Attr(t, "type");
          e.gold_value = Attr(t, "value");
          out.push_back(std::move(e));
        }
        open.reset();
      } else if (!tag.self_closing) {
        if (open) {
          throw Error(ErrorCode::kMalformedXml, doc_id + ": nested TIMEX3");
        }
        open = Pending{tag, next};
      }
    }
    pos = next;
  }
  if (open) {
    throw Error(ErrorCode::kMalformedXml, doc_id + ": unclosed TIMEX3");
  }
  if (out.empty()) return out;
  std::optional<Instant> dct;
  if (dct_value) dct = ParseDct(*dct_value);
  if (!dct && !dct_text.empty()) dct = ParseDct(dct_text);
  if (!dct) throw Error(ErrorCode::kMissingDct, doc_id + ": no creation time");
  for (AnnotatedExpression &e : out) e.dct = *dct;
  return out;
}

std::vector<AnnotatedExpression> IngestTimeml(
    const std::vector<std::string> &paths, const Lexicon &lexicon,
    IngestStats *stats) {
  IngestStats local;
  IngestStats &st = stats ? *stats : local;
  std::vector<AnnotatedExpression> out;
  for (const std::string &file : ExpandPaths(paths)) {
    std::string text = ReadFile(file);
    try {
      auto exprs = ParseTimeml(text, file, lexicon);
      ++st.documents;
      out.insert(out.end(), std::make_move_iterator(exprs.begin()),
                 std::make_move_iterator(exprs.end()));
    } catch (const Error &e) {
      if (e.code() == ErrorCode::kMalformedXml) {
        ++st.malformed;
      } else if (e.code() == ErrorCode::kMissingDct) {
        ++st.missing_dct;
      } else {
        throw;
      }
      st.warnings.push_back(e.what());
    }
  }
  return out;
}

std::vector<AnnotatedExpression> IngestTsv(const std::vector<std::string> &paths,
                                           const Lexicon &lexicon) {
  std::vector<AnnotatedExpression> out;
  for (const std::string &path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      std::vector<std::string_view> cols = SplitTabs(line);
      std::optional<Instant> dct;
      if (cols.size() == 4) dct = ParseDct(cols[3]);
      if (!dct) {
        throw Error(ErrorCode::kBadLine,
                    path + ":" + std::to_string(line_no) + ": bad line");
      }
      AnnotatedExpression e;
      e.doc_id = path + ":" + std::to_string(line_no);
      e.surface = std::string(cols[0]);
      e.tokens = lexicon.Tokenize(e.surface);
      e.gold_type = std::string(cols[1]);
      e.gold_value = std::string(cols[2]);
      e.dct = *dct;
      out.push_back(std::move(e));
    }
  }
  return out;
}

double EvalReport::type_accuracy() const {
  return scored() == 0 ? 0.0 : static_cast<double>(type_correct) / scored();
}

double EvalReport::value_accuracy() const {
  return scored() == 0 ? 0.0 : static_cast<double>(value_correct) / scored();
}

std::string EvalReport::ToJson() const {
  nlohmann::ordered_json j;
  j["total"] = total;
  j["skipped"] = skipped;
  j["type_accuracy"] = std::stod(FormatFraction(type_accuracy()));
  j["value_accuracy"] = std::stod(FormatFraction(value_accuracy()));
  nlohmann::ordered_json errs;
  for (const char *key : {"unseen_pattern", "bad_rule", "exec_error", "other"}) {
    auto it = errors.find(key);
    errs[key] = it == errors.end() ? 0 : it->second;
  }
  j["errors"] = errs;
  return j.dump(2) + "\n";
}

std::string EvalReport::ToText() const {
  std::ostringstream out;
  out << "total           " << total << "\n"
      << "skipped         " << skipped << "\n"
      << "type_accuracy   " << FormatFraction(type_accuracy()) << "\n"
      << "value_accuracy  " << FormatFraction(value_accuracy()) << "\n";
  for (const char *key : {"unseen_pattern", "bad_rule", "exec_error", "other"}) {
    auto it = errors.find(key);
    out << "  " << key << " " << (it == errors.end() ? 0 : it->second) << "\n";
  }
  return out.str();
}

EvalReport Evaluate(const RuleStore &store,
                    const std::vector<AnnotatedExpression> &test,
                    const Lexicon &lexicon) {
  EvalReport report;
  for (const char *key : {"unseen_pattern", "bad_rule", "exec_error", "other"}) {
    report.errors[key] = 0;
  }
  for (const AnnotatedExpression &e : test) {
    ++report.total;
    auto gold = TryParseTimexValue(e.gold_value);
    if (!gold) {
      ++report.skipped;
      continue;
    }
    NormalizationResult r = Normalize(e.tokens, e.dct, store, lexicon);
    if (r.via != Via::kFailed && r.timex_type == Upper(e.gold_type)) {
      ++report.type_correct;
    }
    if (r.via != Via::kFailed && r.value == SerializeTimexValue(*gold)) {
      ++report.value_correct;
      continue;
    }
    switch (r.via) {
      case Via::kFailed:
        ++report.errors[r.exec_failed ? "exec_error" : "unseen_pattern"];
        break;
      case Via::kDirect:
        ++report.errors["bad_rule"];
        break;
      case Via::kSegmented:
        ++report.errors["other"];
        break;
    }
  }
  return report;
}

}  // namespace timenorm
