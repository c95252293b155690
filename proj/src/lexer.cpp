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

#include "pindah/lexer.hpp"

#include <cassert>
#include <stdexcept>

namespace pindah {

const char* to_string(TokenGroup group) {
  switch (group) {
    case TokenGroup::KEYWORD: return "KEYWORD";
    case TokenGroup::IDENTIFIER: return "IDENTIFIER";
    case TokenGroup::LITERAL: return "LITERAL";
    case TokenGroup::OPEN_SEPARATOR: return "OPEN_SEPARATOR";
    case TokenGroup::CLOSE_SEPARATOR: return "CLOSE_SEPARATOR";
    case TokenGroup::OPERATOR: return "OPERATOR";
    case TokenGroup::TGLBLNTHN: return "TGLBLNTHN";
    case TokenGroup::BLNTHN: return "BLNTHN";
    case TokenGroup::TAHUN: return "TAHUN";
    case TokenGroup::ALFANUMERIKSPESIAL: return "ALFANUMERIKSPESIAL";
    case TokenGroup::STRING: return "STRING";
    case TokenGroup::SLASH: return "SLASH";
    case TokenGroup::LINEBREAK: return "LINEBREAK";
    case TokenGroup::WHITESPACE: return "WHITESPACE";
    case TokenGroup::END_STMNT: return "END_STMNT";
  }
  return "?";
}

std::optional<TokenGroup> token_group_from_string(std::string_view name) {
  static constexpr TokenGroup all[] = {
      TokenGroup::KEYWORD,        TokenGroup::IDENTIFIER,
      TokenGroup::LITERAL,        TokenGroup::OPEN_SEPARATOR,
      TokenGroup::CLOSE_SEPARATOR, TokenGroup::OPERATOR,
      TokenGroup::TGLBLNTHN,      TokenGroup::BLNTHN,
      TokenGroup::TAHUN,          TokenGroup::ALFANUMERIKSPESIAL,
      TokenGroup::STRING,         TokenGroup::SLASH,
      TokenGroup::LINEBREAK,      TokenGroup::WHITESPACE,
      TokenGroup::END_STMNT,
  };
  for (TokenGroup g : all) {
    if (name == to_string(g)) return g;
  }
  return std::nullopt;
}

std::vector<LexRule> default_rules() {
  static const struct {
    TokenGroup group;
    const char* pattern;
  } table[] = {
      {TokenGroup::KEYWORD, R"((PINDAH))"},
      {TokenGroup::IDENTIFIER,
       R"((SUMBER|TUJUAN|TABEL2|TABEL|TGL_AWAL|TGL_AKHIR|METODE|IGNORE))"},
      {TokenGroup::LITERAL, R"((LOADER|QUERY|TRANSPORTTABLESPACE))"},
      {TokenGroup::OPEN_SEPARATOR, R"([[])"},
      {TokenGroup::CLOSE_SEPARATOR, R"([\]])"},
      {TokenGroup::OPERATOR, R"([@])"},
      {TokenGroup::TGLBLNTHN, R"(\d\d/\d\d/\d\d\d\d)"},
      {TokenGroup::BLNTHN, R"(\d\d/\d\d\d\d)"},
      {TokenGroup::TAHUN, R"(\d\d\d\d)"},
      {TokenGroup::ALFANUMERIKSPESIAL, R"([\w$#]+)"},
      {TokenGroup::STRING, R"(('[^']*'))"},
      {TokenGroup::SLASH, R"([\/])"},
      {TokenGroup::LINEBREAK, "\n"},
      {TokenGroup::WHITESPACE, R"([ \t\r\f\v]+)"},
      // Statements end at LINEBREAK or end of input; no text produces this
      // group, the parser treats end of input as an implicit terminator.
      {TokenGroup::END_STMNT, ""},
  };

  std::vector<LexRule> rules;
  rules.reserve(std::size(table));
  int rank = 0;
  for (const auto& entry : table) {
    rules.push_back(LexRule{entry.group, entry.pattern, rank++});
  }
  return rules;
}

namespace {

// Capturing groups inside a rule pattern shift the submatch indices of the
// combined alternation; count them so each rule can be located afterwards.
int count_capture_groups(std::string_view pattern) {
  int n = 0;
  bool in_class = false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    char c = pattern[i];
    if (c == '\\') {
      ++i;
      continue;
    }
    if (in_class) {
      if (c == ']') in_class = false;
      continue;
    }
    if (c == '[') {
      in_class = true;
      continue;
    }
    if (c == '(' && (i + 1 >= pattern.size() || pattern[i + 1] != '?')) ++n;
  }
  return n;
}

const char* guard_for(TokenGroup group) {
  switch (group) {
    case TokenGroup::KEYWORD:
    case TokenGroup::IDENTIFIER:
    case TokenGroup::LITERAL:
      return R"((?![\w$#]))";
    case TokenGroup::TGLBLNTHN:
    case TokenGroup::BLNTHN:
    case TokenGroup::TAHUN:
      return R"((?![0-9/]))";
    default:
      return "";
  }
}

}  // namespace

CompiledRules::CompiledRules(std::vector<LexRule> rules)
    : rules_(std::move(rules)) {
  if (rules_.empty()) throw std::invalid_argument("empty lex rule table");

  std::string combined;
  submatch_of_rule_.assign(rules_.size(), -1);
  int next_submatch = 1;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const LexRule& rule = rules_[i];
    if (rule.pattern.empty()) continue;  // END_STMNT: synthesized, not scanned
    if (!combined.empty()) combined += '|';
    combined += "((?:";
    combined += rule.pattern;
    combined += ')';
    combined += guard_for(rule.group);
    combined += ')';
    submatch_of_rule_[i] = next_submatch;
    next_submatch += 1 + count_capture_groups(rule.pattern);
  }
  combined_ = std::regex(combined);
}

int CompiledRules::rule_for_match(const std::cmatch& m) const {
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    int idx = submatch_of_rule_[i];
    if (idx >= 0 && m[static_cast<std::size_t>(idx)].matched) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

ScanResult scan(std::string_view source, const CompiledRules& rules) {
  ScanResult out;
  const char* begin = source.data();
  const char* end = begin + source.size();
  std::size_t pos = 0;
  int line = 1;
  int column = 1;
  std::cmatch m;

  while (pos < source.size()) {
    bool matched = std::regex_search(begin + pos, end, m, rules.combined(),
                                     std::regex_constants::match_continuous);
    if (!matched || m.length(0) == 0) {
      out.error = LexError{line, column, source[pos], pos};
      return out;
    }
    int rule = rules.rule_for_match(m);
    assert(rule >= 0);
    auto length = static_cast<std::size_t>(m.length(0));
    out.tokens.push_back(Token{rules.rules()[static_cast<std::size_t>(rule)].group,
                               source.substr(pos, length), line, column});
    for (std::size_t i = pos; i < pos + length; ++i) {
      if (source[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    pos += length;
  }
  return out;
}

ScanResult scan(std::string_view source, const std::vector<LexRule>& rules) {
  return scan(source, CompiledRules(rules));
}

}  // namespace pindah
