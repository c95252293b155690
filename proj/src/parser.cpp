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

#include "pindah/parser.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pindah {

namespace {

std::string describe(const Token& token) {
  std::string text = to_string(token.group);
  text += " '";
  text += token.lexeme;
  text += "'";
  return text;
}

bool expectation_allows(const SyntaxExpectation& expected, const Token& token) {
  if (std::find(expected.groups.begin(), expected.groups.end(), token.group) ==
      expected.groups.end()) {
    return false;
  }
  if (expected.lexemes.empty()) return true;
  return std::find(expected.lexemes.begin(), expected.lexemes.end(),
                   token.lexeme) != expected.lexemes.end();
}

Diagnostic make_diag(int line, const char* code, std::string message,
                     std::optional<ClauseKind> clause = std::nullopt) {
  return Diagnostic{line, code, Severity::ERROR, std::move(message), clause};
}

}  // namespace

SyntaxRuleTable default_syntax_table() {
  SyntaxRuleTable table;

  auto open = SyntaxExpectation{{TokenGroup::OPEN_SEPARATOR}, {},
                                "OPEN_SEPARATOR [ must follow the identifier"};
  auto close = SyntaxExpectation{{TokenGroup::CLOSE_SEPARATOR}, {},
                                 "expected CLOSE_SEPARATOR ]"};
  auto alfa = [](std::string msg) {
    return SyntaxExpectation{{TokenGroup::ALFANUMERIKSPESIAL}, {}, std::move(msg)};
  };

  table.follow["PINDAH"] = {
      SyntaxExpectation{{TokenGroup::WHITESPACE}, {}, "WHITESPACE must be declared"},
      SyntaxExpectation{{TokenGroup::IDENTIFIER}, {}, "IDENTIFIER must be declared"},
  };

  const std::string conn = "expected connection user/password@alias";
  for (const char* name : {"SUMBER", "TUJUAN"}) {
    table.follow[name] = {
        open,
        alfa(conn),
        SyntaxExpectation{{TokenGroup::SLASH}, {}, conn},
        alfa(conn),
        SyntaxExpectation{{TokenGroup::OPERATOR}, {}, conn},
        alfa(conn),
        close,
    };
  }
  for (const char* name : {"TABEL", "TABEL2"}) {
    table.follow[name] = {open, alfa("expected a table name"), close};
  }
  for (const char* name : {"TGL_AWAL", "TGL_AKHIR"}) {
    table.follow[name] = {
        open,
        SyntaxExpectation{{TokenGroup::TGLBLNTHN, TokenGroup::BLNTHN, TokenGroup::TAHUN},
                          {},
                          "expected a date dd/mm/yyyy, mm/yyyy or yyyy"},
        close,
    };
  }
  table.follow["METODE"] = {
      open,
      SyntaxExpectation{{TokenGroup::LITERAL}, {},
                        "expected one of LOADER, QUERY, TRANSPORTTABLESPACE"},
      close,
  };
  table.follow["IGNORE"] = {
      open,
      SyntaxExpectation{{TokenGroup::ALFANUMERIKSPESIAL}, {"Y", "T"}, "expected Y or T"},
      close,
  };
  return table;
}

std::vector<std::vector<Token>> split_statements(std::span<const Token> tokens) {
  std::vector<std::vector<Token>> slices;
  std::vector<Token> current;

  auto flush = [&] {
    bool meaningful = std::any_of(current.begin(), current.end(), [](const Token& t) {
      return t.group != TokenGroup::WHITESPACE;
    });
    if (meaningful) slices.push_back(std::move(current));
    current.clear();
  };

  for (const Token& token : tokens) {
    if (token.group == TokenGroup::LINEBREAK || token.group == TokenGroup::END_STMNT) {
      flush();
    } else {
      current.push_back(token);
    }
  }
  flush();  // end of input terminates the last statement
  return slices;
}

ParseResult parse_statement(std::span<const Token> slice,
                            const SyntaxRuleTable& table) {
  ParseResult result;
  std::size_t pos = 0;

  auto skip_whitespace = [&] {
    while (pos < slice.size() && slice[pos].group == TokenGroup::WHITESPACE) ++pos;
  };

  skip_whitespace();
  if (pos == slice.size()) {
    result.diagnostics.push_back(
        make_diag(1, codes::SYN001, "KEYWORD value must be declared; statement is empty"));
    return result;
  }

  const Token& first = slice[pos];
  TransferStatement statement;
  statement.line = first.line;

  if (first.group != TokenGroup::KEYWORD) {
    result.diagnostics.push_back(make_diag(
        first.line, codes::SYN001,
        "KEYWORD value must be declared; found " + describe(first)));
    return result;
  }
  ++pos;

  auto keyword_entry = table.follow.find("PINDAH");
  if (keyword_entry == table.follow.end() || keyword_entry->second.size() < 2) {
    throw std::invalid_argument("syntax rule table lacks a PINDAH entry");
  }
  const auto& keyword_follow = keyword_entry->second;
  int last_clause_index = -1;

  while (pos < slice.size()) {
    // Separator: one or more WHITESPACE tokens between keyword/clauses.
    if (slice[pos].group != TokenGroup::WHITESPACE) {
      result.diagnostics.push_back(make_diag(
          slice[pos].line, codes::SYN002,
          keyword_follow[0].message + "; found " + describe(slice[pos])));
      return result;
    }
    skip_whitespace();
    if (pos == slice.size()) break;  // trailing whitespace

    const Token& ident = slice[pos];
    if (!expectation_allows(keyword_follow[1], ident)) {
      result.diagnostics.push_back(make_diag(
          ident.line, codes::SYN002,
          keyword_follow[1].message + "; found " + describe(ident)));
      return result;
    }
    ClauseKind kind = *clause_kind_from_string(ident.lexeme);
    int kind_index = static_cast<int>(kind);
    if (kind_index < last_clause_index) {
      std::ostringstream expected;
      for (int k = last_clause_index; k <= static_cast<int>(ClauseKind::IGNORE); ++k) {
        if (k > last_clause_index) expected << ", ";
        expected << to_string(static_cast<ClauseKind>(k));
      }
      result.diagnostics.push_back(make_diag(
          ident.line, codes::SYN002,
          std::string("clause ") + to_string(kind) +
              " out of order; expected one of " + expected.str(),
          kind));
      return result;
    }
    last_clause_index = kind_index;
    ++pos;

    auto entry = table.follow.find(ident.lexeme);
    if (entry == table.follow.end()) {
      throw std::invalid_argument("syntax rule table lacks an entry for " +
                                  std::string(ident.lexeme));
    }
    const auto& follow = entry->second;
    RawClause clause{kind, {}, ident.line};
    for (std::size_t step = 0; step < follow.size(); ++step) {
      const SyntaxExpectation& expected = follow[step];
      bool inside_value = step > 0;
      if (pos == slice.size()) {
        if (!inside_value) {
          result.diagnostics.push_back(make_diag(
              ident.line, codes::SYN002,
              expected.message + " after " + std::string(to_string(kind)) +
                  "; statement ended",
              kind));
        } else {
          result.diagnostics.push_back(make_diag(
              ident.line, codes::SYN003,
              std::string("unclosed separator in ") + to_string(kind) + " clause",
              kind));
        }
        return result;
      }
      const Token& token = slice[pos];
      if (!expectation_allows(expected, token)) {
        if (!inside_value) {
          result.diagnostics.push_back(make_diag(
              token.line, codes::SYN002,
              expected.message + " after " + std::string(to_string(kind)) +
                  "; found " + describe(token),
              kind));
        } else {
          result.diagnostics.push_back(make_diag(
              token.line, codes::SYN004,
              std::string("malformed ") + to_string(kind) + " clause value; " +
                  expected.message + "; found " + describe(token),
              kind));
        }
        return result;
      }
      if (step > 0 && step + 1 < follow.size()) clause.value_tokens.push_back(token);
      ++pos;
    }
    statement.clauses.push_back(std::move(clause));
  }

  result.statement = std::move(statement);
  return result;
}

ParseResult parse_statement(std::span<const Token> slice) {
  static const SyntaxRuleTable table = default_syntax_table();
  return parse_statement(slice, table);
}

bool accepts(std::span<const ClauseKind> clause_kinds_in_order) {
  std::size_t i = 0;
  auto eat = [&](ClauseKind kind) {
    if (i < clause_kinds_in_order.size() && clause_kinds_in_order[i] == kind) {
      ++i;
      return true;
    }
    return false;
  };

  if (!eat(ClauseKind::SUMBER)) return false;
  if (!eat(ClauseKind::TUJUAN)) return false;
  if (!eat(ClauseKind::TABEL)) return false;
  eat(ClauseKind::TABEL2);
  if (!eat(ClauseKind::TGL_AWAL)) return false;
  eat(ClauseKind::TGL_AKHIR);
  if (!eat(ClauseKind::METODE)) return false;
  eat(ClauseKind::IGNORE);
  return i == clause_kinds_in_order.size();
}

std::span<const std::string_view> bnf_productions() {
  static constexpr std::string_view productions[] = {
      "<STATEMENT> ::= <PINDAH> <SUMBER> <TUJUAN> <TABEL> <TGL_AWAL> <METODE> <EOL>",
      "<STATEMENT> ::= <PINDAH> <SUMBER> <TUJUAN> <TABEL> <TABEL2> <TGL_AWAL> <METODE> <EOL>",
      "<STATEMENT> ::= <PINDAH> <SUMBER> <TUJUAN> <TABEL> <TGL_AWAL> <TGL_AKHIR> <METODE> <EOL>",
      "<STATEMENT> ::= <PINDAH> <SUMBER> <TUJUAN> <TABEL> <TABEL2> <TGL_AWAL> <TGL_AKHIR> <METODE> <EOL>",
      "<STATEMENT> ::= <PINDAH> <SUMBER> <TUJUAN> <TABEL> <TGL_AWAL> <METODE> <IGNORE> <EOL>",
      "<STATEMENT> ::= <PINDAH> <SUMBER> <TUJUAN> <TABEL> <TABEL2> <TGL_AWAL> <METODE> <IGNORE> <EOL>",
      "<STATEMENT> ::= <PINDAH> <SUMBER> <TUJUAN> <TABEL> <TGL_AWAL> <TGL_AKHIR> <METODE> <IGNORE> <EOL>",
      "<STATEMENT> ::= <PINDAH> <SUMBER> <TUJUAN> <TABEL> <TABEL2> <TGL_AWAL> <TGL_AKHIR> <METODE> <IGNORE> <EOL>",
  };
  return productions;
}

}  // namespace pindah
