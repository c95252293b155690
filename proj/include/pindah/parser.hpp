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

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pindah/diagnostic.hpp"
#include "pindah/token.hpp"

namespace pindah {

/// One clause of a statement: the identifier kind plus the tokens strictly
/// between its separators. Value tokens never include separators, line
/// breaks or statement terminators.
struct RawClause {
  ClauseKind kind;
  std::vector<Token> value_tokens;
  int line = 1;

  friend bool operator==(const RawClause&, const RawClause&) = default;
};

/// Raw AST of one accepted statement; clauses appear in source order.
struct TransferStatement {
  int line = 1;
  std::vector<RawClause> clauses;

  friend bool operator==(const TransferStatement&, const TransferStatement&) = default;
};

/// One expected position in a follow sequence: the acceptable token groups,
/// optionally restricted to specific lexemes, plus the message used when the
/// expectation is violated.
struct SyntaxExpectation {
  std::vector<TokenGroup> groups;
  std::vector<std::string> lexemes;  // empty = any lexeme of those groups
  std::string message;
};

/// Follow-table of the grammar, keyed by the keyword PINDAH and each clause
/// identifier: the token sequence that must follow the word.
struct SyntaxRuleTable {
  std::map<std::string, std::vector<SyntaxExpectation>, std::less<>> follow;
};

SyntaxRuleTable default_syntax_table();

/// Splits a scanned token stream into statement slices. Slices are delimited
/// by LINEBREAK/END_STMNT tokens or end of input; delimiters are excluded
/// and slices holding only whitespace are dropped.
std::vector<std::vector<Token>> split_statements(std::span<const Token> tokens);

struct ParseResult {
  std::optional<TransferStatement> statement;
  std::vector<Diagnostic> diagnostics;  // non-empty exactly when !statement

  bool ok() const { return statement.has_value(); }
};

/// Checks one statement slice against the follow-table. The parser enforces
/// token shape, clause-value form and canonical clause order; clause counts
/// (duplicates, missing mandatory clauses) are the semantic stage's job, so
/// repeated adjacent clauses parse here and are rejected there.
ParseResult parse_statement(std::span<const Token> slice,
                            const SyntaxRuleTable& table);
ParseResult parse_statement(std::span<const Token> slice);

/// True iff the clause-kind sequence is one of the eight productions of the
/// transfer-statement grammar: SUMBER TUJUAN TABEL [TABEL2] TGL_AWAL
/// [TGL_AKHIR] METODE [IGNORE].
bool accepts(std::span<const ClauseKind> clause_kinds_in_order);

/// The eight productions, rendered one per line (grammar reference text).
std::span<const std::string_view> bnf_productions();

}  // namespace pindah
