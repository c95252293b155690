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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace pindah {

/// Lexical token groups. The enumeration is closed; every token carries
/// exactly one group. Names follow the rule table verbatim.
enum class TokenGroup {
  KEYWORD,
  IDENTIFIER,
  LITERAL,
  OPEN_SEPARATOR,
  CLOSE_SEPARATOR,
  OPERATOR,
  TGLBLNTHN,  // dd/mm/yyyy
  BLNTHN,     // mm/yyyy
  TAHUN,      // yyyy
  ALFANUMERIKSPESIAL,
  STRING,
  SLASH,
  LINEBREAK,
  WHITESPACE,
  END_STMNT,
};

const char* to_string(TokenGroup group);
std::optional<TokenGroup> token_group_from_string(std::string_view name);

/// One lexical unit. The lexeme is a verbatim, non-empty slice of the
/// scanned source; it stays valid only as long as that source buffer.
/// line/column are 1-based and point at the first character of the lexeme.
struct Token {
  TokenGroup group;
  std::string_view lexeme;
  int line = 1;
  int column = 1;

  friend bool operator==(const Token&, const Token&) = default;
};

/// One entry of the ordered scan table. Ranks are unique and dense from 0;
/// the first rule (lowest rank) matching a non-empty prefix wins.
struct LexRule {
  TokenGroup group;
  std::string pattern;  // ECMAScript regular expression text
  int rank = 0;
};

/// No rule matched at (line, column). offset is the byte offset into the
/// source, which callers can use to resume scanning past the bad input.
struct LexError {
  int line = 1;
  int column = 1;
  char offending = '\0';
  std::size_t offset = 0;
};

}  // namespace pindah
