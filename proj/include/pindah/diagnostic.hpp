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

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace pindah {

enum class Severity { ERROR };

/// Clause identifiers of the transfer statement, in canonical statement
/// order. PINDAH itself is the keyword, not a clause.
enum class ClauseKind {
  SUMBER,
  TUJUAN,
  TABEL,
  TABEL2,
  TGL_AWAL,
  TGL_AKHIR,
  METODE,
  IGNORE,
};

const char* to_string(ClauseKind kind);
std::optional<ClauseKind> clause_kind_from_string(std::string_view name);

namespace codes {
// Every code the compiler can emit. The error catalog is checked against
// this list, one entry per code.
inline constexpr const char* LEX001 = "LEX001";  // no rule matches character
inline constexpr const char* SYN001 = "SYN001";  // first token must be KEYWORD
inline constexpr const char* SYN002 = "SYN002";  // unexpected token
inline constexpr const char* SYN003 = "SYN003";  // unclosed separator
inline constexpr const char* SYN004 = "SYN004";  // malformed clause value
inline constexpr const char* SEM001 = "SEM001";  // duplicate clause
inline constexpr const char* SEM002 = "SEM002";  // missing mandatory clause
inline constexpr const char* SEM003 = "SEM003";  // begin date after end date
inline constexpr const char* SEM004 = "SEM004";  // same connection, same tables
inline constexpr const char* SEM005 = "SEM005";  // invalid calendar date
}  // namespace codes

std::span<const char* const> all_diagnostic_codes();

struct Diagnostic {
  int line = 1;
  std::string code;
  Severity severity = Severity::ERROR;
  std::string message;
  std::optional<ClauseKind> clause;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

}  // namespace pindah
