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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pindah/diagnostic.hpp"
#include "pindah/parser.hpp"

namespace pindah {

enum class Method { QUERY, LOADER, TRANSPORTTABLESPACE };

const char* to_string(Method method);
std::optional<Method> method_from_string(std::string_view name);

/// Database connection triple user/password@alias. Equality compares all
/// three fields; two ends are "the same database" only when the whole
/// triple matches.
struct ConnSpec {
  std::string user;
  std::string password;
  std::string alias;

  friend bool operator==(const ConnSpec&, const ConnSpec&) = default;
};

/// Calendar dates are proleptic Gregorian; the textual dd/mm/yyyy form is
/// used only at serialization boundaries.
using Date = std::chrono::year_month_day;

std::string format_date(Date date);  // dd/mm/yyyy

enum class DatePrecision { DAY, MONTH, YEAR };
enum class DateRole { BEGIN, END };

/// A date clause value before expansion: full date, month or bare year.
struct DateSpec {
  DatePrecision precision = DatePrecision::DAY;
  int day = 0;    // set for DAY
  int month = 0;  // set for DAY and MONTH
  int year = 0;

  /// Parses a date-token lexeme: dd/mm/yyyy, mm/yyyy or yyyy.
  static std::optional<DateSpec> parse(std::string_view lexeme);

  friend bool operator==(const DateSpec&, const DateSpec&) = default;
};

/// Expands a date value to a calendar date: MONTH becomes the first (BEGIN)
/// or last (END, leap-aware) day of the month, YEAR becomes 01/01 or 31/12.
/// Returns nullopt for invalid calendar dates (30/02 and the like).
std::optional<Date> resolve_date(const DateSpec& spec, DateRole role);

/// Semantically validated, default-filled, date-normalized statement.
struct TransferSpec {
  int line = 1;
  ConnSpec source;
  ConnSpec destination;
  std::string table;
  std::string table2;
  Date begin_date{};
  Date end_date{};
  Method method = Method::QUERY;
  bool ignore_errors = false;  // IGNORE[Y] continues past bad rows

  friend bool operator==(const TransferSpec&, const TransferSpec&) = default;
};

struct AnalyzeResult {
  std::optional<TransferSpec> spec;
  std::vector<Diagnostic> diagnostics;  // non-empty exactly when !spec

  bool ok() const { return spec.has_value(); }
};

/// Runs the semantic checks in order: duplicate clauses (SEM001), missing
/// mandatory clauses (SEM002), default fill (TABEL2 from TABEL, TGL_AKHIR
/// from the resolved begin date, IGNORE 'T'), date resolution (SEM005) and
/// ordering (SEM003), and the same-connection/same-table check (SEM004).
/// All applicable diagnostics are reported, not just the first.
AnalyzeResult analyze(const TransferStatement& statement);

/// Extracts the connection triple from a SUMBER/TUJUAN clause. The parser
/// guarantees the value shape.
ConnSpec connspec_of(const RawClause& clause);

}  // namespace pindah
