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
#include <regex>
#include <string_view>
#include <vector>

#include "pindah/token.hpp"

namespace pindah {

/// The ordered scan table of the transfer language: 15 rules, KEYWORD first.
/// The END_STMNT entry carries an empty pattern; statements end at LINEBREAK
/// or end of input, and the parser performs the grouping.
std::vector<LexRule> default_rules();

/// A rule table compiled into a single alternation. Two guards are part of
/// the scan semantics and are attached by group when compiling:
///   - KEYWORD/IDENTIFIER/LITERAL must not be followed by a word character,
///     '$' or '#', so a table named PINDAHAN scans as one
///     ALFANUMERIKSPESIAL token instead of KEYWORD + remainder;
///   - TGLBLNTHN/BLNTHN/TAHUN must not be followed by a digit or '/', so
///     31/12/2011 never scans as a shorter date form plus junk.
class CompiledRules {
 public:
  explicit CompiledRules(std::vector<LexRule> rules);

  const std::vector<LexRule>& rules() const { return rules_; }
  const std::regex& combined() const { return combined_; }

  /// Rule index of the alternative that produced a match, by rank order.
  int rule_for_match(const std::cmatch& m) const;

 private:
  std::vector<LexRule> rules_;
  std::regex combined_;
  std::vector<int> submatch_of_rule_;  // -1 for rules excluded from the scan
};

struct ScanResult {
  std::vector<Token> tokens;  // the full scan, or the prefix before `error`
  std::optional<LexError> error;

  bool ok() const { return !error.has_value(); }
};

/// Greedy left-to-right scan. At each position the lowest-ranked rule that
/// matches a non-empty prefix wins; matching is case-sensitive. Whitespace
/// and line breaks are retained, so for an accepted input the concatenation
/// of all lexemes reproduces the source byte for byte. Token lexemes alias
/// `source`.
ScanResult scan(std::string_view source, const CompiledRules& rules);
ScanResult scan(std::string_view source, const std::vector<LexRule>& rules);

}  // namespace pindah
