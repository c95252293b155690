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

#include "pindah/diagnostic.hpp"

namespace pindah {

const char* to_string(ClauseKind kind) {
  switch (kind) {
    case ClauseKind::SUMBER: return "SUMBER";
    case ClauseKind::TUJUAN: return "TUJUAN";
    case ClauseKind::TABEL: return "TABEL";
    case ClauseKind::TABEL2: return "TABEL2";
    case ClauseKind::TGL_AWAL: return "TGL_AWAL";
    case ClauseKind::TGL_AKHIR: return "TGL_AKHIR";
    case ClauseKind::METODE: return "METODE";
    case ClauseKind::IGNORE: return "IGNORE";
  }
  return "?";
}

std::optional<ClauseKind> clause_kind_from_string(std::string_view name) {
  static constexpr ClauseKind all[] = {
      ClauseKind::SUMBER,   ClauseKind::TUJUAN,    ClauseKind::TABEL,
      ClauseKind::TABEL2,   ClauseKind::TGL_AWAL,  ClauseKind::TGL_AKHIR,
      ClauseKind::METODE,   ClauseKind::IGNORE,
  };
  for (ClauseKind k : all) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

std::span<const char* const> all_diagnostic_codes() {
  static constexpr const char* const all[] = {
      codes::LEX001, codes::SYN001, codes::SYN002, codes::SYN003,
      codes::SYN004, codes::SEM001, codes::SEM002, codes::SEM003,
      codes::SEM004, codes::SEM005,
  };
  return all;
}

}  // namespace pindah
