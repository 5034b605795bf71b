// Copyright 2026 The Pentalogic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Crisp truth tables for the seven connectives, generated by running the
// vector operators over the five constants, plus the reference tables they
// are checked against. The generator never reads the reference data; the
// two meet only in diff().

#ifndef PENTA_TRUTH_TABLE_HPP
#define PENTA_TRUTH_TABLE_HPP

#include <array>
#include <string>
#include <vector>

#include "penta/norms.hpp"
#include "penta/penta_value.hpp"

namespace penta {

enum class Connective {
  disjunction,
  conjunction,
  complement,
  negation,
  dual,
  implication,
  equivalence,
};

inline constexpr std::array<Connective, 7> kAllConnectives = {
    Connective::disjunction, Connective::conjunction, Connective::complement,
    Connective::negation,    Connective::dual,        Connective::implication,
    Connective::equivalence,
};

const char* to_string(Connective op);
Connective connective_from_string(const std::string& name);
bool is_binary(Connective op);

/// Row/column label order used by every table: t, i, u, c, f.
inline constexpr std::array<CrispLabel, 5> kTableLabelOrder = {
    CrispLabel::True,         CrispLabel::Ambiguous, CrispLabel::Incomplete,
    CrispLabel::Inconsistent, CrispLabel::False,
};

/// A 5x5 (binary) or 5x1 (unary) grid of crisp labels.
struct TruthTable {
  Connective op;
  std::vector<CrispLabel> cells;  // row-major, 25 or 5 entries

  CrispLabel at(int row, int col = 0) const;

  /// Fixed text form. Binary:
  ///   "  | t i u c f\n" then one "x | . . . . .\n" line per row.
  /// Unary: five "x | y\n" lines.
  std::string render() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

/// Applies the connective to all pairs (or singletons) of the five crisp
/// constants and maps each result back to its label. Throws
/// std::domain_error if any result is not crisp -- that signals either an
/// implementation bug or a couple under which the constants are not closed.
TruthTable generate_truth_table(Connective op, const NormCouple& couple);

/// The reference transcription of the expected table for each connective
/// (static data, independent of the generator).
const TruthTable& reference_table(Connective op);

struct CellMismatch {
  CrispLabel row;
  CrispLabel col;  // == row for unary tables
  CrispLabel got;
  CrispLabel want;
};

/// Cell-for-cell comparison; empty result means the tables agree.
std::vector<CellMismatch> diff(const TruthTable& got, const TruthTable& want);

}  // namespace penta

#endif  // PENTA_TRUTH_TABLE_HPP
