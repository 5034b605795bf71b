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

#include "penta/truth_table.hpp"

#include <stdexcept>

#include "penta/algebra.hpp"

namespace penta {

const char* to_string(Connective op) {
  switch (op) {
    case Connective::disjunction:
      return "disjunction";
    case Connective::conjunction:
      return "conjunction";
    case Connective::complement:
      return "complement";
    case Connective::negation:
      return "negation";
    case Connective::dual:
      return "dual";
    case Connective::implication:
      return "implication";
    case Connective::equivalence:
      return "equivalence";
  }
  return "?";
}

Connective connective_from_string(const std::string& name) {
  for (Connective op : kAllConnectives) {
    if (name == to_string(op)) return op;
  }
  throw std::invalid_argument("unknown connective: " + name);
}

bool is_binary(Connective op) {
  switch (op) {
    case Connective::complement:
    case Connective::negation:
    case Connective::dual:
      return false;
    default:
      return true;
  }
}

CrispLabel TruthTable::at(int row, int col) const {
  const bool binary = cells.size() == 25;
  return cells.at(static_cast<std::size_t>(binary ? row * 5 + col : row));
}

std::string TruthTable::render() const {
  std::string out;
  const bool binary = cells.size() == 25;
  if (binary) {
    out += "  |";
    for (CrispLabel col : kTableLabelOrder) {
      out += ' ';
      out += to_char(col);
    }
    out += '\n';
  }
  for (int row = 0; row < 5; ++row) {
    out += to_char(kTableLabelOrder[static_cast<std::size_t>(row)]);
    out += " |";
    const int cols = binary ? 5 : 1;
    for (int col = 0; col < cols; ++col) {
      out += ' ';
      out += to_char(at(row, col));
    }
    out += '\n';
  }
  return out;
}

TruthTable generate_truth_table(Connective op, const NormCouple& couple) {
  TruthTable table{op, {}};
  table.cells.reserve(is_binary(op) ? 25 : 5);
  auto push = [&](const PentaValue& result, CrispLabel a, CrispLabel b) {
    std::optional<CrispLabel> label = crisp_label_of(result);
    if (!label) {
      throw std::domain_error(
          std::string(to_string(op)) + " of " + to_char(a) +
          std::string(is_binary(op) ? std::string(", ") + to_char(b) : "") +
          " under " + couple.name() + " is not crisp");
    }
    table.cells.push_back(*label);
  };
  for (CrispLabel row : kTableLabelOrder) {
    const PentaValue x = crisp_value(row);
    if (!is_binary(op)) {
      switch (op) {
        case Connective::complement:
          push(complement(x), row, row);
          break;
        case Connective::negation:
          push(negate(x), row, row);
          break;
        default:
          push(dual(x), row, row);
          break;
      }
      continue;
    }
    for (CrispLabel col : kTableLabelOrder) {
      const PentaValue y = crisp_value(col);
      switch (op) {
        case Connective::disjunction:
          push(unite(x, y, couple), row, col);
          break;
        case Connective::conjunction:
          push(intersect(x, y, couple), row, col);
          break;
        case Connective::implication:
          push(implies(x, y, couple), row, col);
          break;
        default:
          push(equivalent(x, y, couple), row, col);
          break;
      }
    }
  }
  return table;
}

namespace {

// Static transcriptions, one character per cell in the t, i, u, c, f
// row/column order. The generator never reads these; diff() is the only
// place the two meet.
TruthTable make_reference(Connective op, const char* text) {
  TruthTable table{op, {}};
  for (const char* p = text; *p != '\0'; ++p) {
    table.cells.push_back(*crisp_label_from_char(*p));
  }
  return table;
}

}  // namespace

const TruthTable& reference_table(Connective op) {
  static const TruthTable disjunction = make_reference(
      Connective::disjunction, "ttttt" "tiiii" "tiuiu" "tiicc" "tiucf");
  static const TruthTable conjunction = make_reference(
      Connective::conjunction, "tiucf" "iiiif" "uiuif" "ciicf" "fffff");
  static const TruthTable complement_t =
      make_reference(Connective::complement, "fiuct");
  static const TruthTable negation =
      make_reference(Connective::negation, "ficut");
  static const TruthTable dual_t = make_reference(Connective::dual, "ticuf");
  static const TruthTable implication = make_reference(
      Connective::implication, "tiucf" "tiiii" "tiuiu" "tiicc" "ttttt");
  static const TruthTable equivalence = make_reference(
      Connective::equivalence, "tiucf" "iiiii" "uiuiu" "ciicc" "fiuct");
  switch (op) {
    case Connective::disjunction:
      return disjunction;
    case Connective::conjunction:
      return conjunction;
    case Connective::complement:
      return complement_t;
    case Connective::negation:
      return negation;
    case Connective::dual:
      return dual_t;
    case Connective::implication:
      return implication;
    case Connective::equivalence:
      return equivalence;
  }
  throw std::logic_error("unreachable connective");
}

std::vector<CellMismatch> diff(const TruthTable& got, const TruthTable& want) {
  if (got.cells.size() != want.cells.size()) {
    throw std::invalid_argument("table shapes differ");
  }
  std::vector<CellMismatch> out;
  const bool binary = got.cells.size() == 25;
  for (int row = 0; row < 5; ++row) {
    for (int col = 0; col < (binary ? 5 : 1); ++col) {
      if (got.at(row, col) != want.at(row, col)) {
        out.push_back({kTableLabelOrder[static_cast<std::size_t>(row)],
                       kTableLabelOrder[static_cast<std::size_t>(
                           binary ? col : row)],
                       got.at(row, col), want.at(row, col)});
      }
    }
  }
  return out;
}

}  // namespace penta
