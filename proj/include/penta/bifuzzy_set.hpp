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

// Finite bifuzzy sets over labeled universes, with CSV and JSON
// persistence. Iteration order is always the byte-lexicographic sort of
// the labels, which pins down serialization and every aggregate.

#ifndef PENTA_BIFUZZY_SET_HPP
#define PENTA_BIFUZZY_SET_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>

#include "penta/bifuzzy.hpp"

namespace penta {

/// Raised by the parsers; line is 1-based for CSV and 0 for JSON (where the
/// underlying message already locates the problem).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line)
      : std::runtime_error(line > 0 ? message + ", line " + std::to_string(line)
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Labels are non-empty and restricted to [A-Za-z0-9_.-], so CSV needs no
/// quoting.
bool is_valid_label(const std::string& label);

class BifuzzySet {
 public:
  BifuzzySet() = default;
  explicit BifuzzySet(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Throws std::invalid_argument on an invalid or duplicate label.
  void insert(const std::string& label, const BifuzzyValue& value);

  const std::map<std::string, BifuzzyValue>& elements() const {
    return elements_;
  }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  friend bool operator==(const BifuzzySet&, const BifuzzySet&) = default;

 private:
  std::string name_;
  std::map<std::string, BifuzzyValue> elements_;
};

/// CSV: header `label,mu,nu`, one row per element, LF line endings. Row
/// order on input is irrelevant; output is in canonical label order with
/// shortest round-trip number rendering, so parse(serialize(s)) == s
/// exactly. The set name is not part of the CSV form.
BifuzzySet parse_csv(std::istream& in);
void serialize_csv(const BifuzzySet& s, std::ostream& out);

/// JSON: {"name": <text>, "elements": {<label>: {"mu": x, "nu": y}, ...}}.
BifuzzySet parse_json(std::istream& in);
void serialize_json(const BifuzzySet& s, std::ostream& out);

}  // namespace penta

#endif  // PENTA_BIFUZZY_SET_HPP
