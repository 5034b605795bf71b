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

#include "penta/bifuzzy_set.hpp"

#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "penta/format.hpp"

namespace penta {

namespace {

bool is_label_char(char ch) {
  return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
         (ch >= '0' && ch <= '9') || ch == '_' || ch == '.' || ch == '-';
}

// Range check shared by both parsers so messages stay uniform. The line
// argument is 0 for JSON.
BifuzzyValue checked_value(double mu, double nu, int line) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw ParseError("mu out of range", line);
  if (!(nu >= 0.0 && nu <= 1.0)) throw ParseError("nu out of range", line);
  return BifuzzyValue(mu, nu);
}

void checked_insert(BifuzzySet& set, const std::string& label,
                    const BifuzzyValue& value, int line) {
  if (!is_valid_label(label)) {
    throw ParseError("invalid label '" + label + "'", line);
  }
  if (set.elements().count(label) != 0) {
    throw ParseError("duplicate label '" + label + "'", line);
  }
  set.insert(label, value);
}

}  // namespace

bool is_valid_label(const std::string& label) {
  if (label.empty()) return false;
  for (char ch : label) {
    if (!is_label_char(ch)) return false;
  }
  return true;
}

void BifuzzySet::insert(const std::string& label, const BifuzzyValue& value) {
  if (!is_valid_label(label)) {
    throw std::invalid_argument("invalid label '" + label + "'");
  }
  if (!elements_.emplace(label, value).second) {
    throw std::invalid_argument("duplicate label '" + label + "'");
  }
}

BifuzzySet parse_csv(std::istream& in) {
  BifuzzySet set;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1) {
      if (line != "label,mu,nu") {
        throw ParseError("missing 'label,mu,nu' header", 1);
      }
      continue;
    }
    const std::size_t comma1 = line.find(',');
    const std::size_t comma2 =
        comma1 == std::string::npos ? std::string::npos
                                    : line.find(',', comma1 + 1);
    if (comma2 == std::string::npos ||
        line.find(',', comma2 + 1) != std::string::npos) {
      throw ParseError("expected three comma-separated fields", line_no);
    }
    const std::string label = line.substr(0, comma1);
    double mu = 0.0;
    double nu = 0.0;
    if (!parse_double(line.substr(comma1 + 1, comma2 - comma1 - 1), mu)) {
      throw ParseError("malformed mu", line_no);
    }
    if (!parse_double(line.substr(comma2 + 1), nu)) {
      throw ParseError("malformed nu", line_no);
    }
    checked_insert(set, label, checked_value(mu, nu, line_no), line_no);
  }
  if (line_no == 0) throw ParseError("missing 'label,mu,nu' header", 1);
  return set;
}

void serialize_csv(const BifuzzySet& s, std::ostream& out) {
  out << "label,mu,nu\n";
  for (const auto& [label, value] : s.elements()) {
    out << label << ',' << format_roundtrip(value.mu()) << ','
        << format_roundtrip(value.nu()) << '\n';
  }
}

BifuzzySet parse_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("elements")) {
    throw ParseError("expected object with 'name' and 'elements'", 0);
  }
  if (!doc["name"].is_string()) {
    throw ParseError("'name' must be a string", 0);
  }
  if (!doc["elements"].is_object()) {
    throw ParseError("'elements' must be an object", 0);
  }
  BifuzzySet set(doc["name"].get<std::string>());
  for (const auto& [label, item] : doc["elements"].items()) {
    if (!item.is_object() || !item.contains("mu") || !item.contains("nu") ||
        !item["mu"].is_number() || !item["nu"].is_number()) {
      throw ParseError("element '" + label +
                           "' must be {\"mu\": number, \"nu\": number}",
                       0);
    }
    checked_insert(set, label,
                   checked_value(item["mu"].get<double>(),
                                 item["nu"].get<double>(), 0),
                   0);
  }
  return set;
}

void serialize_json(const BifuzzySet& s, std::ostream& out) {
  // nlohmann objects iterate in key order, which is already the canonical
  // label order, and doubles render as shortest round-trip decimals.
  nlohmann::json elements = nlohmann::json::object();
  for (const auto& [label, value] : s.elements()) {
    elements[label] = {{"mu", value.mu()}, {"nu", value.nu()}};
  }
  const nlohmann::json doc = {{"name", s.name()}, {"elements", elements}};
  out << doc.dump(2) << '\n';
}

}  // namespace penta
