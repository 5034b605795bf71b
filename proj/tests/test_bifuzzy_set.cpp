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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "penta/bifuzzy_set.hpp"

using namespace penta;

namespace {

struct Lcg {
  std::uint64_t state = 0x853c49e6748fea9bull;
  double next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
};

BifuzzySet parse_csv_text(const std::string& text) {
  std::istringstream in(text);
  return parse_csv(in);
}

std::string csv_text(const BifuzzySet& s) {
  std::ostringstream out;
  serialize_csv(s, out);
  return out.str();
}

std::string json_text(const BifuzzySet& s) {
  std::ostringstream out;
  serialize_json(s, out);
  return out.str();
}

template <typename Fn>
ParseError capture(Fn&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected ParseError");
  return ParseError("unreachable", 0);
}

}  // namespace

TEST_CASE("labels are validated and deduplicated on insert") {
  BifuzzySet s("demo");
  CHECK(s.name() == "demo");
  CHECK(s.empty());
  s.insert("alpha-1", BifuzzyValue(0.3, 0.2));
  s.insert("alpha.2", BifuzzyValue(0.1, 0.1));
  s.insert("Z_9", BifuzzyValue(1, 0));
  CHECK(s.size() == 3);
  CHECK_THROWS_AS(s.insert("alpha-1", BifuzzyValue(0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(s.insert("", BifuzzyValue(0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(s.insert("has space", BifuzzyValue(0, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(s.insert("comma,", BifuzzyValue(0, 0)),
                  std::invalid_argument);
  CHECK(s.size() == 3);

  CHECK(is_valid_label("a"));
  CHECK(is_valid_label("A-b_c.9"));
  CHECK_FALSE(is_valid_label(""));
  CHECK_FALSE(is_valid_label("a b"));
  CHECK_FALSE(is_valid_label("a\tb"));
  CHECK_FALSE(is_valid_label("caf\xc3\xa9"));
}

TEST_CASE("iteration follows byte-lexicographic label order") {
  BifuzzySet s;
  s.insert("zeta", BifuzzyValue(0, 0));
  s.insert("Alpha", BifuzzyValue(0, 0));
  s.insert("alpha", BifuzzyValue(0, 0));
  s.insert("alpha2", BifuzzyValue(0, 0));
  std::vector<std::string> labels;
  for (const auto& [label, value] : s.elements()) labels.push_back(label);
  CHECK(labels == std::vector<std::string>{"Alpha", "alpha", "alpha2", "zeta"});
}

TEST_CASE("csv parsing accepts rows in any order and tolerates CRLF") {
  const BifuzzySet s = parse_csv_text(
      "label,mu,nu\r\n"
      "b,0.25,0.5\r\n"
      "a,1,0\n");
  CHECK(s.size() == 2);
  CHECK(s.elements().at("a").mu() == 1.0);
  CHECK(s.elements().at("b").mu() == 0.25);
  CHECK(s.elements().at("b").nu() == 0.5);
  CHECK(s.name().empty());

  // Header alone is the empty set.
  CHECK(parse_csv_text("label,mu,nu\n").empty());
  CHECK(parse_csv_text("label,mu,nu").empty());
}

TEST_CASE("csv parse errors carry the offending line") {
  const ParseError header = capture([] { parse_csv_text("mu,nu,label\na,0,0\n"); });
  CHECK(std::string(header.what()) == "missing 'label,mu,nu' header, line 1");
  CHECK(header.line() == 1);

  const ParseError empty = capture([] { parse_csv_text(""); });
  CHECK(std::string(empty.what()) == "missing 'label,mu,nu' header, line 1");

  const ParseError range =
      capture([] { parse_csv_text("label,mu,nu\na,1.5,0\n"); });
  CHECK(std::string(range.what()) == "mu out of range, line 2");
  CHECK(range.line() == 2);

  const ParseError range_nu =
      capture([] { parse_csv_text("label,mu,nu\na,0,0\nb,0,-0.1\n"); });
  CHECK(std::string(range_nu.what()) == "nu out of range, line 3");

  const ParseError fields =
      capture([] { parse_csv_text("label,mu,nu\na,0\n"); });
  CHECK(std::string(fields.what()) ==
        "expected three comma-separated fields, line 2");

  const ParseError extra =
      capture([] { parse_csv_text("label,mu,nu\na,0,0,0\n"); });
  CHECK(std::string(extra.what()) ==
        "expected three comma-separated fields, line 2");

  const ParseError bad_mu =
      capture([] { parse_csv_text("label,mu,nu\na,zero,0\n"); });
  CHECK(std::string(bad_mu.what()) == "malformed mu, line 2");

  const ParseError bad_nu =
      capture([] { parse_csv_text("label,mu,nu\na,0,0.5.5\n"); });
  CHECK(std::string(bad_nu.what()) == "malformed nu, line 2");

  const ParseError nan_mu =
      capture([] { parse_csv_text("label,mu,nu\na,nan,0\n"); });
  CHECK(std::string(nan_mu.what()) == "malformed mu, line 2");

  const ParseError bad_label =
      capture([] { parse_csv_text("label,mu,nu\nbad label,0,0\n"); });
  CHECK(std::string(bad_label.what()) == "invalid label 'bad label', line 2");

  const ParseError dup =
      capture([] { parse_csv_text("label,mu,nu\na,0,0\na,1,0\n"); });
  CHECK(std::string(dup.what()) == "duplicate label 'a', line 3");
}

TEST_CASE("csv serialization is canonical") {
  CHECK(csv_text(BifuzzySet()) == "label,mu,nu\n");

  BifuzzySet s;
  s.insert("x", BifuzzyValue(0.5, 0.5));
  CHECK(csv_text(s) == "label,mu,nu\nx,0.5,0.5\n");

  BifuzzySet two;
  two.insert("b", BifuzzyValue(0.1, 0));
  two.insert("a", BifuzzyValue(1, 0.25));
  CHECK(csv_text(two) == "label,mu,nu\na,1,0.25\nb,0.1,0\n");
}

TEST_CASE("csv round-trips byte-identically for random sets") {
  Lcg rng;
  for (int set_no = 0; set_no < 100; ++set_no) {
    BifuzzySet s;
    const int n = 1 + static_cast<int>(rng.next() * 12);
    for (int k = 0; k < n; ++k) {
      s.insert("item-" + std::to_string(set_no) + "." + std::to_string(k),
               BifuzzyValue(rng.next(), rng.next()));
    }
    const std::string text = csv_text(s);
    const BifuzzySet back = parse_csv_text(text);
    CHECK(back == s);
    CHECK(csv_text(back) == text);
  }
}

TEST_CASE("json round-trips name, labels, and exact values") {
  BifuzzySet s("survey");
  s.insert("q1", BifuzzyValue(0.3, 0.2));
  s.insert("q2", BifuzzyValue(1.0 / 3.0, 0.1));
  const std::string text = json_text(s);
  std::istringstream in(text);
  const BifuzzySet back = parse_json(in);
  CHECK(back == s);
  CHECK(back.name() == "survey");
  CHECK(back.elements().at("q1").mu() == 0.3);
  CHECK(back.elements().at("q2").mu() == 1.0 / 3.0);
  CHECK(json_text(back) == text);

  const std::string empty_text = json_text(BifuzzySet("void"));
  std::istringstream ein(empty_text);
  const BifuzzySet eback = parse_json(ein);
  CHECK(eback.empty());
  CHECK(eback.name() == "void");
}

TEST_CASE("json parsing validates structure and ranges") {
  auto parse_text = [](const std::string& text) {
    std::istringstream in(text);
    return parse_json(in);
  };

  const BifuzzySet ok = parse_text(
      R"({"name": "s", "elements": {"a": {"mu": 0.3, "nu": 0.2}}})");
  CHECK(ok.size() == 1);
  CHECK(ok.elements().at("a").mu() == 0.3);
  CHECK(ok.elements().at("a").nu() == 0.2);

  CHECK_THROWS_AS(parse_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_text("[]"), ParseError);
  CHECK_THROWS_AS(parse_text(R"({"name": "s"})"), ParseError);
  CHECK_THROWS_AS(parse_text(R"({"elements": {}})"), ParseError);
  CHECK_THROWS_AS(parse_text(R"({"name": 3, "elements": {}})"), ParseError);
  CHECK_THROWS_AS(parse_text(R"({"name": "s", "elements": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_text(R"({"name": "s", "elements": {"a": {"mu": 0.3}}})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_text(
          R"({"name": "s", "elements": {"a": {"mu": "x", "nu": 0.2}}})"),
      ParseError);

  const ParseError range = capture([&] {
    parse_text(R"({"name": "s", "elements": {"a": {"mu": 2, "nu": 0}}})");
  });
  CHECK(std::string(range.what()) == "mu out of range");
  CHECK(range.line() == 0);

  const ParseError label = capture([&] {
    parse_text(R"({"name": "s", "elements": {"a b": {"mu": 0, "nu": 0}}})");
  });
  CHECK(std::string(label.what()) == "invalid label 'a b'");
}
