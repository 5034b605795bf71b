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

#ifndef PENTA_FORMAT_HPP
#define PENTA_FORMAT_HPP

#include <string>
#include <string_view>

namespace penta {

/// Nine significant digits, trailing zeros trimmed by %g. The locale
/// never applies, so output is stable across environments.
std::string format_sig9(double value);

/// Shortest decimal that parses back to exactly the same double.
std::string format_roundtrip(double value);

/// Strict double parser: the whole string must be consumed, the value
/// must be finite. Returns false on any deviation.
bool parse_double(std::string_view text, double& out);

}  // namespace penta

#endif  // PENTA_FORMAT_HPP
