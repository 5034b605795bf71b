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

#ifndef PENTA_CLI_HPP
#define PENTA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace penta {

/// Runs the command line tool in process. args excludes the program
/// name. Returns the process exit code: 0 success, 1 runtime failure
/// (bad data, math domain errors, I/O), 2 usage error, 3 verification
/// found failing laws.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace penta

#endif  // PENTA_CLI_HPP
