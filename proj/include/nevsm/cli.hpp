// Copyright 2026 The nevsm Authors.
//
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

#ifndef NEVSM_CLI_HPP_
#define NEVSM_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace nevsm::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDataError = 1;
inline constexpr int kUsageError = 2;

// Runs the `nevsm` command line. args[0] is the program name. Diagnostics
// go to `err` as one line: "error: stage=<stage>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace nevsm::cli

#endif  // NEVSM_CLI_HPP_
