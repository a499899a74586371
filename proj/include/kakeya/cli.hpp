// Copyright 2026 The Kakeya Lab Authors
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

#ifndef KAKEYA_CLI_HPP
#define KAKEYA_CLI_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace kakeya::cli {

inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (JSON or SVG), diagnostics to `err`.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kakeya::cli

#endif  // KAKEYA_CLI_HPP
