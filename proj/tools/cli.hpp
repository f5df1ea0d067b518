/*
   Copyright 2026 The libual Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UAL_TOOLS_CLI_HPP
#define UAL_TOOLS_CLI_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace ual::cli {

enum class Status { Ok = 0, ValidationError = 1, InputError = 2, BudgetExceeded = 3 };

struct CommandResult {
  Status status = Status::Ok;
  nlohmann::json payload = nlohmann::json::object();
  std::vector<std::string> diagnostics;
  /// Set for --help; printed instead of the JSON envelope.
  std::string help;
  /// Path the envelope was written to, if --out was given.
  std::string written_to;

  int exit_code() const { return static_cast<int>(status); }
  std::string status_name() const;
  nlohmann::json envelope() const;
  /// Pretty-printed envelope followed by a newline.
  std::string render() const;
};

/// args excludes the program name. The budget comes from UAL_BUDGET when set.
CommandResult run(const std::vector<std::string>& args);

}  // namespace ual::cli

#endif  // UAL_TOOLS_CLI_HPP
