/*
 * Copyright (c) 2026 The uiwalk Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef UIWALK_CLI_HPP
#define UIWALK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "uiwalk/graph.hpp"

namespace uiwalk {

/// `explore | gen-tasks | eval | stats | simulate`. Returns the exit code;
/// diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// `app=<name> nodes=.. edges=.. click=.. input=.. scroll=.. self_loops=..
/// external=.. quarantined=.. avg_trace_len=..`
std::string summary_line(const AppGraph& graph);

/// Ten non-empty lines; throws InvalidConfig naming the path.
std::vector<std::string> read_keywords(const std::string& path);

}  // namespace uiwalk

#endif  // UIWALK_CLI_HPP
