/*
 * Copyright 2026 The Orbitlab Authors
 *
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

#ifndef ORBITLAB_CLI_HPP
#define ORBITLAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace orbitlab {

/// Entry point of the orbitlab tool, callable in-process for tests.
/// `args` excludes the program name. Exit codes: 0 success, 2 input
/// validation failure, 3 theorem-hypothesis failure, 4 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace orbitlab

#endif
