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

#ifndef ORBITLAB_ERRORS_HPP
#define ORBITLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitlab {

/// Bad user input: malformed files, dimension mismatches, unsupported
/// parameter ranges. Mapped to exit code 2 by the CLI.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested analysis whose mathematical hypotheses are not met
/// (e.g. a density report on a non-flat orbit). Exit code 3.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

/// Cross-checked invariants disagreeing; indicates a bug, never expected.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace orbitlab

#endif
