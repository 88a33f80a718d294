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

#ifndef UIWALK_ERRORS_HPP
#define UIWALK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace uiwalk {

enum class ErrorCode {
    MalformedDocument,
    MalformedBounds,
    MalformedAction,
    MalformedMarkup,
    MalformedImage,
    EmptyIndex,
    DimensionMismatch,
    UnknownPredecessor,
    UnknownTarget,
    Overflow,
    CorruptArchive,
    VersionMismatch,
    MissingArchive,
    SessionLost,
    OffScreenAction,
    TraceReplayDivergence,
    DriverFailure,
    InvalidSpec,
    InvalidConfig,
    EmptyGold,
    EmptyInput,
    IdMismatch,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library is an Error carrying a code, so
// callers (and the CLI exit path) can branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

class TraceReplayDivergence : public Error {
public:
    TraceReplayDivergence(std::size_t step, const std::string& detail)
        : Error(ErrorCode::TraceReplayDivergence,
                "step " + std::to_string(step) + ": " + detail),
          step_(step) {}

    /// Snapshot index that failed to match (0 = homepage).
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace uiwalk

#endif  // UIWALK_ERRORS_HPP
