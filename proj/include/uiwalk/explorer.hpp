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

#ifndef UIWALK_EXPLORER_HPP
#define UIWALK_EXPLORER_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "uiwalk/driver.hpp"
#include "uiwalk/errors.hpp"
#include "uiwalk/graph.hpp"
#include "uiwalk/identity.hpp"

namespace uiwalk {

struct ExplorationConfig {
    std::size_t max_nodes = 200000;
    std::size_t max_depth = 8;
    std::vector<std::string> keywords;  // exactly 10
    bool input_priority = true;
    std::uint64_t rng_seed = 0;
    /// Elements never acted on (login walls, permission dialogs, ...).
    std::set<std::string> blocklist;
    IdentityThresholds thresholds;

    /// Throws InvalidConfig.
    void validate() const;
};

enum class StepVerdict { Unique, Redirect, SelfLoop, External, Quarantined };

std::string_view to_string(StepVerdict verdict);

/// One executed action, reported as it happens.
struct ProgressEvent {
    std::string node;
    ActionId action_id = 0;
    std::string action;
    StepVerdict verdict = StepVerdict::Unique;
    std::string target;
    int element_diff = 0;
    double pixel_diff = 0.0;
};

/// `{"node":...,"action_id":...,"action":...,"verdict":...,"target":...,
/// "element_diff":...,"pixel_diff":...}` on one line.
std::string format_progress(const ProgressEvent& event);

using ProgressSink = std::function<void(const ProgressEvent&)>;

/// Input actions first (when `input_priority`), each class shuffled with
/// `rng`; every input is bound to a keyword drawn uniformly from the ten.
std::vector<Action> order_actions(std::vector<Action> actions, std::span<const std::string> keywords,
                                  std::mt19937_64& rng, bool input_priority = true);

/// Raised when the device becomes unusable; carries the trace being
/// restored so the failure can be replayed by hand.
class DriverFailure : public Error {
public:
    DriverFailure(const std::string& message, ActionTrace trace)
        : Error(ErrorCode::DriverFailure, message), trace_(std::move(trace)) {}

    const ActionTrace& trace() const { return trace_; }

private:
    ActionTrace trace_;
};

/// Breadth-first walk of one app.
///
/// Each dequeued node is restored by relaunching and replaying its trace;
/// every scheduled action is executed from that state, the resulting page
/// is resolved against the graph and recorded as a new node, a redirect or
/// self-loop edge, or an edge to the external sink. Nodes whose replay
/// diverges are quarantined. Stops when the frontier empties or the graph
/// holds `max_nodes` nodes; nodes at `max_depth` are recorded but not
/// expanded.
AppGraph explore_app(Driver& driver, const std::string& app_root, const ExplorationConfig& config,
                     const ProgressSink& progress = {});

}  // namespace uiwalk

#endif  // UIWALK_EXPLORER_HPP
