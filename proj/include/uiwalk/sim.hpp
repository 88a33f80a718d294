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

#ifndef UIWALK_SIM_HPP
#define UIWALK_SIM_HPP

#include <filesystem>
#include <map>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "uiwalk/driver.hpp"

namespace uiwalk {

/// Widget description used to synthesize a UIAutomator document.
struct SimWidget {
    std::string text;
    std::string content_desc;
    std::string cls = "android.widget.TextView";
    std::string resource_id;
    BoundingBox bounds;
    bool clickable = false;
    bool scrollable = false;
    bool focusable = false;
};

/// Flat UIAutomator dump: one full-screen FrameLayout holding the widgets.
std::string render_hierarchy(std::span<const SimWidget> widgets, std::string_view package = "com.example.sim");

struct SimulatedState {
    std::string hierarchy;
    Rgb background{255, 255, 255};
    /// Painted after the element boxes.
    std::vector<std::pair<BoundingBox, Rgb>> rects;
};

/// Ground-truth screenshot: background, then every named element's box in a
/// color derived from its name, then the explicit rects.
Raster render_state(const SimulatedState& state);

inline constexpr std::string_view kExternalState = "__external__";

/// Deterministic app model. `transitions` maps (state, canonical action) to
/// a target state or kExternalState. An input transition whose text is `*`
/// matches any typed text.
struct SimulatedAppSpec {
    std::string app;
    std::string start;
    std::vector<std::string> keywords;
    std::map<std::string, SimulatedState> states;
    std::map<std::pair<std::string, std::string>, std::string> transitions;
    std::vector<std::vector<std::string>> alias_groups;

    /// Throws InvalidSpec on dangling references.
    void validate() const;

    /// Target of an action, or nullptr when undeclared.
    const std::string* target(const std::string& state, const Action& action) const;

    static SimulatedAppSpec from_json(const nlohmann::json& doc);
    nlohmann::json to_json() const;

    /// Throws InvalidSpec, naming the path when the file is unreadable.
    static SimulatedAppSpec load(const std::filesystem::path& path);
};

/// Starter spec printed by `uiwalk simulate`.
nlohmann::json simulated_spec_skeleton();

class SimulatedDriver : public Driver {
public:
    explicit SimulatedDriver(SimulatedAppSpec spec);

    void relaunch() override;
    UiPage capture() override;
    ActionOutcome perform(const Action& action) override;

    const std::string& current_state() const { return current_; }
    const SimulatedAppSpec& spec() const { return spec_; }

    /// Test hook: swaps a state's document, as if the app had been updated.
    void set_state_hierarchy(const std::string& state, std::string hierarchy);

private:
    SimulatedAppSpec spec_;
    std::string current_;
    std::unordered_map<std::string, UiPage> rendered_;
};

}  // namespace uiwalk

#endif  // UIWALK_SIM_HPP
