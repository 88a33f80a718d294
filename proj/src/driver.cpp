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

#include "uiwalk/driver.hpp"

#include "uiwalk/errors.hpp"

namespace uiwalk {

std::string_view to_string(ActionOutcome outcome) {
    switch (outcome) {
        case ActionOutcome::Transitioned: return "transitioned";
        case ActionOutcome::Unchanged: return "unchanged";
        case ActionOutcome::External: return "external";
    }
    return "transitioned";
}

void check_on_screen(const Action& action, ScreenSize screen) {
    if (!action.bound().within(screen)) {
        throw Error(ErrorCode::OffScreenAction, to_string(action));
    }
}

UiPage replay(Driver& driver, const ActionTrace& trace, const IdentityThresholds& t) {
    driver.relaunch();
    UiPage current = driver.capture();
    if (!pages_similar(current, trace.root, t)) {
        throw TraceReplayDivergence(0, "homepage no longer matches");
    }
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& step = trace.steps[i];
        if (driver.perform(step.action) == ActionOutcome::External) {
            throw TraceReplayDivergence(i + 1, "left the app on " + to_string(step.action));
        }
        current = driver.capture();
        if (!pages_similar(current, step.page, t)) {
            throw TraceReplayDivergence(i + 1, "page after " + to_string(step.action) + " changed");
        }
    }
    return current;
}

}  // namespace uiwalk
