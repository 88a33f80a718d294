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

#ifndef UIWALK_DRIVER_HPP
#define UIWALK_DRIVER_HPP

#include "uiwalk/identity.hpp"
#include "uiwalk/page.hpp"

namespace uiwalk {

enum class ActionOutcome { Transitioned, Unchanged, External };

std::string_view to_string(ActionOutcome outcome);

/// One device session. Not thread-safe; one explorer owns one driver.
class Driver {
public:
    virtual ~Driver() = default;

    /// Restart the app on its homepage.
    virtual void relaunch() = 0;

    /// Current screenshot and hierarchy. Throws SessionLost.
    virtual UiPage capture() = 0;

    /// Throws SessionLost or OffScreenAction.
    virtual ActionOutcome perform(const Action& action) = 0;

    virtual ScreenSize screen() const { return kDefaultScreen; }
};

/// Throws OffScreenAction when the bound leaves the screen.
void check_on_screen(const Action& action, ScreenSize screen);

/// Relaunches, then re-executes the trace, checking every capture against
/// the stored snapshot. Returns the final capture. Throws
/// TraceReplayDivergence with the first snapshot index that no longer
/// matches (0 = homepage).
UiPage replay(Driver& driver, const ActionTrace& trace, const IdentityThresholds& t = {});

}  // namespace uiwalk

#endif  // UIWALK_DRIVER_HPP
