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

#ifndef UIWALK_ACTION_HPP
#define UIWALK_ACTION_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "uiwalk/geometry.hpp"

namespace uiwalk {

enum class ElementKind { Clickable, Editable, Scrollable, Static };

std::string_view to_string(ElementKind kind);

/// A named on-screen widget. Scroll containers may carry an empty name.
struct Element {
    std::string name;
    BoundingBox bound;
    ElementKind kind = ElementKind::Static;

    friend auto operator<=>(const Element&, const Element&) = default;
};

enum class ScrollDirection { Up, Down, Left, Right };

inline constexpr std::array<ScrollDirection, 4> kScrollDirections{
    ScrollDirection::Up, ScrollDirection::Down, ScrollDirection::Left, ScrollDirection::Right};

std::string_view to_string(ScrollDirection dir);
std::optional<ScrollDirection> parse_scroll_direction(std::string_view text);

enum class ActionKind { Click, Input, Scroll };

std::string_view to_string(ActionKind kind);

struct ClickAction {
    std::string name;
    BoundingBox bound;
    friend auto operator<=>(const ClickAction&, const ClickAction&) = default;
};

struct ScrollAction {
    BoundingBox bound;
    ScrollDirection direction = ScrollDirection::Up;
    friend auto operator<=>(const ScrollAction&, const ScrollAction&) = default;
};

struct InputAction {
    std::string name;
    BoundingBox bound;
    std::string text;
    friend auto operator<=>(const InputAction&, const InputAction&) = default;
};

using ActionVariant = std::variant<ClickAction, InputAction, ScrollAction>;

using ActionId = std::uint64_t;

struct Action {
    ActionVariant variant;
    /// Assigned when the explorer schedules the action; unique per app graph.
    std::optional<ActionId> id;

    ActionKind kind() const { return static_cast<ActionKind>(variant.index()); }
    const BoundingBox& bound() const;

    friend bool operator==(const Action&, const Action&) = default;
};

inline Action make_click(std::string name, BoundingBox bound) {
    return Action{ClickAction{std::move(name), bound}, std::nullopt};
}
inline Action make_scroll(BoundingBox bound, ScrollDirection dir) {
    return Action{ScrollAction{bound, dir}, std::nullopt};
}
inline Action make_input(std::string name, BoundingBox bound, std::string text = {}) {
    return Action{InputAction{std::move(name), bound, std::move(text)}, std::nullopt};
}

/// Canonical text form, without the id:
///   click(name, [x1,y1][x2,y2])
///   scroll([x1,y1][x2,y2],dir)
///   input(name, [x1,y1][x2,y2], text)
std::string to_string(const Action& action);

/// Inverse of to_string(Action); throws MalformedAction.
Action parse_action(std::string_view text);

}  // namespace uiwalk

#endif  // UIWALK_ACTION_HPP
