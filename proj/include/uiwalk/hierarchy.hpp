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

#ifndef UIWALK_HIERARCHY_HPP
#define UIWALK_HIERARCHY_HPP

#include <span>
#include <string_view>
#include <vector>

#include "uiwalk/action.hpp"
#include "uiwalk/geometry.hpp"

namespace uiwalk {

/// Elements of one UIAutomator dump in depth-first document order.
struct ParsedHierarchy {
    std::vector<Element> elements;
    ScreenSize screen;
};

/// Parses a UIAutomator-style view hierarchy.
///
/// A node yields an element when it carries text or content-desc, or when
/// it is scrollable. The name is the text attribute (content-desc as the
/// fallback) with whitespace runs collapsed. Kind precedence is
/// editable > scrollable > clickable > static, where editable means an
/// `*EditText` class that is also focusable.
///
/// When a node's element has the same bounds as an enclosing clickable
/// node, only the deepest one is kept and it inherits clickability.
/// Bounds are clamped to the screen, taken from the first node's bounds.
///
/// Throws MalformedDocument for unparseable XML and MalformedBounds for a
/// `bounds` attribute outside the `[x1,y1][x2,y2]` pattern.
ParsedHierarchy parse_hierarchy(std::string_view doc);

/// Candidate actions: one click per clickable element, one input per
/// editable element (text left empty), four scrolls per scrollable element.
/// Ordered by element, then Click < Input < Scroll(up, down, left, right).
std::vector<Action> action_space(std::span<const Element> elements);

inline std::vector<Action> action_space(const ParsedHierarchy& page) {
    return action_space(page.elements);
}

}  // namespace uiwalk

#endif  // UIWALK_HIERARCHY_HPP
