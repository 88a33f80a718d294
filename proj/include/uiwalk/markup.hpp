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

#ifndef UIWALK_MARKUP_HPP
#define UIWALK_MARKUP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uiwalk/geometry.hpp"

namespace uiwalk {

struct RefBox {
    std::string name;
    BoundingBox box;
    friend bool operator==(const RefBox&, const RefBox&) = default;
};

/// `(x1,y1),(x2,y2)`
std::string format_paren_box(const BoundingBox& box);

/// `<ref>name</ref><box>(x1,y1),(x2,y2)</box>`
std::string format_ref_box(const RefBox& item);

/// Parses exactly one ref/box item; throws MalformedMarkup.
RefBox parse_ref_box(std::string_view text);

/// One ref/box item per line; empty text yields an empty list.
std::vector<RefBox> parse_ref_box_lines(std::string_view text);

/// First box found anywhere in free text, in either the `(x1,y1),(x2,y2)`
/// or the `[x1,y1][x2,y2]` notation. A bare point `(x,y)` becomes a
/// zero-area box.
std::optional<BoundingBox> find_box(std::string_view text);

}  // namespace uiwalk

#endif  // UIWALK_MARKUP_HPP
