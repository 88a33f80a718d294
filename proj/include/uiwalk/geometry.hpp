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

#ifndef UIWALK_GEOMETRY_HPP
#define UIWALK_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace uiwalk {

struct ScreenSize {
    int width = 720;
    int height = 1280;

    friend bool operator==(const ScreenSize&, const ScreenSize&) = default;
};

inline constexpr ScreenSize kDefaultScreen{720, 1280};

/// Pixel rectangle [x1,y1][x2,y2], origin top-left, x2/y2 exclusive.
struct BoundingBox {
    int x1 = 0;
    int y1 = 0;
    int x2 = 0;
    int y2 = 0;

    int width() const { return x2 - x1; }
    int height() const { return y2 - y1; }
    std::int64_t area() const { return static_cast<std::int64_t>(width()) * height(); }

    // Doubled center coordinates keep half-pixel centers exact in integers.
    int center_x2() const { return x1 + x2; }
    int center_y2() const { return y1 + y2; }

    bool valid() const { return 0 <= x1 && x1 <= x2 && 0 <= y1 && y1 <= y2; }
    bool within(ScreenSize screen) const {
        return valid() && x2 <= screen.width && y2 <= screen.height;
    }

    friend auto operator<=>(const BoundingBox&, const BoundingBox&) = default;
};

/// Formats as `[x1,y1][x2,y2]`.
std::string format_bounds(const BoundingBox& box);

/// Parses the bracket form `[x1,y1][x2,y2]`; throws MalformedBounds.
BoundingBox parse_bounds(std::string_view text);

}  // namespace uiwalk

#endif  // UIWALK_GEOMETRY_HPP
