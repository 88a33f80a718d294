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

#include <charconv>

#include "uiwalk/action.hpp"
#include "uiwalk/errors.hpp"
#include "uiwalk/geometry.hpp"

namespace uiwalk {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedDocument: return "MalformedDocument";
        case ErrorCode::MalformedBounds: return "MalformedBounds";
        case ErrorCode::MalformedAction: return "MalformedAction";
        case ErrorCode::MalformedMarkup: return "MalformedMarkup";
        case ErrorCode::MalformedImage: return "MalformedImage";
        case ErrorCode::EmptyIndex: return "EmptyIndex";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::UnknownPredecessor: return "UnknownPredecessor";
        case ErrorCode::UnknownTarget: return "UnknownTarget";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::CorruptArchive: return "CorruptArchive";
        case ErrorCode::VersionMismatch: return "VersionMismatch";
        case ErrorCode::MissingArchive: return "MissingArchive";
        case ErrorCode::SessionLost: return "SessionLost";
        case ErrorCode::OffScreenAction: return "OffScreenAction";
        case ErrorCode::TraceReplayDivergence: return "TraceReplayDivergence";
        case ErrorCode::DriverFailure: return "DriverFailure";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::EmptyGold: return "EmptyGold";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::IdMismatch: return "IdMismatch";
    }
    return "Unknown";
}

std::string format_bounds(const BoundingBox& box) {
    std::string out;
    out.reserve(24);
    out += '[';
    out += std::to_string(box.x1);
    out += ',';
    out += std::to_string(box.y1);
    out += "][";
    out += std::to_string(box.x2);
    out += ',';
    out += std::to_string(box.y2);
    out += ']';
    return out;
}

namespace {

// Consumes an optionally signed decimal integer at pos.
bool take_int(std::string_view text, std::size_t& pos, int& value) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) {
        return false;
    }
    pos += static_cast<std::size_t>(ptr - first);
    return true;
}

bool take_char(std::string_view text, std::size_t& pos, char c) {
    if (pos < text.size() && text[pos] == c) {
        ++pos;
        return true;
    }
    return false;
}

}  // namespace

BoundingBox parse_bounds(std::string_view text) {
    BoundingBox box;
    std::size_t pos = 0;
    bool ok = take_char(text, pos, '[') && take_int(text, pos, box.x1) &&
              take_char(text, pos, ',') && take_int(text, pos, box.y1) &&
              take_char(text, pos, ']') && take_char(text, pos, '[') &&
              take_int(text, pos, box.x2) && take_char(text, pos, ',') &&
              take_int(text, pos, box.y2) && take_char(text, pos, ']') && pos == text.size();
    if (!ok) {
        throw Error(ErrorCode::MalformedBounds, "expected [x1,y1][x2,y2], got '" + std::string(text) + "'");
    }
    return box;
}

std::string_view to_string(ElementKind kind) {
    switch (kind) {
        case ElementKind::Clickable: return "clickable";
        case ElementKind::Editable: return "editable";
        case ElementKind::Scrollable: return "scrollable";
        case ElementKind::Static: return "static";
    }
    return "static";
}

std::string_view to_string(ScrollDirection dir) {
    switch (dir) {
        case ScrollDirection::Up: return "up";
        case ScrollDirection::Down: return "down";
        case ScrollDirection::Left: return "left";
        case ScrollDirection::Right: return "right";
    }
    return "up";
}

std::optional<ScrollDirection> parse_scroll_direction(std::string_view text) {
    for (auto dir : kScrollDirections) {
        if (text == to_string(dir)) {
            return dir;
        }
    }
    return std::nullopt;
}

std::string_view to_string(ActionKind kind) {
    switch (kind) {
        case ActionKind::Click: return "click";
        case ActionKind::Input: return "input";
        case ActionKind::Scroll: return "scroll";
    }
    return "click";
}

const BoundingBox& Action::bound() const {
    return std::visit([](const auto& a) -> const BoundingBox& { return a.bound; }, variant);
}

std::string to_string(const Action& action) {
    struct Printer {
        std::string operator()(const ClickAction& a) const {
            return "click(" + a.name + ", " + format_bounds(a.bound) + ")";
        }
        std::string operator()(const ScrollAction& a) const {
            return "scroll(" + format_bounds(a.bound) + "," + std::string(to_string(a.direction)) + ")";
        }
        std::string operator()(const InputAction& a) const {
            return "input(" + a.name + ", " + format_bounds(a.bound) + ", " + a.text + ")";
        }
    };
    return std::visit(Printer{}, action.variant);
}

namespace {

[[noreturn]] void malformed_action(std::string_view text) {
    throw Error(ErrorCode::MalformedAction, "cannot parse action '" + std::string(text) + "'");
}

std::optional<BoundingBox> try_bounds(std::string_view text) {
    try {
        return parse_bounds(text);
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Length of a bracket bound starting at pos, or npos.
std::size_t bound_length_at(std::string_view text, std::size_t pos) {
    std::size_t first_close = text.find(']', pos);
    if (first_close == std::string_view::npos || first_close + 1 >= text.size() ||
        text[first_close + 1] != '[') {
        return std::string_view::npos;
    }
    std::size_t second_close = text.find(']', first_close + 1);
    if (second_close == std::string_view::npos) {
        return std::string_view::npos;
    }
    return second_close + 1 - pos;
}

}  // namespace

Action parse_action(std::string_view text) {
    auto strip = [&](std::string_view prefix) -> std::optional<std::string_view> {
        if (text.size() < prefix.size() + 1 || text.substr(0, prefix.size()) != prefix ||
            text.back() != ')') {
            return std::nullopt;
        }
        return text.substr(prefix.size(), text.size() - prefix.size() - 1);
    };

    if (auto body = strip("click(")) {
        // Names may contain commas; the bound is always the trailing field.
        std::size_t sep = body->rfind(", [");
        if (sep == std::string_view::npos) {
            malformed_action(text);
        }
        auto bound = try_bounds(body->substr(sep + 2));
        if (!bound) {
            malformed_action(text);
        }
        return make_click(std::string(body->substr(0, sep)), *bound);
    }
    if (auto body = strip("scroll(")) {
        std::size_t sep = body->rfind(',');
        if (sep == std::string_view::npos) {
            malformed_action(text);
        }
        auto bound = try_bounds(body->substr(0, sep));
        auto dir = parse_scroll_direction(body->substr(sep + 1));
        if (!bound || !dir) {
            malformed_action(text);
        }
        return make_scroll(*bound, *dir);
    }
    if (auto body = strip("input(")) {
        // Free text trails the bound, so scan for the first well-formed
        // ", [..][..], " separator from the left.
        std::size_t search = 0;
        while (true) {
            std::size_t sep = body->find(", [", search);
            if (sep == std::string_view::npos) {
                malformed_action(text);
            }
            std::size_t len = bound_length_at(*body, sep + 2);
            if (len != std::string_view::npos) {
                std::size_t after = sep + 2 + len;
                auto bound = try_bounds(body->substr(sep + 2, len));
                if (bound && body->substr(after, 2) == ", ") {
                    return make_input(std::string(body->substr(0, sep)), *bound,
                                      std::string(body->substr(after + 2)));
                }
            }
            search = sep + 1;
        }
    }
    malformed_action(text);
}

}  // namespace uiwalk
