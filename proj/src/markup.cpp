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

#include "uiwalk/markup.hpp"

#include <regex>

#include "uiwalk/errors.hpp"

namespace uiwalk {

namespace {

constexpr std::string_view kRefOpen = "<ref>";
constexpr std::string_view kRefClose = "</ref><box>";
constexpr std::string_view kBoxClose = "</box>";

const std::regex& paren_box_re() {
    static const std::regex re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*,\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    return re;
}

const std::regex& bracket_box_re() {
    static const std::regex re(R"(\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
    return re;
}

const std::regex& point_re() {
    static const std::regex re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
    return re;
}

BoundingBox box_from(const std::cmatch& m) {
    return BoundingBox{std::stoi(m[1].str()), std::stoi(m[2].str()), std::stoi(m[3].str()),
                       std::stoi(m[4].str())};
}

}  // namespace

std::string format_paren_box(const BoundingBox& box) {
    return "(" + std::to_string(box.x1) + "," + std::to_string(box.y1) + "),(" +
           std::to_string(box.x2) + "," + std::to_string(box.y2) + ")";
}

std::string format_ref_box(const RefBox& item) {
    std::string out;
    out += kRefOpen;
    out += item.name;
    out += kRefClose;
    out += format_paren_box(item.box);
    out += kBoxClose;
    return out;
}

RefBox parse_ref_box(std::string_view text) {
    auto bad = [&]() -> Error {
        return Error(ErrorCode::MalformedMarkup, "not a ref/box item: '" + std::string(text) + "'");
    };
    if (text.substr(0, kRefOpen.size()) != kRefOpen || text.size() < kBoxClose.size() ||
        text.substr(text.size() - kBoxClose.size()) != kBoxClose) {
        throw bad();
    }
    std::size_t mid = text.rfind(kRefClose);
    if (mid == std::string_view::npos || mid < kRefOpen.size()) {
        throw bad();
    }
    std::string_view name = text.substr(kRefOpen.size(), mid - kRefOpen.size());
    std::string_view box_text = text.substr(mid + kRefClose.size(),
                                            text.size() - kBoxClose.size() - mid - kRefClose.size());
    std::cmatch m;
    if (!std::regex_match(box_text.begin(), box_text.end(), m, paren_box_re())) {
        throw bad();
    }
    return RefBox{std::string(name), box_from(m)};
}

std::vector<RefBox> parse_ref_box_lines(std::string_view text) {
    std::vector<RefBox> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty()) {
            items.push_back(parse_ref_box(line));
        }
        start = end + 1;
    }
    return items;
}

std::optional<BoundingBox> find_box(std::string_view text) {
    std::cmatch paren;
    std::cmatch bracket;
    bool has_paren = std::regex_search(text.begin(), text.end(), paren, paren_box_re());
    bool has_bracket = std::regex_search(text.begin(), text.end(), bracket, bracket_box_re());
    if (has_paren && (!has_bracket || paren.position(0) <= bracket.position(0))) {
        return box_from(paren);
    }
    if (has_bracket) {
        return box_from(bracket);
    }
    std::cmatch point;
    if (std::regex_search(text.begin(), text.end(), point, point_re())) {
        int x = std::stoi(point[1].str());
        int y = std::stoi(point[2].str());
        return BoundingBox{x, y, x, y};
    }
    return std::nullopt;
}

}  // namespace uiwalk
