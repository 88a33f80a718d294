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

#include "uiwalk/hierarchy.hpp"

#include <expat.h>

#include <algorithm>
#include <memory>
#include <optional>
#include <string>

#include "uiwalk/errors.hpp"
#include "uiwalk/text.hpp"

namespace uiwalk {

namespace {

struct Frame {
    std::optional<BoundingBox> bounds;
    bool clickable = false;  // attribute or inherited from a same-bounds ancestor
    std::optional<std::size_t> element;
};

struct ParseState {
    std::vector<Frame> stack;
    std::vector<Element> elements;
    std::vector<bool> dropped;
    std::optional<ScreenSize> screen;
    std::optional<Error> error;
    XML_Parser parser = nullptr;
};

struct AttributeView {
    std::string_view text;
    std::string_view content_desc;
    std::string_view cls;
    std::string_view bounds;
    bool has_bounds = false;
    bool clickable = false;
    bool scrollable = false;
    bool focusable = false;
};

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

BoundingBox clamp_to(const BoundingBox& b, ScreenSize screen) {
    return BoundingBox{std::clamp(b.x1, 0, screen.width), std::clamp(b.y1, 0, screen.height),
                       std::clamp(b.x2, 0, screen.width), std::clamp(b.y2, 0, screen.height)};
}

void fail(ParseState& st, Error err) {
    if (!st.error) {
        st.error = std::move(err);
    }
    XML_StopParser(st.parser, XML_FALSE);
}

void on_start(void* user, const XML_Char* tag, const XML_Char** attrs) {
    auto& st = *static_cast<ParseState*>(user);
    if (st.error) {
        return;
    }
    AttributeView a;
    a.cls = tag;
    for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
        std::string_view key = attrs[i];
        std::string_view value = attrs[i + 1];
        if (key == "text") a.text = value;
        else if (key == "content-desc") a.content_desc = value;
        else if (key == "class") a.cls = value;
        else if (key == "bounds") { a.bounds = value; a.has_bounds = true; }
        else if (key == "clickable") a.clickable = value == "true";
        else if (key == "scrollable") a.scrollable = value == "true";
        else if (key == "focusable") a.focusable = value == "true";
    }

    Frame frame;
    if (a.has_bounds) {
        BoundingBox raw;
        try {
            raw = parse_bounds(a.bounds);
        } catch (const Error& e) {
            fail(st, e);
            return;
        }
        if (!st.screen) {
            st.screen = ScreenSize{std::max(raw.x2, 1), std::max(raw.y2, 1)};
        }
        BoundingBox box = clamp_to(raw, *st.screen);
        if (!box.valid()) {
            fail(st, Error(ErrorCode::MalformedBounds, "inverted bounds " + std::string(a.bounds)));
            return;
        }
        frame.bounds = box;
        frame.clickable = a.clickable;

        std::string name = collapse_whitespace(a.text);
        if (name.empty()) {
            name = collapse_whitespace(a.content_desc);
        }
        bool editable = ends_with(a.cls, "EditText") && a.focusable;

        bool inherits_click = false;
        for (auto& ancestor : st.stack) {
            if (ancestor.clickable && ancestor.bounds && *ancestor.bounds == box) {
                inherits_click = true;
            }
        }

        if (!name.empty() || a.scrollable) {
            ElementKind kind = ElementKind::Static;
            if (editable) kind = ElementKind::Editable;
            else if (a.scrollable) kind = ElementKind::Scrollable;
            else if (a.clickable || inherits_click) kind = ElementKind::Clickable;

            // Deepest node wins over clickable same-bounds wrappers.
            for (auto& ancestor : st.stack) {
                if (ancestor.clickable && ancestor.bounds && *ancestor.bounds == box &&
                    ancestor.element) {
                    st.dropped[*ancestor.element] = true;
                    ancestor.element.reset();
                }
            }
            frame.element = st.elements.size();
            st.elements.push_back(Element{std::move(name), box, kind});
            st.dropped.push_back(false);
        }
        frame.clickable = a.clickable || inherits_click;
    }
    st.stack.push_back(std::move(frame));
}

void on_end(void* user, const XML_Char*) {
    auto& st = *static_cast<ParseState*>(user);
    if (!st.stack.empty()) {
        st.stack.pop_back();
    }
}

}  // namespace

ParsedHierarchy parse_hierarchy(std::string_view doc) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate("UTF-8"), &XML_ParserFree);
    ParseState st;
    st.parser = parser.get();
    XML_SetUserData(parser.get(), &st);
    XML_SetElementHandler(parser.get(), &on_start, &on_end);

    XML_Status status = XML_Parse(parser.get(), doc.data(), static_cast<int>(doc.size()), XML_TRUE);
    if (st.error) {
        throw *st.error;
    }
    if (status != XML_STATUS_OK) {
        throw Error(ErrorCode::MalformedDocument,
                    std::string(XML_ErrorString(XML_GetErrorCode(parser.get()))) + " at line " +
                        std::to_string(XML_GetCurrentLineNumber(parser.get())));
    }

    ParsedHierarchy out;
    out.screen = st.screen.value_or(kDefaultScreen);
    for (std::size_t i = 0; i < st.elements.size(); ++i) {
        if (!st.dropped[i]) {
            out.elements.push_back(std::move(st.elements[i]));
        }
    }
    return out;
}

std::vector<Action> action_space(std::span<const Element> elements) {
    std::vector<Action> actions;
    for (const auto& e : elements) {
        switch (e.kind) {
            case ElementKind::Clickable:
                actions.push_back(make_click(e.name, e.bound));
                break;
            case ElementKind::Editable:
                actions.push_back(make_input(e.name, e.bound));
                break;
            case ElementKind::Scrollable:
                for (auto dir : kScrollDirections) {
                    actions.push_back(make_scroll(e.bound, dir));
                }
                break;
            case ElementKind::Static:
                break;
        }
    }
    return actions;
}

}  // namespace uiwalk
