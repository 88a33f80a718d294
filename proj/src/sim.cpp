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

#include "uiwalk/sim.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

#include "uiwalk/errors.hpp"
#include "uiwalk/hierarchy.hpp"

namespace uiwalk {

using nlohmann::json;

namespace {

void append_escaped(std::string& out, std::string_view value) {
    for (char c : value) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\n': out += "&#10;"; break;
            default: out += c;
        }
    }
}

void append_attr(std::string& out, std::string_view key, std::string_view value) {
    out += ' ';
    out += key;
    out += "=\"";
    append_escaped(out, value);
    out += '"';
}

const char* flag(bool v) { return v ? "true" : "false"; }

// FNV-1a; stable across platforms so screenshots are reproducible.
Rgb color_for(std::string_view name) {
    std::uint32_t h = 2166136261u;
    for (char c : name) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 16777619u;
    }
    return Rgb{static_cast<std::uint8_t>(h >> 16), static_cast<std::uint8_t>(h >> 8),
               static_cast<std::uint8_t>(h)};
}

Rgb rgb_from_json(const json& v) {
    auto c = v.get<std::vector<int>>();
    if (c.size() != 3) {
        throw Error(ErrorCode::InvalidSpec, "color must be [r,g,b]");
    }
    return Rgb{static_cast<std::uint8_t>(c[0]), static_cast<std::uint8_t>(c[1]),
               static_cast<std::uint8_t>(c[2])};
}

json rgb_to_json(Rgb c) { return json::array({c.r, c.g, c.b}); }

SimWidget widget_from_json(const json& w) {
    SimWidget out;
    out.text = w.value("text", "");
    out.content_desc = w.value("content_desc", "");
    out.cls = w.value("class", out.cls);
    out.resource_id = w.value("resource_id", "");
    out.bounds = parse_bounds(w.at("bounds").get<std::string>());
    out.clickable = w.value("clickable", false);
    out.scrollable = w.value("scrollable", false);
    out.focusable = w.value("focusable", false);
    return out;
}

// Transition key that accepts any typed text.
std::string wildcard_key(const Action& action) {
    const auto& in = std::get<InputAction>(action.variant);
    return "input(" + in.name + ", " + format_bounds(in.bound) + ", *)";
}

}  // namespace

std::string render_hierarchy(std::span<const SimWidget> widgets, std::string_view package) {
    std::string out = "<?xml version='1.0' encoding='UTF-8' standalone='yes' ?>\n<hierarchy rotation=\"0\">\n";
    out += "  <node index=\"0\" text=\"\" resource-id=\"\" class=\"android.widget.FrameLayout\"";
    append_attr(out, "package", package);
    out += " content-desc=\"\" clickable=\"false\" focusable=\"false\" scrollable=\"false\" bounds=\"";
    out += format_bounds(BoundingBox{0, 0, kDefaultScreen.width, kDefaultScreen.height});
    out += "\">\n";
    for (std::size_t i = 0; i < widgets.size(); ++i) {
        const auto& w = widgets[i];
        out += "    <node";
        append_attr(out, "index", std::to_string(i));
        append_attr(out, "text", w.text);
        append_attr(out, "resource-id", w.resource_id);
        append_attr(out, "class", w.cls);
        append_attr(out, "package", package);
        append_attr(out, "content-desc", w.content_desc);
        append_attr(out, "clickable", flag(w.clickable));
        append_attr(out, "focusable", flag(w.focusable));
        append_attr(out, "scrollable", flag(w.scrollable));
        append_attr(out, "bounds", format_bounds(w.bounds));
        out += " />\n";
    }
    out += "  </node>\n</hierarchy>\n";
    return out;
}

Raster render_state(const SimulatedState& state) {
    RasterCanvas canvas(kDefaultScreen.width, kDefaultScreen.height, state.background);
    for (const auto& e : parse_hierarchy(state.hierarchy).elements) {
        if (!e.name.empty()) {
            canvas.fill(e.bound, color_for(e.name));
        }
    }
    for (const auto& [box, color] : state.rects) {
        canvas.fill(box, color);
    }
    return canvas.render();
}

void SimulatedAppSpec::validate() const {
    if (app.empty()) {
        throw Error(ErrorCode::InvalidSpec, "spec has no app name");
    }
    if (!states.contains(start)) {
        throw Error(ErrorCode::InvalidSpec, "start state '" + start + "' is not declared");
    }
    for (const auto& [key, to] : transitions) {
        if (!states.contains(key.first)) {
            throw Error(ErrorCode::InvalidSpec, "transition from undeclared state '" + key.first + "'");
        }
        if (to != kExternalState && !states.contains(to)) {
            throw Error(ErrorCode::InvalidSpec, "transition to undeclared state '" + to + "'");
        }
    }
    std::set<std::string> seen;
    for (const auto& group : alias_groups) {
        for (const auto& s : group) {
            if (!states.contains(s)) {
                throw Error(ErrorCode::InvalidSpec, "alias group names undeclared state '" + s + "'");
            }
            if (!seen.insert(s).second) {
                throw Error(ErrorCode::InvalidSpec, "state '" + s + "' is in two alias groups");
            }
        }
    }
}

const std::string* SimulatedAppSpec::target(const std::string& state, const Action& action) const {
    auto it = transitions.find({state, to_string(action)});
    if (it == transitions.end() && action.kind() == ActionKind::Input) {
        it = transitions.find({state, wildcard_key(action)});
    }
    return it == transitions.end() ? nullptr : &it->second;
}

SimulatedAppSpec SimulatedAppSpec::from_json(const json& doc) {
    SimulatedAppSpec spec;
    try {
        spec.app = doc.at("app").get<std::string>();
        spec.start = doc.at("start").get<std::string>();
        spec.keywords = doc.value("keywords", std::vector<std::string>{});
        for (const auto& [id, s] : doc.at("states").items()) {
            SimulatedState state;
            if (s.contains("hierarchy")) {
                state.hierarchy = s.at("hierarchy").get<std::string>();
            } else {
                std::vector<SimWidget> widgets;
                for (const auto& w : s.at("elements")) {
                    widgets.push_back(widget_from_json(w));
                }
                state.hierarchy = render_hierarchy(widgets, s.value("package", "com.example.sim"));
            }
            if (s.contains("background")) {
                state.background = rgb_from_json(s.at("background"));
            }
            for (const auto& r : s.value("rects", json::array())) {
                state.rects.emplace_back(parse_bounds(r.at("bounds").get<std::string>()),
                                         rgb_from_json(r.at("color")));
            }
            spec.states.emplace(id, std::move(state));
        }
        for (const auto& t : doc.value("transitions", json::array())) {
            std::string action = t.at("action").get<std::string>();
            parse_action(action);
            spec.transitions[{t.at("from").get<std::string>(), action}] = t.at("to").get<std::string>();
        }
        spec.alias_groups = doc.value("alias_groups", std::vector<std::vector<std::string>>{});
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidSpec, e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidSpec) throw;
        throw Error(ErrorCode::InvalidSpec, e.what());
    }
    spec.validate();
    return spec;
}

json SimulatedAppSpec::to_json() const {
    json doc;
    doc["app"] = app;
    doc["start"] = start;
    if (!keywords.empty()) doc["keywords"] = keywords;
    json js = json::object();
    for (const auto& [id, s] : states) {
        json rects = json::array();
        for (const auto& [box, color] : s.rects) {
            rects.push_back({{"bounds", format_bounds(box)}, {"color", rgb_to_json(color)}});
        }
        js[id] = {{"hierarchy", s.hierarchy}, {"background", rgb_to_json(s.background)}, {"rects", rects}};
    }
    doc["states"] = std::move(js);
    json ts = json::array();
    for (const auto& [key, to] : transitions) {
        ts.push_back({{"from", key.first}, {"action", key.second}, {"to", to}});
    }
    doc["transitions"] = std::move(ts);
    doc["alias_groups"] = alias_groups;
    return doc;
}

SimulatedAppSpec SimulatedAppSpec::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidSpec, "cannot read spec file " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidSpec, path.string() + ": " + e.what());
    }
    return from_json(doc);
}

json simulated_spec_skeleton() {
    json home_elements = json::array({
        {{"text", "Edit"}, {"class", "android.widget.Button"}, {"bounds", "[40,200][680,300]"}, {"clickable", true}},
        {{"text", "Search"}, {"class", "android.widget.EditText"}, {"bounds", "[40,60][680,140]"},
         {"clickable", true}, {"focusable", true}},
    });
    json edit_elements = json::array({
        {{"text", "Edit mode"}, {"bounds", "[40,60][680,140]"}},
        {{"text", "Back"}, {"class", "android.widget.Button"}, {"bounds", "[40,1160][200,1240]"}, {"clickable", true}},
    });
    return {
        {"app", "Demo0"},
        {"start", "home"},
        {"keywords", {"music", "news", "weather", "maps", "video", "books", "travel", "food", "sports", "games"}},
        {"states",
         {{"home", {{"elements", home_elements}, {"background", {255, 255, 255}}}},
          {"edit", {{"elements", edit_elements}, {"background", {20, 20, 60}}}}}},
        {"transitions",
         json::array({{{"from", "home"}, {"action", "click(Edit, [40,200][680,300])"}, {"to", "edit"}},
                      {{"from", "home"}, {"action", "input(Search, [40,60][680,140], *)"}, {"to", "edit"}},
                      {{"from", "edit"}, {"action", "click(Back, [40,1160][200,1240])"}, {"to", "home"}}})},
        {"alias_groups", json::array()},
    };
}

SimulatedDriver::SimulatedDriver(SimulatedAppSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    current_ = spec_.start;
}

void SimulatedDriver::relaunch() { current_ = spec_.start; }

UiPage SimulatedDriver::capture() {
    if (current_ == kExternalState) {
        return UiPage();
    }
    auto it = rendered_.find(current_);
    if (it == rendered_.end()) {
        const auto& state = spec_.states.at(current_);
        it = rendered_.emplace(current_, UiPage(render_state(state), state.hierarchy)).first;
    }
    return it->second;
}

ActionOutcome SimulatedDriver::perform(const Action& action) {
    check_on_screen(action, screen());
    const std::string* to = spec_.target(current_, action);
    if (to == nullptr || *to == current_) {
        return ActionOutcome::Unchanged;
    }
    current_ = *to;
    return current_ == kExternalState ? ActionOutcome::External : ActionOutcome::Transitioned;
}

void SimulatedDriver::set_state_hierarchy(const std::string& state, std::string hierarchy) {
    spec_.states.at(state).hierarchy = std::move(hierarchy);
    rendered_.erase(state);
}

}  // namespace uiwalk
