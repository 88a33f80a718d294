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

#include "uiwalk/webdriver.hpp"

#include <httplib.h>

#include <boost/beast/core/detail/base64.hpp>
#include <fstream>

#include "uiwalk/errors.hpp"
#include "uiwalk/png.hpp"

namespace uiwalk {

using nlohmann::json;

namespace {

[[noreturn]] void lost(const std::string& message) { throw Error(ErrorCode::SessionLost, message); }

std::vector<std::uint8_t> base64_decode(const std::string& text) {
    std::string clean;
    clean.reserve(text.size());
    for (char c : text) {
        if (c != '\n' && c != '\r' && c != ' ') clean += c;
    }
    std::vector<std::uint8_t> out(boost::beast::detail::base64::decoded_size(clean.size()));
    auto [written, read] = boost::beast::detail::base64::decode(out.data(), clean.data(), clean.size());
    if (read != clean.size()) {
        lost("screenshot payload is not valid base64");
    }
    out.resize(written);
    return out;
}

json pointer_move(Point p, int duration) {
    return {{"type", "pointerMove"}, {"duration", duration}, {"origin", "viewport"}, {"x", p.x}, {"y", p.y}};
}

}  // namespace

// ---- httplib transport -----------------------------------------------------

struct HttplibTransport::Impl {
    std::unique_ptr<httplib::Client> client;
    std::string prefix;
    std::string base_url;
};

HttplibTransport::HttplibTransport(std::string base_url, int timeout_seconds) : impl_(std::make_unique<Impl>()) {
    impl_->base_url = base_url;
    auto scheme = base_url.find("://");
    auto path_start = base_url.find('/', scheme == std::string::npos ? 0 : scheme + 3);
    std::string host = base_url.substr(0, path_start);
    if (path_start != std::string::npos) {
        impl_->prefix = base_url.substr(path_start);
        while (!impl_->prefix.empty() && impl_->prefix.back() == '/') impl_->prefix.pop_back();
    }
    impl_->client = std::make_unique<httplib::Client>(host);
    impl_->client->set_connection_timeout(timeout_seconds, 0);
    impl_->client->set_read_timeout(timeout_seconds, 0);
    impl_->client->set_write_timeout(timeout_seconds, 0);
}

HttplibTransport::~HttplibTransport() = default;

HttpResponse HttplibTransport::send(const HttpRequest& request) {
    const std::string path = impl_->prefix + request.path;
    const std::string body = request.body.is_null() ? std::string("{}") : request.body.dump();
    httplib::Result result;
    if (request.method == "GET") {
        result = impl_->client->Get(path);
    } else if (request.method == "POST") {
        result = impl_->client->Post(path, body, "application/json");
    } else if (request.method == "DELETE") {
        result = impl_->client->Delete(path);
    } else {
        lost("unsupported HTTP method " + request.method);
    }
    if (!result) {
        lost(request.method + " " + impl_->base_url + request.path + ": " + httplib::to_string(result.error()));
    }
    HttpResponse response;
    response.status = result->status;
    if (!result->body.empty()) {
        try {
            response.body = json::parse(result->body);
        } catch (const json::exception&) {
            lost(request.method + " " + request.path + " returned a non-JSON body");
        }
    }
    return response;
}

// ---- cassettes -------------------------------------------------------------

json cassette_to_json(const std::vector<HttpInteraction>& interactions) {
    json list = json::array();
    for (const auto& i : interactions) {
        list.push_back({{"request", {{"method", i.request.method}, {"path", i.request.path}, {"body", i.request.body}}},
                        {"response", {{"status", i.response.status}, {"body", i.response.body}}}});
    }
    return {{"interactions", list}};
}

std::vector<HttpInteraction> cassette_from_json(const json& doc) {
    std::vector<HttpInteraction> out;
    try {
        for (const auto& i : doc.at("interactions")) {
            const auto& rq = i.at("request");
            const auto& rs = i.at("response");
            out.push_back({HttpRequest{rq.at("method").get<std::string>(), rq.at("path").get<std::string>(),
                                       rq.value("body", json())},
                           HttpResponse{rs.value("status", 200), rs.value("body", json())}});
        }
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, std::string("malformed cassette: ") + e.what());
    }
    return out;
}

CassetteTransport::CassetteTransport(std::vector<HttpInteraction> interactions)
    : interactions_(std::move(interactions)) {}

CassetteTransport CassetteTransport::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidConfig, "cannot read cassette " + path.string());
    }
    try {
        return CassetteTransport(cassette_from_json(json::parse(in)));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidConfig, path.string() + ": " + e.what());
    }
}

HttpResponse CassetteTransport::send(const HttpRequest& request) {
    if (next_ >= interactions_.size()) {
        lost("cassette exhausted at " + request.method + " " + request.path);
    }
    const auto& expected = interactions_[next_];
    if (!(expected.request == request)) {
        lost("cassette mismatch at interaction " + std::to_string(next_) + ": expected " + expected.request.method +
             " " + expected.request.path + ", got " + request.method + " " + request.path);
    }
    ++next_;
    return expected.response;
}

HttpResponse RecordingTransport::send(const HttpRequest& request) {
    HttpResponse response = inner_.send(request);
    log_.push_back({request, response});
    return response;
}

void RecordingTransport::save(const std::filesystem::path& path) const {
    std::ofstream out(path);
    out << cassette_to_json(log_).dump(2) << "\n";
    if (!out) {
        throw Error(ErrorCode::InvalidConfig, "cannot write cassette " + path.string());
    }
}

// ---- geometry --------------------------------------------------------------

Point tap_point(const BoundingBox& b) { return Point{(b.x1 + b.x2) / 2, (b.y1 + b.y2) / 2}; }

std::pair<Point, Point> swipe_geometry(const BoundingBox& b, ScrollDirection dir) {
    const Point c = tap_point(b);
    const int dy = b.height() * 2 / 5;
    const int dx = b.width() * 2 / 5;
    switch (dir) {
        case ScrollDirection::Up: return {{c.x, c.y + dy}, {c.x, c.y - dy}};
        case ScrollDirection::Down: return {{c.x, c.y - dy}, {c.x, c.y + dy}};
        case ScrollDirection::Left: return {{c.x + dx, c.y}, {c.x - dx, c.y}};
        case ScrollDirection::Right: return {{c.x - dx, c.y}, {c.x + dx, c.y}};
    }
    return {c, c};
}

// ---- client ----------------------------------------------------------------

json WebDriverCapabilities::to_json() const {
    json always = {
        {"platformName", platform_name},
        {"appium:automationName", automation_name},
        {"appium:deviceName", device_name},
        {"appium:noReset", true},
    };
    if (!app_package.empty()) always["appium:appPackage"] = app_package;
    if (!app_activity.empty()) always["appium:appActivity"] = app_activity;
    return {{"capabilities", {{"alwaysMatch", always}, {"firstMatch", json::array({json::object()})}}}};
}

WebDriverDriver::WebDriverDriver(HttpTransport& transport, WebDriverCapabilities caps)
    : transport_(transport), caps_(std::move(caps)) {}

WebDriverDriver::~WebDriverDriver() = default;

json WebDriverDriver::call(const std::string& method, const std::string& path, json body) {
    HttpResponse response = transport_.send(HttpRequest{method, path, std::move(body)});
    if (response.status >= 400) {
        std::string error = "HTTP " + std::to_string(response.status);
        if (response.body.is_object() && response.body.contains("value") && response.body["value"].is_object()) {
            error += " " + response.body["value"].value("error", "") + ": " + response.body["value"].value("message", "");
        }
        lost(method + " " + path + ": " + error);
    }
    if (!response.body.is_object() || !response.body.contains("value")) {
        lost(method + " " + path + ": response has no value");
    }
    return response.body["value"];
}

const std::string& WebDriverDriver::session_id() {
    if (!session_) {
        json value = call("POST", "/session", caps_.to_json());
        if (!value.is_object() || !value.contains("sessionId")) {
            lost("new session response carries no sessionId");
        }
        session_ = value["sessionId"].get<std::string>();
    }
    return *session_;
}

std::string WebDriverDriver::session_path(const std::string& suffix) { return "/session/" + session_id() + suffix; }

void WebDriverDriver::quit() {
    if (session_) {
        call("DELETE", "/session/" + *session_);
        session_.reset();
    }
}

void WebDriverDriver::relaunch() {
    json app = {{"appId", caps_.app_package}};
    call("POST", session_path("/appium/device/terminate_app"), app);
    call("POST", session_path("/appium/device/activate_app"), app);
}

UiPage WebDriverDriver::capture() {
    json shot = call("GET", session_path("/screenshot"));
    json source = call("GET", session_path("/source"));
    if (!shot.is_string() || !source.is_string()) {
        lost("capture payloads are not strings");
    }
    Raster raster;
    try {
        raster = decode_png(base64_decode(shot.get<std::string>()));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SessionLost) throw;
        lost(std::string("screenshot: ") + e.what());
    }
    return UiPage(std::move(raster), source.get<std::string>());
}

void WebDriverDriver::pointer(json steps) {
    json body = {{"actions", json::array({{{"type", "pointer"},
                                           {"id", "finger1"},
                                           {"parameters", {{"pointerType", "touch"}}},
                                           {"actions", std::move(steps)}}})}};
    call("POST", session_path("/actions"), body);
}

ActionOutcome WebDriverDriver::perform(const Action& action) {
    check_on_screen(action, screen());
    const json down = {{"type", "pointerDown"}, {"button", 0}};
    const json up = {{"type", "pointerUp"}, {"button", 0}};
    if (const auto* click = std::get_if<ClickAction>(&action.variant)) {
        pointer(json::array({pointer_move(tap_point(click->bound), 0), down, {{"type", "pause"}, {"duration", 100}}, up}));
    } else if (const auto* scroll = std::get_if<ScrollAction>(&action.variant)) {
        auto [from, to] = swipe_geometry(scroll->bound, scroll->direction);
        pointer(json::array({pointer_move(from, 0), down, pointer_move(to, 600), up}));
    } else {
        const auto& input = std::get<InputAction>(action.variant);
        HttpResponse found = transport_.send(HttpRequest{
            "POST", session_path("/element"),
            {{"using", "xpath"}, {"value", "//*[@bounds='" + format_bounds(input.bound) + "']"}}});
        if (found.status == 404) {
            return ActionOutcome::Unchanged;
        }
        if (found.status >= 400 || !found.body.contains("value") || !found.body["value"].is_object() ||
            found.body["value"].empty()) {
            lost("element lookup for " + to_string(action) + " failed");
        }
        const std::string element = found.body["value"].begin()->get<std::string>();
        call("POST", session_path("/element/" + element + "/click"), json::object());
        call("POST", session_path("/element/" + element + "/value"), {{"text", input.text}});
    }
    json package = call("GET", session_path("/appium/device/current_package"));
    if (!caps_.app_package.empty() && package.is_string() && package.get<std::string>() != caps_.app_package) {
        return ActionOutcome::External;
    }
    return ActionOutcome::Transitioned;
}

}  // namespace uiwalk
