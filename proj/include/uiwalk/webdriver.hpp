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

#ifndef UIWALK_WEBDRIVER_HPP
#define UIWALK_WEBDRIVER_HPP

#include <filesystem>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "uiwalk/driver.hpp"

namespace uiwalk {

struct HttpRequest {
    std::string method;  // GET, POST or DELETE
    std::string path;    // relative to the server base, e.g. /session/abc/source
    nlohmann::json body;  // null for requests without a body

    friend bool operator==(const HttpRequest&, const HttpRequest&) = default;
};

struct HttpResponse {
    int status = 200;
    nlohmann::json body;
};

/// Wire layer under the WebDriver client. Transport failures throw
/// SessionLost.
class HttpTransport {
public:
    virtual ~HttpTransport() = default;
    virtual HttpResponse send(const HttpRequest& request) = 0;
};

/// Plain HTTP via cpp-httplib. `base_url` may carry a path prefix such as
/// `http://127.0.0.1:4723/wd/hub`.
class HttplibTransport : public HttpTransport {
public:
    explicit HttplibTransport(std::string base_url, int timeout_seconds = 60);
    ~HttplibTransport() override;
    HttpResponse send(const HttpRequest& request) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Recorded exchange, one request and its response.
struct HttpInteraction {
    HttpRequest request;
    HttpResponse response;
};

nlohmann::json cassette_to_json(const std::vector<HttpInteraction>& interactions);
std::vector<HttpInteraction> cassette_from_json(const nlohmann::json& doc);

/// Serves responses from a recorded cassette in order. A request that does
/// not match the next recorded one throws SessionLost.
class CassetteTransport : public HttpTransport {
public:
    explicit CassetteTransport(std::vector<HttpInteraction> interactions);
    static CassetteTransport load(const std::filesystem::path& path);

    HttpResponse send(const HttpRequest& request) override;
    std::size_t remaining() const { return interactions_.size() - next_; }

private:
    std::vector<HttpInteraction> interactions_;
    std::size_t next_ = 0;
};

/// Forwards to another transport and keeps every exchange.
class RecordingTransport : public HttpTransport {
public:
    explicit RecordingTransport(HttpTransport& inner) : inner_(inner) {}
    HttpResponse send(const HttpRequest& request) override;

    const std::vector<HttpInteraction>& interactions() const { return log_; }
    void save(const std::filesystem::path& path) const;

private:
    HttpTransport& inner_;
    std::vector<HttpInteraction> log_;
};

struct WebDriverCapabilities {
    std::string platform_name = "Android";
    std::string automation_name = "UiAutomator2";
    std::string device_name = "emulator-5554";
    std::string app_package;
    std::string app_activity;

    nlohmann::json to_json() const;
};

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

/// Integer center of the bound.
Point tap_point(const BoundingBox& bound);

/// Swipe across 80% of the container extent along the direction's axis,
/// centered in the box. `Up` drags from the lower point to the upper one.
std::pair<Point, Point> swipe_geometry(const BoundingBox& bound, ScrollDirection dir);

/// W3C WebDriver client speaking the Appium mobile extensions.
///
/// The session is opened on first use. `perform` reports External when the
/// foreground package is no longer the app's.
class WebDriverDriver : public Driver {
public:
    WebDriverDriver(HttpTransport& transport, WebDriverCapabilities caps);
    ~WebDriverDriver() override;

    void relaunch() override;
    UiPage capture() override;
    ActionOutcome perform(const Action& action) override;

    const std::string& session_id();
    /// Deletes the session; further calls open a new one.
    void quit();

private:
    nlohmann::json call(const std::string& method, const std::string& path, nlohmann::json body = nullptr);
    std::string session_path(const std::string& suffix);
    void pointer(nlohmann::json steps);

    HttpTransport& transport_;
    WebDriverCapabilities caps_;
    std::optional<std::string> session_;
};

}  // namespace uiwalk

#endif  // UIWALK_WEBDRIVER_HPP
