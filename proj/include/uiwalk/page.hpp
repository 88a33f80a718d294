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

#ifndef UIWALK_PAGE_HPP
#define UIWALK_PAGE_HPP

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uiwalk/action.hpp"
#include "uiwalk/raster.hpp"

namespace uiwalk {

/// A screenshot and its view hierarchy captured at one instant.
///
/// Value type with shared immutable storage; copies are cheap and two
/// copies of one capture compare equal without touching pixels.
class UiPage {
public:
    UiPage();

    /// Parses `hierarchy` and resizes the screenshot to 720x1280.
    UiPage(Raster screenshot, std::string hierarchy);

    const Raster& screenshot() const { return data_->screenshot; }
    const std::string& hierarchy() const { return data_->hierarchy; }
    const std::vector<Element>& elements() const { return data_->elements; }

    bool same_capture(const UiPage& other) const { return data_ == other.data_; }

    friend bool operator==(const UiPage& a, const UiPage& b) {
        return a.data_ == b.data_ ||
               (a.hierarchy() == b.hierarchy() && a.screenshot() == b.screenshot());
    }

private:
    struct Data {
        Raster screenshot;
        std::string hierarchy;
        std::vector<Element> elements;
    };
    std::shared_ptr<const Data> data_;
};

struct TraceStep {
    Action action;
    UiPage page;  // state after the action
};

/// Shortest action sequence from the homepage, with the page seen after
/// every step. Snapshot k is the page after k actions (0 = homepage).
struct ActionTrace {
    UiPage root;
    std::vector<TraceStep> steps;

    std::size_t length() const { return steps.size(); }
    std::size_t snapshot_count() const { return steps.size() + 1; }
    const UiPage& snapshot(std::size_t k) const { return k == 0 ? root : steps[k - 1].page; }
    const UiPage& final_page() const { return snapshot(steps.size()); }

    ActionTrace extended(Action action, UiPage page) const {
        ActionTrace next = *this;
        next.steps.push_back(TraceStep{std::move(action), std::move(page)});
        return next;
    }
};

/// `root` followed by "_<id>" for every id in order.
std::string page_name(std::string_view app_root, std::span<const ActionId> ids);

/// Throws InvalidConfig when a trace action carries no id.
std::string page_name(const ActionTrace& trace, std::string_view app_root);

}  // namespace uiwalk

#endif  // UIWALK_PAGE_HPP
