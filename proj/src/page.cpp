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

#include "uiwalk/page.hpp"

#include "uiwalk/errors.hpp"
#include "uiwalk/hierarchy.hpp"

namespace uiwalk {

UiPage::UiPage()
    : data_(std::make_shared<Data>(
          Data{Raster::filled(kDefaultScreen.width, kDefaultScreen.height, Rgb{}), {}, {}})) {}

UiPage::UiPage(Raster screenshot, std::string hierarchy) {
    auto data = std::make_shared<Data>();
    data->screenshot = screenshot.resized(kDefaultScreen.width, kDefaultScreen.height);
    data->elements = parse_hierarchy(hierarchy).elements;
    data->hierarchy = std::move(hierarchy);
    data_ = std::move(data);
}

std::string page_name(std::string_view app_root, std::span<const ActionId> ids) {
    std::string name(app_root);
    for (ActionId id : ids) {
        name += '_';
        name += std::to_string(id);
    }
    return name;
}

std::string page_name(const ActionTrace& trace, std::string_view app_root) {
    std::vector<ActionId> ids;
    ids.reserve(trace.steps.size());
    for (const auto& step : trace.steps) {
        if (!step.action.id) {
            throw Error(ErrorCode::InvalidConfig, "trace action without id: " + to_string(step.action));
        }
        ids.push_back(*step.action.id);
    }
    return page_name(app_root, ids);
}

}  // namespace uiwalk
