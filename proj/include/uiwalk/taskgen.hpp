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

#ifndef UIWALK_TASKGEN_HPP
#define UIWALK_TASKGEN_HPP

#include <array>
#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "uiwalk/graph.hpp"

namespace uiwalk {

enum class TaskKind { ElementList, Grounding, ActionSpace, ActionPrediction, Navigation };

inline constexpr std::array<TaskKind, 5> kTaskKinds = {TaskKind::ElementList, TaskKind::Grounding,
                                                        TaskKind::ActionSpace, TaskKind::ActionPrediction,
                                                        TaskKind::Navigation};

std::string_view to_string(TaskKind kind);
/// Throws InvalidConfig.
TaskKind parse_task_kind(std::string_view text);

struct TaskRecord {
    std::string id;  // "<app>/<task>/<n>", unique within a corpus
    TaskKind task = TaskKind::ElementList;
    std::string app;
    std::vector<std::string> images;  // relative to the archive root
    std::string prompt;
    std::string answer;
    nlohmann::json meta = nlohmann::json::object();

    nlohmann::json to_json() const;
    static TaskRecord from_json(const nlohmann::json& doc);
};

/// Elements a record may name: everything with a non-empty label.
std::vector<Element> labeled_elements(const UiPage& page);

/// `<app>/pages/<page_name>/step_<depth>.png`: the node's canonical capture.
std::string node_image(const AppGraph& graph, NodeId id);

std::vector<TaskRecord> gen_element_list(const AppGraph& graph);
std::vector<TaskRecord> gen_grounding(const AppGraph& graph, std::uint64_t seed);
std::vector<TaskRecord> gen_action_space(const AppGraph& graph);
/// Edges between two distinct in-app pages.
std::vector<TaskRecord> gen_action_prediction(const AppGraph& graph);
std::vector<TaskRecord> gen_navigation(const AppGraph& graph);

/// Instruction for one action under the current template table.
std::string navigation_instruction(const Action& action);

inline constexpr int kTemplateVersion = 1;

struct TaskCorpus {
    std::array<std::vector<TaskRecord>, 5> by_task;  // indexed by TaskKind

    std::vector<TaskRecord>& operator[](TaskKind k) { return by_task[static_cast<std::size_t>(k)]; }
    const std::vector<TaskRecord>& operator[](TaskKind k) const { return by_task[static_cast<std::size_t>(k)]; }
};

/// All five tasks for one graph.
TaskCorpus generate_tasks(const AppGraph& graph, std::uint64_t seed);

/// Appends `more` to `into`, task by task.
void merge_corpus(TaskCorpus& into, TaskCorpus more);

/// Writes `<task>.jsonl` for every task plus `manifest.json` with the
/// per-task counts.
void write_corpus(const TaskCorpus& corpus, const std::filesystem::path& out_dir);

/// Reads TaskRecords from a JSONL file; throws InvalidConfig naming the
/// path and line.
std::vector<TaskRecord> read_records(const std::filesystem::path& path);

}  // namespace uiwalk

#endif  // UIWALK_TASKGEN_HPP
