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

#include "uiwalk/taskgen.hpp"

#include <algorithm>
#include <fstream>
#include <random>

#include "uiwalk/archive.hpp"
#include "uiwalk/errors.hpp"
#include "uiwalk/hierarchy.hpp"
#include "uiwalk/markup.hpp"

namespace uiwalk {

using nlohmann::json;

namespace {

// Template table, version 1.
constexpr std::string_view kElementListPrompt = "列出页面中所有可交互的元素及其位置。";
constexpr std::string_view kActionSpacePrompt = "列出在此页面上可以执行的所有操作。";
constexpr std::string_view kGroundingPrompt = "找到「{}」在页面中的位置。";
constexpr std::string_view kActionPredictionPrompt = "从第一张页面跳转到第二张页面需要执行什么操作？";
constexpr std::string_view kClickTemplate = "打开「{}」";
constexpr std::string_view kClickUnnamedTemplate = "点击位置{}";
constexpr std::string_view kInputTemplate = "在「{}」中输入「{}」";
constexpr std::array<std::string_view, 4> kScrollTemplates = {"向上滑动", "向下滑动", "向左滑动", "向右滑动"};

std::string fill(std::string_view tmpl, std::initializer_list<std::string_view> args) {
    std::string out;
    auto arg = args.begin();
    for (std::size_t i = 0; i < tmpl.size(); ++i) {
        if (tmpl.compare(i, 2, "{}") == 0 && arg != args.end()) {
            out += *arg++;
            ++i;
        } else {
            out += tmpl[i];
        }
    }
    return out;
}

std::string record_id(const AppGraph& graph, TaskKind kind, std::size_t n) {
    return graph.app_name() + "/" + std::string(to_string(kind)) + "/" + std::to_string(n);
}

std::string node_hierarchy(const AppGraph& graph, NodeId id) {
    const Node& node = graph.node(id);
    return graph.app_name() + "/" + snapshot_path(node.page_name, node.depth(), "xml");
}

json node_meta(const AppGraph& graph, NodeId id) {
    return {{"node", index_of(id)}, {"page_name", graph.node(id).page_name}, {"hierarchy", node_hierarchy(graph, id)}};
}

json edge_meta(const AppGraph& graph, std::size_t index, const Edge& e) {
    json meta = {{"edge", index}, {"src", index_of(e.src)}, {"action_id", e.action.id.value_or(0)},
                 {"hierarchy", node_hierarchy(graph, e.src)}};
    meta["dst"] = e.is_external() ? json(kExternalNodeName) : json(index_of(e.dst));
    return meta;
}

TaskRecord base_record(const AppGraph& graph, TaskKind kind, std::size_t n) {
    TaskRecord r;
    r.id = record_id(graph, kind, n);
    r.task = kind;
    r.app = graph.app_name();
    return r;
}

}  // namespace

std::string_view to_string(TaskKind kind) {
    switch (kind) {
        case TaskKind::ElementList: return "element_list";
        case TaskKind::Grounding: return "grounding";
        case TaskKind::ActionSpace: return "action_space";
        case TaskKind::ActionPrediction: return "action_prediction";
        case TaskKind::Navigation: return "navigation";
    }
    return "element_list";
}

TaskKind parse_task_kind(std::string_view text) {
    for (TaskKind k : kTaskKinds) {
        if (to_string(k) == text) return k;
    }
    throw Error(ErrorCode::InvalidConfig, "unknown task '" + std::string(text) + "'");
}

json TaskRecord::to_json() const {
    return {{"id", id},         {"task", to_string(task)}, {"app", app},  {"images", images},
            {"prompt", prompt}, {"answer", answer},        {"meta", meta}};
}

TaskRecord TaskRecord::from_json(const json& doc) {
    TaskRecord r;
    r.id = doc.at("id").get<std::string>();
    r.task = parse_task_kind(doc.at("task").get<std::string>());
    r.app = doc.value("app", "");
    r.images = doc.value("images", std::vector<std::string>{});
    r.prompt = doc.value("prompt", "");
    r.answer = doc.at("answer").get<std::string>();
    r.meta = doc.value("meta", json::object());
    return r;
}

std::vector<Element> labeled_elements(const UiPage& page) {
    std::vector<Element> out;
    for (const auto& e : page.elements()) {
        if (!e.name.empty()) out.push_back(e);
    }
    return out;
}

std::string node_image(const AppGraph& graph, NodeId id) {
    const Node& node = graph.node(id);
    return graph.app_name() + "/" + snapshot_path(node.page_name, node.depth(), "png");
}

std::vector<TaskRecord> gen_element_list(const AppGraph& graph) {
    std::vector<TaskRecord> out;
    for (const Node& node : graph.nodes()) {
        TaskRecord r = base_record(graph, TaskKind::ElementList, out.size());
        r.images = {node_image(graph, node.id)};
        r.prompt = kElementListPrompt;
        r.meta = node_meta(graph, node.id);
        auto elements = labeled_elements(node.canonical_page());
        for (std::size_t i = 0; i < elements.size(); ++i) {
            if (i) r.answer += '\n';
            r.answer += format_ref_box(RefBox{elements[i].name, elements[i].bound});
        }
        if (elements.empty()) r.meta["empty"] = true;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TaskRecord> gen_grounding(const AppGraph& graph, std::uint64_t seed) {
    std::vector<TaskRecord> out;
    for (const Node& node : graph.nodes()) {
        auto elements = labeled_elements(node.canonical_page());
        std::vector<std::size_t> picks;
        std::vector<std::size_t> all(elements.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          index_of(node.id)};
        std::mt19937_64 rng(seq);
        std::sample(all.begin(), all.end(), std::back_inserter(picks), 5, rng);
        for (std::size_t i : picks) {
            TaskRecord r = base_record(graph, TaskKind::Grounding, out.size());
            r.images = {node_image(graph, node.id)};
            r.prompt = fill(kGroundingPrompt, {elements[i].name});
            r.answer = format_ref_box(RefBox{elements[i].name, elements[i].bound});
            r.meta = node_meta(graph, node.id);
            r.meta["element"] = i;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<TaskRecord> gen_action_space(const AppGraph& graph) {
    std::vector<TaskRecord> out;
    for (const Node& node : graph.nodes()) {
        TaskRecord r = base_record(graph, TaskKind::ActionSpace, out.size());
        r.images = {node_image(graph, node.id)};
        r.prompt = kActionSpacePrompt;
        r.meta = node_meta(graph, node.id);
        auto actions = action_space(node.canonical_page().elements());
        for (std::size_t i = 0; i < actions.size(); ++i) {
            if (i) r.answer += '\n';
            r.answer += to_string(actions[i]);
        }
        if (actions.empty()) r.meta["empty"] = true;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<TaskRecord> gen_action_prediction(const AppGraph& graph) {
    std::vector<TaskRecord> out;
    const auto edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.is_self_loop() || e.is_external()) continue;
        TaskRecord r = base_record(graph, TaskKind::ActionPrediction, out.size());
        r.images = {node_image(graph, e.src), node_image(graph, e.dst)};
        r.prompt = kActionPredictionPrompt;
        r.answer = to_string(e.action);
        r.meta = edge_meta(graph, i, e);
        out.push_back(std::move(r));
    }
    return out;
}

std::string navigation_instruction(const Action& action) {
    if (const auto* c = std::get_if<ClickAction>(&action.variant)) {
        if (c->name.empty()) {
            return fill(kClickUnnamedTemplate, {format_paren_box(c->bound)});
        }
        return fill(kClickTemplate, {c->name});
    }
    if (const auto* in = std::get_if<InputAction>(&action.variant)) {
        return fill(kInputTemplate, {in->name, in->text});
    }
    const auto& s = std::get<ScrollAction>(action.variant);
    return std::string(kScrollTemplates[static_cast<std::size_t>(s.direction)]);
}

std::vector<TaskRecord> gen_navigation(const AppGraph& graph) {
    std::vector<TaskRecord> out;
    const auto edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        TaskRecord r = base_record(graph, TaskKind::Navigation, out.size());
        r.images = {node_image(graph, e.src)};
        r.prompt = navigation_instruction(e.action);
        r.answer = to_string(e.action);
        r.meta = edge_meta(graph, i, e);
        r.meta["template_version"] = kTemplateVersion;
        out.push_back(std::move(r));
    }
    return out;
}

TaskCorpus generate_tasks(const AppGraph& graph, std::uint64_t seed) {
    TaskCorpus c;
    c[TaskKind::ElementList] = gen_element_list(graph);
    c[TaskKind::Grounding] = gen_grounding(graph, seed);
    c[TaskKind::ActionSpace] = gen_action_space(graph);
    c[TaskKind::ActionPrediction] = gen_action_prediction(graph);
    c[TaskKind::Navigation] = gen_navigation(graph);
    return c;
}

void merge_corpus(TaskCorpus& into, TaskCorpus more) {
    for (std::size_t k = 0; k < into.by_task.size(); ++k) {
        auto& dst = into.by_task[k];
        for (auto& r : more.by_task[k]) dst.push_back(std::move(r));
    }
}

void write_corpus(const TaskCorpus& corpus, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    json counts = json::object();
    for (TaskKind k : kTaskKinds) {
        const auto path = out_dir / (std::string(to_string(k)) + ".jsonl");
        std::ofstream out(path, std::ios::binary);
        for (const auto& r : corpus[k]) {
            out << r.to_json().dump() << '\n';
        }
        if (!out) {
            throw Error(ErrorCode::InvalidConfig, "cannot write " + path.string());
        }
        counts[std::string(to_string(k))] = corpus[k].size();
    }
    json manifest = {{"template_version", kTemplateVersion}, {"counts", counts}};
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    out << manifest.dump(2) << '\n';
    if (!out) {
        throw Error(ErrorCode::InvalidConfig, "cannot write " + (out_dir / "manifest.json").string());
    }
}

std::vector<TaskRecord> read_records(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidConfig, "cannot read " + path.string());
    }
    std::vector<TaskRecord> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(TaskRecord::from_json(json::parse(line)));
        } catch (const json::exception& e) {
            throw Error(ErrorCode::InvalidConfig, path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace uiwalk
