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

#include "uiwalk/explorer.hpp"

#include <algorithm>
#include <deque>
#include <nlohmann/json.hpp>

#include "uiwalk/errors.hpp"
#include "uiwalk/hierarchy.hpp"

namespace uiwalk {

void ExplorationConfig::validate() const {
    if (keywords.size() != kKeywordCount) {
        throw Error(ErrorCode::InvalidConfig,
                    "exactly 10 keywords are required, got " + std::to_string(keywords.size()));
    }
    if (max_nodes == 0) {
        throw Error(ErrorCode::InvalidConfig, "max_nodes must be at least 1");
    }
}

std::string_view to_string(StepVerdict verdict) {
    switch (verdict) {
        case StepVerdict::Unique: return "unique";
        case StepVerdict::Redirect: return "redirect";
        case StepVerdict::SelfLoop: return "self_loop";
        case StepVerdict::External: return "external";
        case StepVerdict::Quarantined: return "quarantined";
    }
    return "unique";
}

std::string format_progress(const ProgressEvent& event) {
    nlohmann::json line = {
        {"node", event.node},
        {"action_id", event.action_id},
        {"action", event.action},
        {"verdict", to_string(event.verdict)},
        {"target", event.target},
        {"element_diff", event.element_diff},
        {"pixel_diff", event.pixel_diff},
    };
    return line.dump();
}

std::vector<Action> order_actions(std::vector<Action> actions, std::span<const std::string> keywords,
                                  std::mt19937_64& rng, bool input_priority) {
    auto is_input = [](const Action& a) { return a.kind() == ActionKind::Input; };
    auto split = actions.begin();
    if (input_priority) {
        split = std::stable_partition(actions.begin(), actions.end(), is_input);
    }
    std::shuffle(actions.begin(), split, rng);
    std::shuffle(split, actions.end(), rng);

    for (auto& action : actions) {
        if (auto* input = std::get_if<InputAction>(&action.variant)) {
            if (keywords.empty()) {
                throw Error(ErrorCode::InvalidConfig, "input action scheduled without keywords");
            }
            std::uniform_int_distribution<std::size_t> pick(0, keywords.size() - 1);
            input->text = keywords[pick(rng)];
        }
    }
    return actions;
}

namespace {

struct Explorer {
    Driver& driver;
    const ExplorationConfig& config;
    const ProgressSink& progress;
    AppGraph graph;
    std::mt19937_64 rng;
    std::deque<NodeId> frontier;

    void emit(const std::string& node, const Action& action, StepVerdict verdict,
              const std::string& target, int ed = 0, double pd = 0.0) {
        if (progress) {
            progress(ProgressEvent{node, action.id.value_or(0), to_string(action), verdict, target, ed, pd});
        }
    }

    std::vector<Action> schedule(const UiPage& page) {
        std::vector<Element> allowed;
        for (const auto& e : page.elements()) {
            if (e.name.empty() || !config.blocklist.contains(e.name)) {
                allowed.push_back(e);
            }
        }
        auto ordered = order_actions(action_space(allowed), graph.keywords(), rng, config.input_priority);
        for (auto& action : ordered) {
            action.id = graph.allocate_action_id();
        }
        return ordered;
    }

    void enqueue(NodeId id) {
        if (graph.node(id).depth() < config.max_depth) {
            frontier.push_back(id);
        }
    }

    // Returns false when the node had to be quarantined.
    bool restore(NodeId id, const ActionTrace& trace, const std::string& name, const Action& next) {
        try {
            replay(driver, trace, config.thresholds);
            return true;
        } catch (const TraceReplayDivergence& d) {
            graph.quarantine(id);
            emit(name, next, StepVerdict::Quarantined, d.what());
            return false;
        } catch (const Error& e) {
            throw DriverFailure(e.what(), trace);
        }
    }

    void expand(NodeId id) {
        const ActionTrace trace = graph.node(id).trace;
        const std::string name = graph.node(id).page_name;
        bool restored = false;
        for (const Action& action : schedule(trace.final_page())) {
            if (graph.node_count() >= config.max_nodes) {
                return;
            }
            if (!restored && !restore(id, trace, name, action)) {
                return;
            }
            restored = true;

            ActionOutcome outcome;
            UiPage page;
            try {
                outcome = driver.perform(action);
                if (outcome == ActionOutcome::Transitioned) {
                    page = driver.capture();
                }
            } catch (const Error& e) {
                throw DriverFailure(e.what(), trace.extended(action, UiPage()));
            }

            if (outcome == ActionOutcome::External) {
                graph.add_external_edge(id, action);
                emit(name, action, StepVerdict::External, std::string(kExternalNodeName));
                restored = false;
                continue;
            }
            if (outcome == ActionOutcome::Unchanged) {
                // The driver guarantees the state was untouched.
                graph.redirect_edge(id, action, id);
                emit(name, action, StepVerdict::SelfLoop, name);
                continue;
            }

            SimilarityVerdict verdict = resolve_page(graph, page, config.thresholds);
            restored = false;
            if (verdict.matched_node) {
                NodeId matched = *verdict.matched_node;
                graph.redirect_edge(id, action, matched);
                emit(name, action, matched == id ? StepVerdict::SelfLoop : StepVerdict::Redirect,
                     graph.node(matched).page_name, verdict.element_diff, verdict.pixel_diff);
            } else {
                NodeId added = graph.insert_unique(id, action, page);
                enqueue(added);
                emit(name, action, StepVerdict::Unique, graph.node(added).page_name, verdict.element_diff,
                     verdict.pixel_diff);
            }
        }
    }

    void run() {
        try {
            driver.relaunch();
            graph.add_root(driver.capture());
        } catch (const Error& e) {
            throw DriverFailure(e.what(), ActionTrace{});
        }
        enqueue(graph.root());
        while (!frontier.empty() && graph.node_count() < config.max_nodes) {
            NodeId id = frontier.front();
            frontier.pop_front();
            expand(id);
        }
    }
};

}  // namespace

AppGraph explore_app(Driver& driver, const std::string& app_root, const ExplorationConfig& config,
                     const ProgressSink& progress) {
    config.validate();
    Explorer explorer{driver, config, progress, AppGraph(app_root, config.keywords),
                      std::mt19937_64(config.rng_seed), {}};
    explorer.run();
    return std::move(explorer.graph);
}

}  // namespace uiwalk
