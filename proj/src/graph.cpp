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

#include "uiwalk/graph.hpp"

#include <limits>
#include <unordered_set>

#include "uiwalk/errors.hpp"

namespace uiwalk {

AppGraph::AppGraph(std::string app_name, std::vector<std::string> keywords, Bm25Params params)
    : app_name_(std::move(app_name)), keywords_(std::move(keywords)), index_(params) {
    if (keywords_.size() != kKeywordCount) {
        throw Error(ErrorCode::InvalidConfig, "expected exactly 10 keywords, got " +
                                                  std::to_string(keywords_.size()));
    }
    if (app_name_.empty()) {
        throw Error(ErrorCode::InvalidConfig, "app name must not be empty");
    }
}

const Node& AppGraph::node(NodeId id) const {
    if (!contains(id)) {
        throw Error(ErrorCode::UnknownTarget, "no node " + std::to_string(index_of(id)));
    }
    return nodes_[index_of(id)];
}

NodeId AppGraph::add_node(ActionTrace trace) {
    NodeId id{static_cast<std::uint32_t>(nodes_.size())};
    std::string name = page_name(trace, app_name_);
    auto terms = hierarchy_terms(trace.final_page().hierarchy());
    index_.add(terms);
    nodes_.push_back(Node{id, std::move(name), std::move(trace), false});
    return id;
}

NodeId AppGraph::add_root(UiPage home) {
    if (!nodes_.empty()) {
        throw Error(ErrorCode::InvalidConfig, "graph already has a root");
    }
    return add_node(ActionTrace{std::move(home), {}});
}

void AppGraph::claim_id(Action& action) {
    if (!action.id) {
        action.id = allocate_action_id();
    } else {
        reserve_action_ids(*action.id + 1);
    }
}

NodeId AppGraph::insert_unique(NodeId predecessor, Action action, UiPage page) {
    if (!contains(predecessor)) {
        throw Error(ErrorCode::UnknownPredecessor, "no node " + std::to_string(index_of(predecessor)));
    }
    claim_id(action);
    ActionTrace trace = nodes_[index_of(predecessor)].trace.extended(action, std::move(page));
    NodeId id = add_node(std::move(trace));
    add_edge(predecessor, id, std::move(action));
    return id;
}

const Edge& AppGraph::redirect_edge(NodeId predecessor, Action action, NodeId matched) {
    if (!contains(predecessor)) {
        throw Error(ErrorCode::UnknownPredecessor, "no node " + std::to_string(index_of(predecessor)));
    }
    if (!contains(matched)) {
        throw Error(ErrorCode::UnknownTarget, "no node " + std::to_string(index_of(matched)));
    }
    claim_id(action);
    return add_edge(predecessor, matched, std::move(action));
}

const Edge& AppGraph::add_external_edge(NodeId predecessor, Action action) {
    if (!contains(predecessor)) {
        throw Error(ErrorCode::UnknownPredecessor, "no node " + std::to_string(index_of(predecessor)));
    }
    claim_id(action);
    return add_edge(predecessor, kExternalNode, std::move(action));
}

const Edge& AppGraph::add_edge(NodeId src, NodeId dst, Action action) {
    auto key = std::make_tuple(index_of(src), index_of(dst), to_string(action));
    if (!edge_keys_.insert(key).second) {
        for (const auto& e : edges_) {
            if (e.src == src && e.dst == dst && to_string(e.action) == std::get<2>(key)) {
                return e;
            }
        }
    }
    edges_.push_back(Edge{src, dst, std::move(action)});
    return edges_.back();
}

void AppGraph::quarantine(NodeId id) {
    if (!contains(id)) {
        throw Error(ErrorCode::UnknownTarget, "no node " + std::to_string(index_of(id)));
    }
    nodes_[index_of(id)].quarantined = true;
}

NodeId AppGraph::restore_node(ActionTrace trace, bool quarantined) {
    for (const auto& step : trace.steps) {
        if (step.action.id) reserve_action_ids(*step.action.id + 1);
    }
    NodeId id = add_node(std::move(trace));
    nodes_.back().quarantined = quarantined;
    return id;
}

void AppGraph::restore_edge(Edge edge) {
    if (!contains(edge.src)) {
        throw Error(ErrorCode::UnknownPredecessor, "no node " + std::to_string(index_of(edge.src)));
    }
    if (edge.dst != kExternalNode && !contains(edge.dst)) {
        throw Error(ErrorCode::UnknownTarget, "no node " + std::to_string(index_of(edge.dst)));
    }
    claim_id(edge.action);
    add_edge(edge.src, edge.dst, std::move(edge.action));
}

GraphStats AppGraph::stats() const {
    GraphStats s;
    s.node_count = nodes_.size();
    s.edge_count = edges_.size();
    std::unordered_set<ActionId> ids;
    for (const auto& e : edges_) {
        if (e.action.id) ids.insert(*e.action.id);
        if (e.is_self_loop()) ++s.self_loops;
        if (e.is_external()) ++s.external_edges;
        ++s.per_kind[static_cast<std::size_t>(e.action.kind())];
    }
    s.action_count = ids.size();
    std::size_t total_len = 0;
    for (const auto& n : nodes_) {
        total_len += n.depth();
        if (n.quarantined) ++s.quarantined;
    }
    s.avg_trace_len = nodes_.empty() ? 0.0 : static_cast<double>(total_len) / static_cast<double>(nodes_.size());
    return s;
}

std::uint64_t estimate_space(std::int64_t branching, std::int64_t depth) {
    if (branching < 1 || depth < 0) {
        throw Error(ErrorCode::InvalidConfig, "estimate_space needs branching >= 1 and depth >= 0");
    }
    std::uint64_t result = 1;
    const auto base = static_cast<std::uint64_t>(branching);
    for (std::int64_t i = 0; i < depth; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / base) {
            throw Error(ErrorCode::Overflow, std::to_string(branching) + "^" + std::to_string(depth));
        }
        result *= base;
    }
    return result;
}

}  // namespace uiwalk
