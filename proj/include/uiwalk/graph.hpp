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

#ifndef UIWALK_GRAPH_HPP
#define UIWALK_GRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "uiwalk/bm25.hpp"
#include "uiwalk/page.hpp"

namespace uiwalk {

enum class NodeId : std::uint32_t {};

/// Sink for actions that leave the app; never a member of the node list.
inline constexpr NodeId kExternalNode{0xFFFFFFFFu};
inline constexpr std::string_view kExternalNodeName = "__external__";

constexpr std::uint32_t index_of(NodeId id) { return static_cast<std::uint32_t>(id); }

struct Node {
    NodeId id{};
    std::string page_name;
    ActionTrace trace;
    bool quarantined = false;

    const UiPage& canonical_page() const { return trace.final_page(); }
    std::size_t depth() const { return trace.length(); }
};

struct Edge {
    NodeId src{};
    NodeId dst{};
    Action action;

    bool is_self_loop() const { return src == dst; }
    bool is_external() const { return dst == kExternalNode; }
};

struct GraphStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::size_t action_count = 0;  // distinct executed action ids
    std::size_t self_loops = 0;
    std::size_t external_edges = 0;
    std::size_t quarantined = 0;
    double avg_trace_len = 0.0;
    std::array<std::size_t, 3> per_kind{};  // indexed by ActionKind
};

inline constexpr std::size_t kKeywordCount = 10;

/// Directed multigraph of one app's unique pages.
///
/// Node ids are dense and double as BM25 document ids, so retrieval hits map
/// straight back to nodes. Edges are deduplicated on
/// (src, dst, canonical action text).
class AppGraph {
public:
    /// Throws InvalidConfig unless exactly ten keywords are given.
    AppGraph(std::string app_name, std::vector<std::string> keywords, Bm25Params params = {});

    const std::string& app_name() const { return app_name_; }
    const std::vector<std::string>& keywords() const { return keywords_; }

    bool empty() const { return nodes_.empty(); }
    NodeId root() const { return NodeId{0}; }

    NodeId add_root(UiPage home);

    /// New node reached from `predecessor` by `action`. An action without an
    /// id receives the next free one. Throws UnknownPredecessor.
    NodeId insert_unique(NodeId predecessor, Action action, UiPage page);

    /// Edge to an already known page; idempotent. Throws UnknownPredecessor
    /// or UnknownTarget.
    const Edge& redirect_edge(NodeId predecessor, Action action, NodeId matched);

    const Edge& add_external_edge(NodeId predecessor, Action action);

    void quarantine(NodeId id);

    // Archive loading: re-append nodes and edges in their stored order.
    // The trace must carry ids for every step and the edge endpoints must
    // exist. No predecessor bookkeeping or deduplication beyond the edge key.
    NodeId restore_node(ActionTrace trace, bool quarantined);
    void restore_edge(Edge edge);

    bool contains(NodeId id) const { return index_of(id) < nodes_.size(); }
    const Node& node(NodeId id) const;
    std::span<const Node> nodes() const { return nodes_; }
    std::span<const Edge> edges() const { return edges_; }
    std::size_t node_count() const { return nodes_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const Bm25Index& index() const { return index_; }

    ActionId allocate_action_id() { return next_action_id_++; }
    ActionId next_action_id() const { return next_action_id_; }
    void reserve_action_ids(ActionId next) { next_action_id_ = std::max(next_action_id_, next); }

    GraphStats stats() const;

private:
    NodeId add_node(ActionTrace trace);
    const Edge& add_edge(NodeId src, NodeId dst, Action action);
    void claim_id(Action& action);

    std::string app_name_;
    std::vector<std::string> keywords_;
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::string>> edge_keys_;
    Bm25Index index_;
    ActionId next_action_id_ = 1;
};

/// branching^depth; throws Overflow past 2^64-1 and InvalidConfig for
/// branching < 1 or depth < 0.
std::uint64_t estimate_space(std::int64_t branching, std::int64_t depth);

}  // namespace uiwalk

#endif  // UIWALK_GRAPH_HPP
