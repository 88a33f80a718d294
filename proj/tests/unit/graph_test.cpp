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

#include <gtest/gtest.h>

#include "generators.hpp"
#include "uiwalk/errors.hpp"
#include "uiwalk/graph.hpp"
#include "uiwalk/sim.hpp"

using namespace uiwalk;

namespace {

UiPage page_with(const std::string& label, Rgb bg) {
    SimWidget w;
    w.text = label;
    w.bounds = {40, 60, 680, 140};
    w.clickable = true;
    SimulatedState s{render_hierarchy(std::vector<SimWidget>{w}), bg, {}};
    return UiPage(render_state(s), s.hierarchy);
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidConfig;
}

}  // namespace

TEST(Graph, NamesNodesAfterTheirTrace) {
    AppGraph g("Baicizhan0", gen::keywords());
    NodeId root = g.add_root(page_with("Home", {255, 255, 255}));
    EXPECT_EQ(g.node(root).page_name, "Baicizhan0");
    EXPECT_EQ(g.index().size(), 1u);

    NodeId edit = g.insert_unique(root, make_click("Edit", {40, 200, 680, 300}), page_with("Editor", {0, 0, 0}));
    EXPECT_EQ(g.node(edit).page_name, "Baicizhan0_1");

    Action save = make_click("Save", {40, 400, 680, 500});
    save.id = 25;
    NodeId saved = g.insert_unique(edit, save, page_with("Saved", {9, 9, 9}));
    const Node& n = g.node(saved);
    EXPECT_EQ(n.page_name, "Baicizhan0_1_25");
    EXPECT_EQ(n.trace.snapshot_count(), 3u);
    EXPECT_EQ(n.trace.length(), 2u);
    EXPECT_EQ(n.depth(), 2u);
    EXPECT_TRUE(n.trace.snapshot(1).same_capture(g.node(edit).canonical_page()));
    EXPECT_EQ(g.node_count(), 3u);
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_GE(g.next_action_id(), 26u);
}

TEST(Graph, Errors) {
    EXPECT_EQ(code_of([] { AppGraph("A", {"x"}); }), ErrorCode::InvalidConfig);
    AppGraph g("A", gen::keywords());
    EXPECT_EQ(code_of([&] { g.insert_unique(NodeId{0}, make_click("X", {0, 0, 1, 1}), UiPage()); }),
              ErrorCode::UnknownPredecessor);
    NodeId root = g.add_root(page_with("Home", {1, 1, 1}));
    EXPECT_EQ(code_of([&] { g.redirect_edge(NodeId{5}, make_click("X", {0, 0, 1, 1}), root); }),
              ErrorCode::UnknownPredecessor);
    EXPECT_EQ(code_of([&] { g.redirect_edge(root, make_click("X", {0, 0, 1, 1}), NodeId{5}); }),
              ErrorCode::UnknownTarget);
}

TEST(Graph, RedirectsAreIdempotent) {
    AppGraph g("A", gen::keywords());
    NodeId root = g.add_root(page_with("Home", {1, 1, 1}));
    NodeId b = g.insert_unique(root, make_click("B", {0, 0, 10, 10}), page_with("B", {2, 2, 2}));
    Action back = make_click("Back", {0, 20, 10, 30});
    back.id = g.allocate_action_id();
    g.redirect_edge(b, back, root);
    g.redirect_edge(b, back, root);
    EXPECT_EQ(g.edge_count(), 2u);

    Action stay = make_click("Stay", {0, 40, 10, 50});
    stay.id = g.allocate_action_id();
    EXPECT_TRUE(g.redirect_edge(b, stay, b).is_self_loop());
    Action away = make_click("Away", {0, 60, 10, 70});
    away.id = g.allocate_action_id();
    EXPECT_TRUE(g.add_external_edge(root, away).is_external());

    GraphStats s = g.stats();
    EXPECT_EQ(s.node_count, 2u);
    EXPECT_EQ(s.edge_count, 4u);
    EXPECT_EQ(s.self_loops, 1u);
    EXPECT_EQ(s.external_edges, 1u);
    EXPECT_EQ(s.per_kind[0], 4u);
    EXPECT_EQ(s.action_count, 4u);
    EXPECT_DOUBLE_EQ(s.avg_trace_len, 0.5);
}

TEST(Graph, QuarantineIsRecorded) {
    AppGraph g("A", gen::keywords());
    NodeId root = g.add_root(page_with("Home", {1, 1, 1}));
    g.quarantine(root);
    EXPECT_TRUE(g.node(root).quarantined);
    EXPECT_EQ(g.stats().quarantined, 1u);
}

TEST(EstimateSpace, ClosedForm) {
    EXPECT_EQ(estimate_space(50, 4), 6'250'000u);
    EXPECT_EQ(estimate_space(7, 0), 1u);
    EXPECT_EQ(estimate_space(1, 1000), 1u);
    EXPECT_EQ(estimate_space(2, 63), 1ull << 63);
    EXPECT_EQ(code_of([] { estimate_space(2, 64); }), ErrorCode::Overflow);
    EXPECT_EQ(code_of([] { estimate_space(50, 12); }), ErrorCode::Overflow);
    EXPECT_EQ(code_of([] { estimate_space(0, 3); }), ErrorCode::InvalidConfig);
    EXPECT_EQ(code_of([] { estimate_space(3, -1); }), ErrorCode::InvalidConfig);
}

TEST(EstimateSpaceProperty, MatchesRepeatedMultiplication) {
    gen::Rng rng(41);
    for (int i = 0; i < 500; ++i) {
        std::int64_t b = gen::uniform(rng, 1, 60), d = gen::uniform(rng, 0, 12);
        unsigned __int128 v = 1;
        bool overflow = false;
        for (int k = 0; k < d; ++k) {
            v *= static_cast<unsigned __int128>(b);
            if (v > std::numeric_limits<std::uint64_t>::max()) overflow = true;
        }
        if (overflow) {
            EXPECT_EQ(code_of([&] { estimate_space(b, d); }), ErrorCode::Overflow);
        } else {
            EXPECT_EQ(estimate_space(b, d), static_cast<std::uint64_t>(v));
        }
    }
}
