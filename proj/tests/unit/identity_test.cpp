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
#include "oracles.hpp"
#include "uiwalk/identity.hpp"
#include "uiwalk/sim.hpp"

using namespace uiwalk;

namespace {

// Page whose hierarchy holds `base` shared labels plus `extra` labels of its
// own, and whose screenshot differs from a white screen in exactly
// `changed` pixels (filled row-major from the top-left).
UiPage crafted(int base, int extra, std::int64_t changed, const std::string& tag = "x") {
    std::vector<SimWidget> widgets;
    for (int i = 0; i < base; ++i) {
        SimWidget w;
        w.text = "Shared " + std::to_string(i);
        w.bounds = {0, 20 * i, 100, 20 * i + 10};
        widgets.push_back(w);
    }
    for (int i = 0; i < extra; ++i) {
        SimWidget w;
        w.text = "Own " + tag + std::to_string(i);
        w.bounds = {200, 20 * i, 300, 20 * i + 10};
        widgets.push_back(w);
    }
    RasterCanvas canvas(720, 1280, Rgb{255, 255, 255});
    const int full_rows = static_cast<int>(changed / 720);
    const int rest = static_cast<int>(changed % 720);
    canvas.fill({0, 0, 720, full_rows}, Rgb{0, 0, 0});
    canvas.fill({0, full_rows, rest, full_rows + 1}, Rgb{0, 0, 0});
    return UiPage(canvas.render(), render_hierarchy(widgets));
}

struct Boundary {
    int element_diff;
    double pixel_diff;
    bool merge;
};

}  // namespace

TEST(Thresholds, StrictReading) {
    IdentityThresholds t;
    EXPECT_TRUE(t.similar(4, 0.29));
    EXPECT_FALSE(t.similar(5, 0.29));
    EXPECT_FALSE(t.similar(4, 0.30));
    EXPECT_TRUE(t.similar(0, 0.0));
}

class BoundarySuite : public ::testing::TestWithParam<Boundary> {};

TEST_P(BoundarySuite, ThroughRealPages) {
    const Boundary c = GetParam();
    const std::int64_t total = 720 * 1280;
    const auto changed = static_cast<std::int64_t>(std::llround(c.pixel_diff * static_cast<double>(total)));
    UiPage known = crafted(10, 0, 0);
    UiPage candidate = crafted(10, c.element_diff, changed);
    ASSERT_EQ(element_diff(candidate.elements(), known.elements()), c.element_diff);
    ASSERT_EQ(pixel_diff(candidate.screenshot(), known.screenshot()), c.pixel_diff);
    EXPECT_EQ(pages_similar(candidate, known), c.merge);

    AppGraph g("B0", gen::keywords());
    g.add_root(known);
    SimilarityVerdict v = resolve_page(g, candidate);
    EXPECT_EQ(v.matched_node.has_value(), c.merge);
    EXPECT_EQ(v.element_diff, c.element_diff);
    EXPECT_EQ(v.pixel_diff, c.pixel_diff);
}

INSTANTIATE_TEST_SUITE_P(Pairs, BoundarySuite,
                         ::testing::Values(Boundary{4, 0.29, true}, Boundary{5, 0.29, false}, Boundary{4, 0.30, false},
                                           Boundary{0, 0.0, true}));

TEST(ElementDiffProperty, MatchesMultisetOracle) {
    gen::Rng rng(51);
    for (int i = 0; i < 3000; ++i) {
        auto a = gen::elements(rng, 12);
        auto b = gen::elements(rng, 12);
        ASSERT_EQ(element_diff(a, b), oracle::element_diff(a, b));
        EXPECT_EQ(element_diff(a, a), 0);
        EXPECT_EQ(element_diff(a, b), element_diff(b, a));
    }
}

TEST(Resolve, EmptyGraphIsUnmatched) {
    AppGraph g("B0", gen::keywords());
    SimilarityVerdict v = resolve_page(g, crafted(3, 0, 0));
    EXPECT_FALSE(v.matched_node);
    EXPECT_EQ(v.candidates_checked, 0u);
}

TEST(Resolve, PicksSimilarNodeAndReportsClosestOtherwise) {
    AppGraph g("B0", gen::keywords());
    NodeId root = g.add_root(crafted(6, 0, 0));
    NodeId other = g.insert_unique(root, make_click("Go", {0, 0, 10, 10}), crafted(0, 8, 500000, "o"));
    SimilarityVerdict v = resolve_page(g, crafted(0, 8, 500100, "o"));
    ASSERT_TRUE(v.matched_node);
    EXPECT_EQ(*v.matched_node, other);

    SimilarityVerdict miss = resolve_page(g, crafted(6, 6, 0, "m"));
    EXPECT_FALSE(miss.matched_node);
    EXPECT_EQ(miss.element_diff, 6);
    EXPECT_EQ(miss.pixel_diff, 0.0);
    EXPECT_EQ(miss.candidates_checked, 2u);
}

TEST(Resolve, RetrievalDepthIsFive) {
    AppGraph g("B0", gen::keywords());
    NodeId root = g.add_root(crafted(0, 6, 0, "r"));
    for (int i = 0; i < 9; ++i) {
        g.insert_unique(root, make_click("N" + std::to_string(i), {0, 0, 10, 10}),
                        crafted(0, 6, 1000 * (i + 1), "n" + std::to_string(i)));
    }
    SimilarityVerdict v = resolve_page(g, crafted(2, 0, 0));
    EXPECT_LE(v.candidates_checked, kRetrievalDepth);
    EXPECT_EQ(v.candidates_checked, 5u);
}
