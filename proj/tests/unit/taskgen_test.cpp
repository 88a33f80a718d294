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

#include <fstream>
#include <set>
#include <sstream>

#include "generators.hpp"
#include "uiwalk/explorer.hpp"
#include "uiwalk/markup.hpp"
#include "uiwalk/sim.hpp"
#include "uiwalk/taskgen.hpp"

using namespace uiwalk;

namespace {

SimWidget widget(std::string text, BoundingBox b, bool clickable = true) {
    SimWidget w;
    w.text = std::move(text);
    w.bounds = b;
    w.clickable = clickable;
    return w;
}

UiPage page_of(std::vector<SimWidget> ws, Rgb bg) {
    SimulatedState s{render_hierarchy(ws), bg, {}};
    return UiPage(render_state(s), s.hierarchy);
}

// Root "Baicizhan0" holding Cancel, Edit, a Destination field and a list,
// with one edge of each kind plus a self-loop and an external hop.
AppGraph hand_graph() {
    AppGraph g("Baicizhan0", gen::keywords());
    SimWidget dest = widget("Destination", {84, 57, 568, 129}, false);
    dest.cls = "android.widget.EditText";
    dest.focusable = true;
    SimWidget list;
    list.cls = "android.widget.ListView";
    list.bounds = {0, 211, 720, 271};
    list.scrollable = true;
    NodeId root = g.add_root(page_of({widget("Cancel", {640, 74, 696, 112}), widget("Edit", {40, 400, 680, 500}), dest, list},
                                     {255, 255, 255}));

    Action edit = make_click("Edit", {40, 400, 680, 500});
    g.insert_unique(root, edit, page_of({widget("Saved", {40, 60, 680, 140})}, {0, 0, 0}));
    Action in = make_input("Destination", {84, 57, 568, 129}, "北京");
    g.insert_unique(root, in, page_of({}, {10, 10, 10}));
    Action scroll = make_scroll({0, 211, 720, 271}, ScrollDirection::Up);
    scroll.id = g.allocate_action_id();
    g.redirect_edge(root, scroll, root);
    Action cancel = make_click("Cancel", {640, 74, 696, 112});
    cancel.id = g.allocate_action_id();
    g.add_external_edge(root, cancel);
    return g;
}

AppGraph explored_alias(std::uint64_t seed = 3) {
    SimulatedDriver driver(SimulatedAppSpec::load(gen::fixture("alias_app.json")));
    ExplorationConfig c;
    c.keywords = gen::keywords();
    c.rng_seed = seed;
    return explore_app(driver, driver.spec().app, c);
}

}  // namespace

TEST(ElementList, CancelMarkup) {
    AppGraph g("A0", gen::keywords());
    g.add_root(page_of({widget("Cancel", {640, 74, 696, 112})}, {1, 2, 3}));
    auto records = gen_element_list(g);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].answer, "<ref>Cancel</ref><box>(640,74),(696,112)</box>");
    EXPECT_EQ(records[0].images, std::vector<std::string>{"A0/pages/A0/step_0.png"});
    EXPECT_EQ(records[0].id, "A0/element_list/0");
}

TEST(ElementList, EmptyPageIsFlagged) {
    AppGraph g("A0", gen::keywords());
    g.add_root(page_of({}, {1, 2, 3}));
    auto records = gen_element_list(g);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_EQ(records[0].answer, "");
    EXPECT_TRUE(records[0].meta.value("empty", false));
    EXPECT_EQ(gen_action_space(g)[0].answer, "");
}

TEST(ActionSpace, MusicFixtureHas55Lines) {
    std::ifstream in(gen::fixture("music_home.xml"));
    std::string xml((std::istreambuf_iterator<char>(in)), {});
    AppGraph g("M0", gen::keywords());
    g.add_root(UiPage(RasterCanvas(720, 1280, Rgb{0, 0, 0}).render(), xml));
    auto records = gen_action_space(g);
    ASSERT_EQ(records.size(), 1u);
    std::vector<std::string> lines;
    std::string line;
    std::istringstream ss(records[0].answer);
    while (std::getline(ss, line)) lines.push_back(line);
    EXPECT_EQ(lines.size(), 55u);
    std::ifstream want_in(gen::fixture("music_home_actions.txt"));
    std::vector<std::string> want;
    while (std::getline(want_in, line)) {
        if (!line.empty()) want.push_back(line);
    }
    EXPECT_EQ(lines, want);
}

TEST(Grounding, SamplesAtMostFiveDistinct) {
    std::vector<SimWidget> many, few;
    for (int i = 0; i < 40; ++i) many.push_back(widget("Item " + std::to_string(i), {0, 30 * i, 700, 30 * i + 20}));
    for (int i = 0; i < 3; ++i) few.push_back(widget("Few " + std::to_string(i), {0, 30 * i, 700, 30 * i + 20}));
    AppGraph g("G0", gen::keywords());
    NodeId root = g.add_root(page_of(many, {1, 1, 1}));
    g.insert_unique(root, make_click("Item 0", {0, 0, 700, 20}), page_of(few, {2, 2, 2}));

    auto records = gen_grounding(g, 77);
    ASSERT_EQ(records.size(), 8u);
    std::set<std::string> first;
    for (int i = 0; i < 5; ++i) {
        EXPECT_EQ(records[i].meta["node"], 0);
        first.insert(records[i].answer);
        RefBox rb = parse_ref_box(records[i].answer);
        EXPECT_NE(records[i].prompt.find(rb.name), std::string::npos);
    }
    EXPECT_EQ(first.size(), 5u);
    auto again = gen_grounding(g, 77);
    for (std::size_t i = 0; i < again.size(); ++i) EXPECT_EQ(again[i].to_json(), records[i].to_json());
}

TEST(Grounding, DeterministicPerSeed) {
    AppGraph g = explored_alias();
    auto a = gen_grounding(g, 5), b = gen_grounding(g, 5), c = gen_grounding(g, 6);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json(), b[i].to_json());
    bool differs = false;
    for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i) differs |= a[i].answer != c[i].answer;
    EXPECT_TRUE(differs);
}

TEST(ActionPrediction, SkipsSelfLoopsAndExternalHops) {
    AppGraph g = hand_graph();
    auto records = gen_action_prediction(g);
    ASSERT_EQ(records.size(), 2u);
    EXPECT_EQ(records[0].answer, "click(Edit, [40,400][680,500])");
    EXPECT_EQ(records[0].images.size(), 2u);
    EXPECT_EQ(records[0].images[0], "Baicizhan0/pages/Baicizhan0/step_0.png");
    EXPECT_EQ(records[0].images[1], "Baicizhan0/pages/Baicizhan0_1/step_1.png");
}

TEST(Navigation, TemplatesAndAnswers) {
    AppGraph g = hand_graph();
    auto records = gen_navigation(g);
    ASSERT_EQ(records.size(), 4u);
    EXPECT_EQ(records[0].prompt, "打开「Edit」");
    EXPECT_EQ(records[1].answer, "input(Destination, [84,57][568,129], 北京)");
    EXPECT_EQ(records[1].prompt, "在「Destination」中输入「北京」");
    EXPECT_EQ(records[2].answer, "scroll([0,211][720,271],up)");
    EXPECT_EQ(records[2].prompt, "向上滑动");
    EXPECT_EQ(records[3].meta["dst"], "__external__");
    for (const auto& r : records) {
        EXPECT_EQ(r.images.size(), 1u);
        EXPECT_EQ(r.meta["template_version"], kTemplateVersion);
    }
    EXPECT_EQ(navigation_instruction(make_click("", {1, 2, 3, 4})), "点击位置(1,2),(3,4)");
}

TEST(Corpus, CountInvariantsOnExploredGraph) {
    AppGraph g = explored_alias();
    TaskCorpus c = generate_tasks(g, 1);
    GraphStats s = g.stats();
    EXPECT_EQ(c[TaskKind::ElementList].size(), g.node_count());
    EXPECT_EQ(c[TaskKind::ActionSpace].size(), g.node_count());
    EXPECT_EQ(c[TaskKind::ActionPrediction].size(), s.edge_count - s.self_loops - s.external_edges);
    EXPECT_EQ(c[TaskKind::Navigation].size(), s.edge_count);
    std::size_t grounding = 0;
    for (const Node& n : g.nodes()) grounding += std::min<std::size_t>(5, labeled_elements(n.canonical_page()).size());
    EXPECT_EQ(c[TaskKind::Grounding].size(), grounding);
    EXPECT_LE(c[TaskKind::Grounding].size(), 5 * c[TaskKind::ElementList].size());
}

TEST(Corpus, AnswersRoundTripThroughParsers) {
    AppGraph g = explored_alias();
    TaskCorpus c = generate_tasks(g, 2);
    for (TaskKind k : kTaskKinds) {
        for (const auto& r : c[k]) {
            switch (k) {
                case TaskKind::ElementList: {
                    std::string again;
                    for (const auto& rb : parse_ref_box_lines(r.answer)) {
                        if (!again.empty()) again += '\n';
                        again += format_ref_box(rb);
                    }
                    EXPECT_EQ(again, r.answer);
                    break;
                }
                case TaskKind::Grounding: EXPECT_EQ(format_ref_box(parse_ref_box(r.answer)), r.answer); break;
                case TaskKind::ActionSpace: {
                    std::istringstream ss(r.answer);
                    std::string line;
                    while (std::getline(ss, line)) EXPECT_EQ(to_string(parse_action(line)), line);
                    break;
                }
                default: EXPECT_EQ(to_string(parse_action(r.answer)), r.answer);
            }
            EXPECT_EQ(TaskRecord::from_json(r.to_json()).to_json(), r.to_json());
        }
    }
}

TEST(Corpus, WriteAndRead) {
    AppGraph g = explored_alias();
    TaskCorpus c = generate_tasks(g, 4);
    TaskCorpus merged;
    merge_corpus(merged, c);
    merge_corpus(merged, generate_tasks(g, 4));
    EXPECT_EQ(merged[TaskKind::Navigation].size(), 2 * c[TaskKind::Navigation].size());

    auto dir = gen::temp_dir("corpus");
    write_corpus(c, dir);
    for (TaskKind k : kTaskKinds) {
        auto back = read_records(dir / (std::string(to_string(k)) + ".jsonl"));
        ASSERT_EQ(back.size(), c[k].size());
        for (std::size_t i = 0; i < back.size(); ++i) EXPECT_EQ(back[i].to_json(), c[k][i].to_json());
    }
    std::ifstream in(dir / "manifest.json");
    auto manifest = nlohmann::json::parse(in);
    EXPECT_EQ(manifest["template_version"], kTemplateVersion);
    EXPECT_EQ(manifest["counts"]["navigation"], c[TaskKind::Navigation].size());
    std::filesystem::remove_all(dir);
}

TEST(TaskKindNames, RoundTrip) {
    for (TaskKind k : kTaskKinds) EXPECT_EQ(parse_task_kind(to_string(k)), k);
    EXPECT_THROW(parse_task_kind("vqa"), Error);
}
