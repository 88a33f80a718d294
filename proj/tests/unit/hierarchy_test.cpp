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
#include <sstream>

#include "generators.hpp"
#include "uiwalk/errors.hpp"
#include "uiwalk/hierarchy.hpp"

using namespace uiwalk;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

std::string doc(const std::string& body) {
    return "<hierarchy rotation=\"0\"><node class=\"android.widget.FrameLayout\" bounds=\"[0,0][720,1280]\">" + body +
           "</node></hierarchy>";
}

ErrorCode code_of(const std::string& xml) {
    try {
        parse_hierarchy(xml);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidConfig;
}

}  // namespace

TEST(Hierarchy, MusicHomeYields38Elements) {
    auto page = parse_hierarchy(slurp(gen::fixture("music_home.xml")));
    ASSERT_EQ(page.elements.size(), 38u);
    std::array<int, 4> kinds{};
    for (const auto& e : page.elements) ++kinds[static_cast<std::size_t>(e.kind)];
    EXPECT_EQ(kinds[static_cast<std::size_t>(ElementKind::Clickable)], 29);
    EXPECT_EQ(kinds[static_cast<std::size_t>(ElementKind::Editable)], 2);
    EXPECT_EQ(kinds[static_cast<std::size_t>(ElementKind::Scrollable)], 6);
    EXPECT_EQ(kinds[static_cast<std::size_t>(ElementKind::Static)], 1);
    EXPECT_EQ(page.screen, kDefaultScreen);
}

TEST(Hierarchy, MusicHomeActionSpaceMatchesHandEnumeration) {
    auto page = parse_hierarchy(slurp(gen::fixture("music_home.xml")));
    auto actions = action_space(page);
    auto expected = lines(slurp(gen::fixture("music_home_actions.txt")));
    ASSERT_EQ(actions.size(), 55u);
    ASSERT_EQ(expected.size(), 55u);
    for (std::size_t i = 0; i < actions.size(); ++i) {
        EXPECT_EQ(to_string(actions[i]), expected[i]) << i;
    }
}

TEST(Hierarchy, SameBoundsWrapperCountsOnce) {
    auto page = parse_hierarchy(doc(
        "<node class=\"android.widget.LinearLayout\" clickable=\"true\" bounds=\"[0,100][720,200]\">"
        "<node class=\"android.widget.TextView\" text=\"Edit\" bounds=\"[0,100][720,200]\"/></node>"));
    ASSERT_EQ(page.elements.size(), 1u);
    EXPECT_EQ(page.elements[0].name, "Edit");
    EXPECT_EQ(page.elements[0].kind, ElementKind::Clickable);
}

TEST(Hierarchy, LabeledWrapperYieldsToDeepestNode) {
    auto page = parse_hierarchy(doc(
        "<node class=\"android.widget.LinearLayout\" clickable=\"true\" content-desc=\"row\" bounds=\"[0,100][720,200]\">"
        "<node class=\"android.widget.TextView\" text=\"Song\" bounds=\"[0,100][720,200]\"/></node>"));
    ASSERT_EQ(page.elements.size(), 1u);
    EXPECT_EQ(page.elements[0].name, "Song");
    EXPECT_EQ(page.elements[0].kind, ElementKind::Clickable);
}

TEST(Hierarchy, DifferentBoundsChildStaysStatic) {
    auto page = parse_hierarchy(doc(
        "<node class=\"android.widget.LinearLayout\" clickable=\"true\" bounds=\"[0,100][720,200]\">"
        "<node class=\"android.widget.TextView\" text=\"Label\" bounds=\"[10,110][300,190]\"/></node>"));
    ASSERT_EQ(page.elements.size(), 1u);
    EXPECT_EQ(page.elements[0].kind, ElementKind::Static);
    EXPECT_TRUE(action_space(page).empty());
}

TEST(Hierarchy, NamesAndKinds) {
    auto page = parse_hierarchy(doc(
        "<node class=\"android.widget.ImageView\" content-desc=\"  More   options \" clickable=\"true\" bounds=\"[0,0][10,10]\"/>"
        "<node class=\"android.widget.EditText\" text=\"Search\" focusable=\"true\" bounds=\"[0,20][100,60]\"/>"
        "<node class=\"android.widget.EditText\" text=\"Read only\" focusable=\"false\" bounds=\"[0,70][100,90]\"/>"
        "<node class=\"android.widget.ListView\" scrollable=\"true\" bounds=\"[0,100][720,900]\"/>"
        "<node class=\"android.widget.ImageView\" clickable=\"true\" bounds=\"[0,950][10,960]\"/>"));
    ASSERT_EQ(page.elements.size(), 4u);
    EXPECT_EQ(page.elements[0].name, "More options");
    EXPECT_EQ(page.elements[0].kind, ElementKind::Clickable);
    EXPECT_EQ(page.elements[1].kind, ElementKind::Editable);
    EXPECT_EQ(page.elements[2].kind, ElementKind::Static);
    EXPECT_EQ(page.elements[3].kind, ElementKind::Scrollable);
    EXPECT_EQ(page.elements[3].name, "");
    auto actions = action_space(page);
    ASSERT_EQ(actions.size(), 6u);
    EXPECT_EQ(to_string(actions[1]), "input(Search, [0,20][100,60], )");
    EXPECT_EQ(to_string(actions[5]), "scroll([0,100][720,900],right)");
}

TEST(Hierarchy, ClampsToScreen) {
    auto page = parse_hierarchy(doc("<node text=\"Wide\" bounds=\"[600,10][900,50]\"/>"));
    ASSERT_EQ(page.elements.size(), 1u);
    EXPECT_EQ(page.elements[0].bound, (BoundingBox{600, 10, 720, 50}));
}

TEST(Hierarchy, EmptyDocumentHasNoElements) {
    EXPECT_TRUE(parse_hierarchy("<hierarchy rotation=\"0\"/>").elements.empty());
}

TEST(Hierarchy, Errors) {
    EXPECT_EQ(code_of("<hierarchy><node"), ErrorCode::MalformedDocument);
    EXPECT_EQ(code_of("not xml at all"), ErrorCode::MalformedDocument);
    EXPECT_EQ(code_of(doc("<node text=\"x\" bounds=\"[1,2]\"/>")), ErrorCode::MalformedBounds);
    EXPECT_EQ(code_of(doc("<node text=\"x\" bounds=\"[50,50][10,10]\"/>")), ErrorCode::MalformedBounds);
}

TEST(Hierarchy, JsonSpecRenderingParsesBack) {
    std::vector<SimWidget> widgets(2);
    widgets[0].text = "A & <B>";
    widgets[0].bounds = {0, 0, 100, 100};
    widgets[0].clickable = true;
    widgets[1].text = "say \"hi\"";
    widgets[1].bounds = {0, 200, 100, 300};
    auto page = parse_hierarchy(render_hierarchy(widgets));
    ASSERT_EQ(page.elements.size(), 2u);
    EXPECT_EQ(page.elements[0].name, "A & <B>");
    EXPECT_EQ(page.elements[1].name, "say \"hi\"");
}
