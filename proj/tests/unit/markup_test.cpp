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
#include "uiwalk/markup.hpp"

using namespace uiwalk;

TEST(Markup, FormatsRefBox) {
    EXPECT_EQ(format_ref_box({"city", {24, 391, 136, 432}}), "<ref>city</ref><box>(24,391),(136,432)</box>");
    EXPECT_EQ(format_ref_box({"Cancel", {640, 74, 696, 112}}), "<ref>Cancel</ref><box>(640,74),(696,112)</box>");
    EXPECT_EQ(format_paren_box({1, 2, 3, 4}), "(1,2),(3,4)");
}

TEST(Markup, ParsesRefBox) {
    RefBox r = parse_ref_box("<ref>city</ref><box>(24,391),(136,432)</box>");
    EXPECT_EQ(r.name, "city");
    EXPECT_EQ(r.box, (BoundingBox{24, 391, 136, 432}));
}

TEST(Markup, RejectsMalformed) {
    for (const char* bad : {"", "<ref>a</ref>", "<ref>a</ref><box>(1,2),(3)</box>", "<box>(1,2),(3,4)</box>",
                            "<ref>a</ref><box>(1,2),(3,4)</box>tail"}) {
        try {
            parse_ref_box(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::MalformedMarkup) << bad;
        }
    }
}

TEST(MarkupProperty, RoundTrip) {
    gen::Rng rng(21);
    std::vector<RefBox> items;
    std::string text;
    for (int i = 0; i < 300; ++i) {
        RefBox r{gen::name(rng), gen::box(rng)};
        ASSERT_EQ(parse_ref_box(format_ref_box(r)), r);
        if (i) text += '\n';
        text += format_ref_box(r);
        items.push_back(r);
    }
    EXPECT_EQ(parse_ref_box_lines(text), items);
    EXPECT_TRUE(parse_ref_box_lines("").empty());
}

TEST(Markup, FindsBoxInFreeText) {
    EXPECT_EQ(find_box("The answer is <box>(1,2),(30,40)</box>."), (BoundingBox{1, 2, 30, 40}));
    EXPECT_EQ(find_box("click(Edit, [40,200][680,300])"), (BoundingBox{40, 200, 680, 300}));
    EXPECT_EQ(find_box("tap at (50,60)"), (BoundingBox{50, 60, 50, 60}));
    EXPECT_FALSE(find_box("nothing here").has_value());
}
