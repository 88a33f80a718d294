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
#include "uiwalk/archive.hpp"
#include "uiwalk/errors.hpp"
#include "uiwalk/explorer.hpp"
#include "uiwalk/sim.hpp"

using namespace uiwalk;
namespace fs = std::filesystem;

namespace {

AppGraph explored(const std::string& fixture) {
    SimulatedDriver driver(SimulatedAppSpec::load(gen::fixture(fixture)));
    ExplorationConfig config;
    config.keywords = gen::keywords();
    config.rng_seed = 3;
    return explore_app(driver, driver.spec().app, config);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void overwrite(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

ErrorCode load_code(const fs::path& dir) {
    try {
        load_graph(dir);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidConfig;
}

}  // namespace

TEST(Archive, RoundTrip) {
    AppGraph g = explored("alias_app.json");
    fs::path root = gen::temp_dir("archive");
    fs::path dir = save_graph(g, root);
    EXPECT_EQ(dir, root / "Alias0");
    EXPECT_TRUE(fs::exists(dir / "pages" / g.node(NodeId{0}).page_name / "step_0.png"));

    AppGraph back = load_graph(dir);
    EXPECT_EQ(canonical_manifest(back), canonical_manifest(g));
    ASSERT_EQ(back.node_count(), g.node_count());
    for (std::size_t i = 0; i < g.node_count(); ++i) {
        const Node& a = g.nodes()[i];
        const Node& b = back.nodes()[i];
        ASSERT_EQ(a.trace.snapshot_count(), b.trace.snapshot_count());
        for (std::size_t k = 0; k < a.trace.snapshot_count(); ++k) {
            EXPECT_EQ(a.trace.snapshot(k), b.trace.snapshot(k));
        }
    }
    EXPECT_EQ(back.index().size(), g.node_count());
    EXPECT_EQ(back.next_action_id(), g.next_action_id());
    fs::remove_all(root);
}

TEST(Archive, SavingTwiceIsByteIdentical) {
    AppGraph g = explored("three_page_app.json");
    fs::path r1 = gen::temp_dir("det1"), r2 = gen::temp_dir("det2");
    save_graph(g, r1);
    save_graph(g, r2);
    for (const auto& entry : fs::recursive_directory_iterator(r1)) {
        if (!entry.is_regular_file()) continue;
        fs::path rel = fs::relative(entry.path(), r1);
        EXPECT_EQ(slurp(entry.path()), slurp(r2 / rel)) << rel;
    }
    fs::remove_all(r1);
    fs::remove_all(r2);
}

TEST(Archive, Errors) {
    fs::path root = gen::temp_dir("archive_err");
    EXPECT_EQ(load_code(root / "nothing"), ErrorCode::MissingArchive);

    AppGraph g = explored("three_page_app.json");
    fs::path dir = save_graph(g, root);
    std::string manifest = slurp(dir / "manifest.json");

    overwrite(dir / "manifest.json", "{ not json");
    EXPECT_EQ(load_code(dir), ErrorCode::CorruptArchive);

    std::string bumped = manifest;
    bumped.replace(bumped.find("\"version\": 1"), 12, "\"version\": 9");
    overwrite(dir / "manifest.json", bumped);
    EXPECT_EQ(load_code(dir), ErrorCode::VersionMismatch);

    overwrite(dir / "manifest.json", manifest);
    const std::string name = g.nodes()[1].page_name;
    fs::remove(dir / "pages" / name / "step_1.png");
    EXPECT_EQ(load_code(dir), ErrorCode::CorruptArchive);

    save_graph(g, root);
    std::string renamed = manifest;
    auto at = renamed.find("\"page_name\": \"" + name + "\"");
    ASSERT_NE(at, std::string::npos);
    renamed.replace(at, 14 + name.size() + 1, "\"page_name\": \"Tri0\"");
    overwrite(dir / "manifest.json", renamed);
    EXPECT_EQ(load_code(dir), ErrorCode::CorruptArchive);
    fs::remove_all(root);
}

TEST(Archive, SnapshotPath) { EXPECT_EQ(snapshot_path("Baicizhan0_1_25", 2, "png"), "pages/Baicizhan0_1_25/step_2.png"); }
