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

#include "uiwalk/archive.hpp"

#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>

#include "uiwalk/errors.hpp"
#include "uiwalk/png.hpp"

namespace uiwalk {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json edge_endpoint(NodeId id) {
    if (id == kExternalNode) {
        return std::string(kExternalNodeName);
    }
    return index_of(id);
}

void write_file(const fs::path& path, const void* data, std::size_t size) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    if (!out) {
        throw Error(ErrorCode::InvalidConfig, "cannot write " + path.string());
    }
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::CorruptArchive, "missing file " + path.string());
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

[[noreturn]] void corrupt(const std::string& what) {
    throw Error(ErrorCode::CorruptArchive, what);
}

}  // namespace

std::string snapshot_path(std::string_view page_name, std::size_t step, std::string_view ext) {
    std::string path = "pages/";
    path += page_name;
    path += "/step_";
    path += std::to_string(step);
    path += '.';
    path += ext;
    return path;
}

std::string canonical_manifest(const AppGraph& graph) {
    json doc;
    doc["format"] = kArchiveFormat;
    doc["version"] = kArchiveVersion;
    doc["app"] = graph.app_name();
    doc["keywords"] = graph.keywords();
    doc["next_action_id"] = graph.next_action_id();

    json nodes = json::array();
    for (const auto& node : graph.nodes()) {
        json trace = json::array();
        for (const auto& step : node.trace.steps) {
            trace.push_back({{"id", step.action.id.value_or(0)}, {"action", to_string(step.action)}});
        }
        nodes.push_back({{"id", index_of(node.id)},
                         {"page_name", node.page_name},
                         {"quarantined", node.quarantined},
                         {"trace", std::move(trace)}});
    }
    doc["nodes"] = std::move(nodes);

    json edges = json::array();
    for (const auto& edge : graph.edges()) {
        edges.push_back({{"src", edge_endpoint(edge.src)},
                         {"dst", edge_endpoint(edge.dst)},
                         {"action_id", edge.action.id.value_or(0)},
                         {"action", to_string(edge.action)}});
    }
    doc["edges"] = std::move(edges);
    return doc.dump(2) + "\n";
}

fs::path save_graph(const AppGraph& graph, const fs::path& root) {
    const std::string& app = graph.app_name();
    if (app.find_first_of("/\\") != std::string::npos || app == "." || app == "..") {
        throw Error(ErrorCode::InvalidConfig, "app name is not a valid directory name: " + app);
    }
    fs::path app_dir = root / app;
    std::error_code ec;
    fs::remove_all(app_dir / "pages", ec);
    fs::create_directories(app_dir / "pages");

    for (const auto& node : graph.nodes()) {
        fs::create_directories(app_dir / "pages" / node.page_name);
        for (std::size_t k = 0; k < node.trace.snapshot_count(); ++k) {
            const UiPage& page = node.trace.snapshot(k);
            auto png = encode_png(page.screenshot());
            write_file(app_dir / snapshot_path(node.page_name, k, "png"), png.data(), png.size());
            write_file(app_dir / snapshot_path(node.page_name, k, "xml"), page.hierarchy().data(),
                       page.hierarchy().size());
        }
    }
    std::string manifest = canonical_manifest(graph);
    write_file(app_dir / "manifest.json", manifest.data(), manifest.size());
    return app_dir;
}

AppGraph load_graph(const fs::path& app_dir) {
    fs::path manifest_path = app_dir / "manifest.json";
    if (!fs::exists(manifest_path)) {
        throw Error(ErrorCode::MissingArchive, "no manifest.json under " + app_dir.string());
    }
    json doc;
    try {
        doc = json::parse(read_file(manifest_path));
    } catch (const json::exception& e) {
        corrupt(std::string("manifest: ") + e.what());
    }

    try {
        if (doc.value("format", std::string()) != kArchiveFormat) {
            corrupt("manifest format tag missing");
        }
        int version = doc.at("version").get<int>();
        if (version != kArchiveVersion) {
            throw Error(ErrorCode::VersionMismatch, "archive version " + std::to_string(version) +
                                                        ", expected " + std::to_string(kArchiveVersion));
        }
        AppGraph graph(doc.at("app").get<std::string>(), doc.at("keywords").get<std::vector<std::string>>());

        auto load_page = [&](const std::string& name, std::size_t k) {
            std::string png = read_file(app_dir / snapshot_path(name, k, "png"));
            std::string xml = read_file(app_dir / snapshot_path(name, k, "xml"));
            Raster shot = decode_png(std::span(reinterpret_cast<const std::uint8_t*>(png.data()), png.size()));
            return UiPage(std::move(shot), std::move(xml));
        };

        const auto& nodes = doc.at("nodes");
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto& n = nodes[i];
            if (n.at("id").get<std::size_t>() != i) {
                corrupt("node ids are not dense at position " + std::to_string(i));
            }
            std::string name = n.at("page_name").get<std::string>();
            ActionTrace trace{load_page(name, 0), {}};
            const auto& steps = n.at("trace");
            for (std::size_t k = 0; k < steps.size(); ++k) {
                Action action = parse_action(steps[k].at("action").get<std::string>());
                action.id = steps[k].at("id").get<ActionId>();
                trace.steps.push_back(TraceStep{std::move(action), load_page(name, k + 1)});
            }
            NodeId id = graph.restore_node(std::move(trace), n.at("quarantined").get<bool>());
            if (graph.node(id).page_name != name) {
                corrupt("page name " + name + " does not match its trace");
            }
        }

        auto endpoint = [](const json& v) -> NodeId {
            if (v.is_string()) {
                if (v.get<std::string>() != kExternalNodeName) corrupt("bad edge endpoint");
                return kExternalNode;
            }
            return NodeId{v.get<std::uint32_t>()};
        };
        for (const auto& e : doc.at("edges")) {
            Action action = parse_action(e.at("action").get<std::string>());
            action.id = e.at("action_id").get<ActionId>();
            graph.restore_edge(Edge{endpoint(e.at("src")), endpoint(e.at("dst")), std::move(action)});
        }
        graph.reserve_action_ids(doc.at("next_action_id").get<ActionId>());
        return graph;
    } catch (const json::exception& e) {
        corrupt(std::string("manifest: ") + e.what());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::VersionMismatch || e.code() == ErrorCode::CorruptArchive) {
            throw;
        }
        corrupt(e.what());
    }
}

}  // namespace uiwalk
