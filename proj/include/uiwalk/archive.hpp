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

#ifndef UIWALK_ARCHIVE_HPP
#define UIWALK_ARCHIVE_HPP

#include <filesystem>
#include <string>

#include "uiwalk/graph.hpp"

namespace uiwalk {

// On-disk layout of one app graph:
//
//   <root>/<app>/manifest.json
//   <root>/<app>/pages/<page_name>/step_<k>.png
//   <root>/<app>/pages/<page_name>/step_<k>.xml
//
// where step k is the page after k actions of the node's trace.

inline constexpr int kArchiveVersion = 1;
inline constexpr std::string_view kArchiveFormat = "uiwalk-app-graph";

/// Deterministic JSON manifest (nodes, traces, edges, keywords).
std::string canonical_manifest(const AppGraph& graph);

/// `pages/<page_name>/step_<k>.<ext>` relative to the app directory.
std::string snapshot_path(std::string_view page_name, std::size_t step, std::string_view ext);

/// Writes `<root>/<app>/...`, replacing any previous archive of the same
/// app. Returns the app directory.
std::filesystem::path save_graph(const AppGraph& graph, const std::filesystem::path& root);

/// Reads an app directory written by save_graph; the BM25 index is rebuilt
/// in node order. Throws MissingArchive, CorruptArchive or VersionMismatch.
AppGraph load_graph(const std::filesystem::path& app_dir);

}  // namespace uiwalk

#endif  // UIWALK_ARCHIVE_HPP
