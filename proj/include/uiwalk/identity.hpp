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

#ifndef UIWALK_IDENTITY_HPP
#define UIWALK_IDENTITY_HPP

#include <optional>
#include <span>
#include <vector>

#include "uiwalk/graph.hpp"
#include "uiwalk/page.hpp"

namespace uiwalk {

/// Two pages are the same page when element_diff < 5 and pixel_diff < 0.30.
struct IdentityThresholds {
    int element_diff_below = 5;
    double pixel_diff_below = 0.30;

    bool similar(int element_diff, double pixel_diff) const {
        return element_diff < element_diff_below && pixel_diff < pixel_diff_below;
    }
};

inline constexpr std::size_t kRetrievalDepth = 5;

/// Size of the multiset symmetric difference, elements compared on
/// (name, bound, kind).
int element_diff(std::span<const Element> a, std::span<const Element> b);

/// Fraction of positions whose RGB differs. Throws DimensionMismatch.
double pixel_diff(const Raster& a, const Raster& b);

bool pages_similar(const UiPage& a, const UiPage& b, const IdentityThresholds& t = {});

/// Top-5 BM25 neighbours of a hierarchy document among the graph's nodes.
/// Throws EmptyIndex for a graph without nodes.
std::vector<ScoredDoc> bm25_top5(const Bm25Index& index, std::string_view query_doc);

struct SimilarityVerdict {
    std::optional<NodeId> matched_node;
    int element_diff = 0;
    double pixel_diff = 0.0;
    std::size_t candidates_checked = 0;
};

/// First BM25 neighbour, in rank order, that passes both thresholds. When
/// none does, the diffs describe the closest candidate (lowest element
/// diff, then lowest pixel diff). An empty graph yields an unmatched
/// verdict with zero candidates.
SimilarityVerdict resolve_page(const AppGraph& graph, const UiPage& candidate,
                               const IdentityThresholds& t = {});

}  // namespace uiwalk

#endif  // UIWALK_IDENTITY_HPP
