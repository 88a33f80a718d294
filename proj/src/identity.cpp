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

#include "uiwalk/identity.hpp"

#include <algorithm>

#include "uiwalk/errors.hpp"

namespace uiwalk {

int element_diff(std::span<const Element> a, std::span<const Element> b) {
    std::vector<const Element*> x;
    std::vector<const Element*> y;
    x.reserve(a.size());
    y.reserve(b.size());
    for (const auto& e : a) x.push_back(&e);
    for (const auto& e : b) y.push_back(&e);
    auto less = [](const Element* p, const Element* q) { return *p < *q; };
    std::sort(x.begin(), x.end(), less);
    std::sort(y.begin(), y.end(), less);

    int diff = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
        if (*x[i] == *y[j]) {
            ++i;
            ++j;
        } else if (*x[i] < *y[j]) {
            ++diff;
            ++i;
        } else {
            ++diff;
            ++j;
        }
    }
    return diff + static_cast<int>((x.size() - i) + (y.size() - j));
}

double pixel_diff(const Raster& a, const Raster& b) {
    std::int64_t differing = count_differing_pixels(a, b);
    std::int64_t total = static_cast<std::int64_t>(a.width()) * a.height();
    return total == 0 ? 0.0 : static_cast<double>(differing) / static_cast<double>(total);
}

bool pages_similar(const UiPage& a, const UiPage& b, const IdentityThresholds& t) {
    if (a.same_capture(b)) {
        return true;
    }
    int ed = element_diff(a.elements(), b.elements());
    if (ed >= t.element_diff_below) {
        return false;
    }
    return t.similar(ed, pixel_diff(a.screenshot(), b.screenshot()));
}

std::vector<ScoredDoc> bm25_top5(const Bm25Index& index, std::string_view query_doc) {
    auto terms = hierarchy_terms(query_doc);
    return index.top_k(terms, kRetrievalDepth);
}

SimilarityVerdict resolve_page(const AppGraph& graph, const UiPage& candidate,
                               const IdentityThresholds& t) {
    SimilarityVerdict verdict;
    if (graph.empty()) {
        return verdict;
    }
    auto neighbours = bm25_top5(graph.index(), candidate.hierarchy());
    bool have_best = false;
    for (const auto& hit : neighbours) {
        const Node& node = graph.node(NodeId{hit.doc});
        const UiPage& known = node.canonical_page();
        int ed = element_diff(candidate.elements(), known.elements());
        double pd = pixel_diff(candidate.screenshot(), known.screenshot());
        ++verdict.candidates_checked;
        if (t.similar(ed, pd)) {
            verdict.matched_node = node.id;
            verdict.element_diff = ed;
            verdict.pixel_diff = pd;
            return verdict;
        }
        if (!have_best || ed < verdict.element_diff ||
            (ed == verdict.element_diff && pd < verdict.pixel_diff)) {
            verdict.element_diff = ed;
            verdict.pixel_diff = pd;
            have_best = true;
        }
    }
    return verdict;
}

}  // namespace uiwalk
