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

#ifndef UIWALK_BM25_HPP
#define UIWALK_BM25_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace uiwalk {

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
};

/// Relative gap below which two scores count as equal, so that ties in
/// exact arithmetic survive floating-point rounding.
inline constexpr double kTieTolerance = 1e-9;

bool scores_tie(double a, double b);

struct ScoredDoc {
    std::uint32_t doc = 0;
    double score = 0.0;
};

/// Retrieval terms of a view hierarchy: every tag and attribute name as a
/// token, the class value as one token, and the text / content-desc /
/// resource-id values as codepoint bigrams per whitespace word (a
/// one-codepoint word stays a unigram). No segmenter is needed for CJK.
/// Throws MalformedDocument.
std::vector<std::string> hierarchy_terms(std::string_view doc);

/// Append-only Okapi BM25 inverted index.
///
/// idf(t) = ln(1 + (N - n_t + 0.5) / (n_t + 0.5)), which stays positive
/// for terms present in most documents. Collection statistics are read at
/// query time, so scores always reflect the current corpus.
class Bm25Index {
public:
    explicit Bm25Index(Bm25Params params = {}) : params_(params) {}

    /// Returns the new document's index (insertion order).
    std::uint32_t add(std::span<const std::string> terms);

    /// Up to k documents by descending score; equal scores keep insertion
    /// order. Repeated query terms count once per occurrence. Throws
    /// EmptyIndex when nothing has been added.
    std::vector<ScoredDoc> top_k(std::span<const std::string> query, std::size_t k = 5) const;

    std::size_t size() const { return doc_len_.size(); }
    const Bm25Params& params() const { return params_; }

private:
    struct Posting {
        std::uint32_t doc;
        std::uint32_t tf;
    };

    Bm25Params params_;
    std::unordered_map<std::string, std::uint32_t> term_ids_;
    std::vector<std::vector<Posting>> postings_;
    std::vector<std::uint32_t> doc_len_;
    std::uint64_t total_len_ = 0;
};

}  // namespace uiwalk

#endif  // UIWALK_BM25_HPP
