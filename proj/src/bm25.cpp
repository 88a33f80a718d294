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

#include "uiwalk/bm25.hpp"

#include <expat.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "uiwalk/errors.hpp"
#include "uiwalk/text.hpp"

namespace uiwalk {

namespace {

void push_bigrams(std::string_view value, std::vector<std::string>& out) {
    std::size_t start = 0;
    while (start < value.size()) {
        std::size_t end = value.find_first_of(" \t\r\n", start);
        if (end == std::string_view::npos) end = value.size();
        if (end > start) {
            auto cps = utf8_codepoints(value.substr(start, end - start));
            if (cps.size() == 1) {
                out.emplace_back(cps[0]);
            }
            for (std::size_t i = 0; i + 1 < cps.size(); ++i) {
                std::string bigram(cps[i]);
                bigram += cps[i + 1];
                out.push_back(std::move(bigram));
            }
        }
        start = end + 1;
    }
}

void on_term_start(void* user, const XML_Char* tag, const XML_Char** attrs) {
    auto& out = *static_cast<std::vector<std::string>*>(user);
    out.emplace_back(tag);
    for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
        std::string_view key = attrs[i];
        std::string_view value = attrs[i + 1];
        out.emplace_back(key);
        if (key == "class") {
            if (!value.empty()) out.emplace_back(value);
        } else if (key == "text" || key == "content-desc" || key == "resource-id") {
            push_bigrams(value, out);
        }
    }
}

void on_term_text(void* user, const XML_Char* s, int len) {
    push_bigrams(std::string_view(s, static_cast<std::size_t>(len)),
                 *static_cast<std::vector<std::string>*>(user));
}

}  // namespace

std::vector<std::string> hierarchy_terms(std::string_view doc) {
    std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate("UTF-8"), &XML_ParserFree);
    std::vector<std::string> terms;
    XML_SetUserData(parser.get(), &terms);
    XML_SetStartElementHandler(parser.get(), &on_term_start);
    XML_SetCharacterDataHandler(parser.get(), &on_term_text);
    if (XML_Parse(parser.get(), doc.data(), static_cast<int>(doc.size()), XML_TRUE) != XML_STATUS_OK) {
        throw Error(ErrorCode::MalformedDocument, XML_ErrorString(XML_GetErrorCode(parser.get())));
    }
    return terms;
}

std::uint32_t Bm25Index::add(std::span<const std::string> terms) {
    auto doc = static_cast<std::uint32_t>(doc_len_.size());
    std::unordered_map<std::uint32_t, std::uint32_t> counts;
    std::vector<std::uint32_t> order;
    for (const auto& term : terms) {
        auto [it, inserted] = term_ids_.try_emplace(term, static_cast<std::uint32_t>(postings_.size()));
        if (inserted) {
            postings_.emplace_back();
        }
        if (counts[it->second]++ == 0) {
            order.push_back(it->second);
        }
    }
    for (auto id : order) {
        postings_[id].push_back(Posting{doc, counts[id]});
    }
    doc_len_.push_back(static_cast<std::uint32_t>(terms.size()));
    total_len_ += terms.size();
    return doc;
}

bool scores_tie(double a, double b) {
    return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

std::vector<ScoredDoc> Bm25Index::top_k(std::span<const std::string> query, std::size_t k) const {
    const std::size_t n_docs = doc_len_.size();
    if (n_docs == 0) {
        throw Error(ErrorCode::EmptyIndex, "no documents indexed");
    }
    const double k1 = params_.k1;
    const double b = params_.b;
    const double avgdl = static_cast<double>(total_len_) / static_cast<double>(n_docs);

    std::vector<double> norm(n_docs);
    for (std::size_t d = 0; d < n_docs; ++d) {
        double rel = avgdl > 0 ? static_cast<double>(doc_len_[d]) / avgdl : 0.0;
        norm[d] = k1 * (1.0 - b + b * rel);
    }

    // Unique query terms in first-occurrence order with their multiplicity.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> qterms;
    std::unordered_map<std::uint32_t, std::size_t> slot;
    for (const auto& term : query) {
        auto it = term_ids_.find(term);
        if (it == term_ids_.end()) continue;
        auto [s, inserted] = slot.try_emplace(it->second, qterms.size());
        if (inserted) {
            qterms.emplace_back(it->second, 1);
        } else {
            ++qterms[s->second].second;
        }
    }

    std::vector<double> scores(n_docs, 0.0);
    for (auto [term, qf] : qterms) {
        const auto& plist = postings_[term];
        double df = static_cast<double>(plist.size());
        double idf = std::log(1.0 + (static_cast<double>(n_docs) - df + 0.5) / (df + 0.5));
        double weight = idf * static_cast<double>(qf);
        for (const auto& p : plist) {
            double tf = static_cast<double>(p.tf);
            scores[p.doc] += weight * (tf * (k1 + 1.0) / (tf + norm[p.doc]));
        }
    }

    auto higher = [&](std::uint32_t a, std::uint32_t c) {
        if (scores[a] != scores[c]) return scores[a] > scores[c];
        return a < c;
    };
    std::vector<std::uint32_t> ids(n_docs);
    std::iota(ids.begin(), ids.end(), 0u);
    std::size_t take = std::min(k, n_docs);
    std::partial_sort(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(take), ids.end(), higher);

    // Neighbouring scores that agree to within kTieTolerance are one tie
    // group, ordered by insertion. Groups start at their highest score.
    std::size_t lead = 0;
    for (std::size_t i = 0; i < take; ++i) {
        if (!scores_tie(scores[ids[lead]], scores[ids[i]])) {
            std::sort(ids.begin() + static_cast<std::ptrdiff_t>(lead), ids.begin() + static_cast<std::ptrdiff_t>(i));
            lead = i;
        }
    }
    if (take > 0) {
        const double top = scores[ids[lead]];
        auto end = std::partition(ids.begin() + static_cast<std::ptrdiff_t>(take), ids.end(),
                                  [&](std::uint32_t d) { return scores_tie(top, scores[d]); });
        std::sort(ids.begin() + static_cast<std::ptrdiff_t>(lead), end);
    }
    std::vector<ScoredDoc> out;
    out.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
        out.push_back(ScoredDoc{ids[i], scores[ids[i]]});
    }
    return out;
}

}  // namespace uiwalk
