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

#include "uiwalk/metrics.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>

#include "uiwalk/errors.hpp"
#include "uiwalk/markup.hpp"
#include "uiwalk/text.hpp"

namespace uiwalk {

using nlohmann::json;

double token_f1(std::string_view prediction, std::string_view gold) {
    auto p = scoring_tokens(prediction);
    auto g = scoring_tokens(gold);
    if (p.empty() || g.empty()) return 0.0;
    std::unordered_map<std::string, long> counts;
    for (const auto& t : g) ++counts[t];
    long common = 0;
    for (const auto& t : p) {
        auto it = counts.find(t);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++common;
        }
    }
    if (common == 0) return 0.0;
    double precision = static_cast<double>(common) / static_cast<double>(p.size());
    double recall = static_cast<double>(common) / static_cast<double>(g.size());
    return 2.0 * precision * recall / (precision + recall);
}

double f1_star(std::string_view answer, std::string_view gold) {
    const std::string g = collapse_whitespace(gold);
    if (g.empty()) {
        throw Error(ErrorCode::EmptyGold, "gold answer is empty");
    }
    const std::string a = collapse_whitespace(answer);
    if (a.find(g) != std::string::npos) return 1.0;
    return token_f1(a, g);
}

double iou(const BoundingBox& a, const BoundingBox& b) {
    const std::int64_t ix = std::max(0, std::min(a.x2, b.x2) - std::max(a.x1, b.x1));
    const std::int64_t iy = std::max(0, std::min(a.y2, b.y2) - std::max(a.y1, b.y1));
    const std::int64_t inter = ix * iy;
    const std::int64_t uni = a.area() + b.area() - inter;
    if (uni <= 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

double grounding_accuracy(std::span<const std::pair<BoundingBox, BoundingBox>> pairs, double threshold) {
    if (!(threshold > 0.0 && threshold <= 1.0)) {
        throw Error(ErrorCode::InvalidConfig, "IoU threshold must lie in (0,1]");
    }
    if (pairs.empty()) {
        throw Error(ErrorCode::EmptyInput, "no grounding pairs");
    }
    std::size_t hits = 0;
    for (const auto& [pred, gold] : pairs) {
        if (iou(pred, gold) >= threshold) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(pairs.size());
}

std::string_view to_string(JudgeRule rule) {
    switch (rule) {
        case JudgeRule::ClickMargin: return "click_margin";
        case JudgeRule::ScrollAxis: return "scroll_axis";
        case JudgeRule::InputF1: return "input_f1";
    }
    return "click_margin";
}

// |delta| <= 0.14 * extent, kept in integers: 100 * |2 delta| <= 28 * extent.
bool within_click_margin(std::int64_t doubled_delta, int extent) {
    return 25 * std::abs(doubled_delta) <= 7 * static_cast<std::int64_t>(extent);
}

JudgeRule rule_for(ActionKind kind) {
    switch (kind) {
        case ActionKind::Click: return JudgeRule::ClickMargin;
        case ActionKind::Input: return JudgeRule::InputF1;
        case ActionKind::Scroll: return JudgeRule::ScrollAxis;
    }
    return JudgeRule::ClickMargin;
}

ActionJudgement judge_action(const Action& pred, const Action& gold, ScreenSize screen) {
    ActionJudgement j;
    j.rule = rule_for(gold.kind());
    if (pred.kind() != gold.kind()) return j;
    switch (gold.kind()) {
        case ActionKind::Click: {
            const auto& p = pred.bound();
            const auto& g = gold.bound();
            j.correct = within_click_margin(p.center_x2() - g.center_x2(), screen.width) &&
                        within_click_margin(p.center_y2() - g.center_y2(), screen.height);
            break;
        }
        case ActionKind::Scroll:
            j.correct = std::get<ScrollAction>(pred.variant).direction == std::get<ScrollAction>(gold.variant).direction;
            break;
        case ActionKind::Input: {
            const auto& pt = std::get<InputAction>(pred.variant).text;
            const auto& gt = std::get<InputAction>(gold.variant).text;
            j.score = collapse_whitespace(pt) == collapse_whitespace(gt) ? 1.0 : token_f1(pt, gt);
            j.correct = j.score == 1.0;
            return j;
        }
    }
    j.score = j.correct ? 1.0 : 0.0;
    return j;
}

std::vector<Prediction> read_predictions(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidConfig, "cannot read " + path.string());
    }
    std::vector<Prediction> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            json doc = json::parse(line);
            out.push_back({doc.at("id").get<std::string>(), doc.at("answer").get<std::string>()});
        } catch (const json::exception& e) {
            throw Error(ErrorCode::InvalidConfig, path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

namespace {

struct Mean {
    std::size_t count = 0;
    double sum = 0.0;
    void add(double v) {
        ++count;
        sum += v;
    }
    json value() const { return count ? json(sum / static_cast<double>(count)) : json(nullptr); }
};

struct ActionGroup {
    Mean accuracy;
    Mean score;
};

}  // namespace

json evaluate(std::span<const Prediction> predictions, std::span<const TaskRecord> gold, ScreenSize screen) {
    std::map<std::string, const Prediction*> by_id;
    for (const auto& p : predictions) by_id[p.id] = &p;
    std::set<std::string> gold_ids;
    std::vector<std::string> orphans;
    for (const auto& g : gold) {
        gold_ids.insert(g.id);
        if (!by_id.contains(g.id)) orphans.push_back(g.id);
    }
    for (const auto& [id, p] : by_id) {
        if (!gold_ids.contains(id)) orphans.push_back(id);
    }
    if (!orphans.empty() || gold.empty()) {
        std::string list;
        for (std::size_t i = 0; i < orphans.size() && i < 20; ++i) {
            list += (i ? ", " : "") + orphans[i];
        }
        if (orphans.size() > 20) list += ", ...";
        throw Error(ErrorCode::IdMismatch, std::to_string(orphans.size()) + " unmatched ids: " + list);
    }

    Mean f1, acc_iou, mean_iou, action_acc;
    std::array<ActionGroup, 3> rules;
    std::map<std::string, Mean> per_task;
    for (const auto& g : gold) {
        const std::string& answer = by_id.at(g.id)->answer;
        double score = 0.0;
        switch (g.task) {
            case TaskKind::ElementList:
            case TaskKind::ActionSpace:
                score = collapse_whitespace(g.answer).empty() ? (collapse_whitespace(answer).empty() ? 1.0 : 0.0)
                                                                : f1_star(answer, g.answer);
                f1.add(score);
                break;
            case TaskKind::Grounding: {
                auto gb = find_box(g.answer);
                auto pb = find_box(answer);
                double v = (gb && pb) ? iou(*pb, *gb) : 0.0;
                mean_iou.add(v);
                score = v >= 0.1 ? 1.0 : 0.0;
                acc_iou.add(score);
                break;
            }
            case TaskKind::ActionPrediction:
            case TaskKind::Navigation: {
                Action ga = parse_action(g.answer);
                ActionJudgement j;
                j.rule = rule_for(ga.kind());
                try {
                    j = judge_action(parse_action(answer), ga, screen);
                } catch (const Error&) {
                }
                auto& group = rules[static_cast<std::size_t>(j.rule)];
                group.accuracy.add(j.correct ? 1.0 : 0.0);
                group.score.add(j.score);
                action_acc.add(j.correct ? 1.0 : 0.0);
                score = j.correct ? 1.0 : 0.0;
                break;
            }
        }
        per_task[std::string(to_string(g.task))].add(score);
    }

    json by_rule = json::object();
    for (std::size_t r = 0; r < rules.size(); ++r) {
        json entry = {{"count", rules[r].accuracy.count}, {"accuracy", rules[r].accuracy.value()}};
        if (static_cast<JudgeRule>(r) == JudgeRule::InputF1) entry["mean_f1"] = rules[r].score.value();
        by_rule[std::string(to_string(static_cast<JudgeRule>(r)))] = entry;
    }
    json tasks = json::object();
    for (const auto& [name, m] : per_task) {
        tasks[name] = {{"count", m.count}, {"score", m.value()}};
    }
    return {
        {"records", gold.size()},
        {"f1_star", {{"count", f1.count}, {"mean", f1.value()}}},
        {"grounding", {{"count", acc_iou.count}, {"acc_iou_0.1", acc_iou.value()}, {"mean_iou", mean_iou.value()}}},
        {"action", {{"count", action_acc.count}, {"accuracy", action_acc.value()}, {"by_rule", by_rule}}},
        {"tasks", tasks},
    };
}

}  // namespace uiwalk
