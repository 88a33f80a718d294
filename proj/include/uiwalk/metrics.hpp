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

#ifndef UIWALK_METRICS_HPP
#define UIWALK_METRICS_HPP

#include <map>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uiwalk/action.hpp"
#include "uiwalk/taskgen.hpp"

namespace uiwalk {

/// 2PR/(P+R) over token multisets; 0 when either side has no tokens.
double token_f1(std::string_view prediction, std::string_view gold);

/// 1 when the whitespace-normalized output contains the gold answer,
/// token F1 otherwise. Throws EmptyGold.
double f1_star(std::string_view answer, std::string_view gold);

/// Pixel-area IoU; 0 when the union is empty.
double iou(const BoundingBox& a, const BoundingBox& b);

/// Fraction of pairs with IoU >= threshold. Throws EmptyInput, and
/// InvalidConfig for a threshold outside (0,1].
double grounding_accuracy(std::span<const std::pair<BoundingBox, BoundingBox>> pairs, double threshold = 0.1);

enum class JudgeRule { ClickMargin, ScrollAxis, InputF1 };

std::string_view to_string(JudgeRule rule);

/// Rule applied when the gold action has this kind.
JudgeRule rule_for(ActionKind kind);

struct ActionJudgement {
    bool correct = false;
    JudgeRule rule = JudgeRule::ClickMargin;
    double score = 0.0;
};

/// Offset between two centers, given as doubled coordinates, lies within
/// 14% of the screen extent on that axis.
bool within_click_margin(std::int64_t doubled_delta, int extent);

/// The rule follows the gold action's kind; a kind mismatch is incorrect.
ActionJudgement judge_action(const Action& pred, const Action& gold, ScreenSize screen = kDefaultScreen);

struct Prediction {
    std::string id;
    std::string answer;
};

/// `{"id":...,"answer":...}` per line; throws InvalidConfig naming the
/// path and line.
std::vector<Prediction> read_predictions(const std::filesystem::path& path);

/// Scores predictions against gold records sharing their ids. Throws
/// IdMismatch listing ids present on one side only.
///
/// Element lists and action spaces are scored with F1*, grounding with
/// IoU on the first box in the answer, action prediction and navigation
/// with judge_action. Unparseable predictions score zero.
nlohmann::json evaluate(std::span<const Prediction> predictions, std::span<const TaskRecord> gold,
                        ScreenSize screen = kDefaultScreen);

}  // namespace uiwalk

#endif  // UIWALK_METRICS_HPP
