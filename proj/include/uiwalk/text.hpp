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

#ifndef UIWALK_TEXT_HPP
#define UIWALK_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

namespace uiwalk {

/// Trims and folds every run of ASCII whitespace into one space.
std::string collapse_whitespace(std::string_view text);

/// Splits UTF-8 into codepoint substrings. Invalid bytes become
/// single-byte pieces rather than errors.
std::vector<std::string_view> utf8_codepoints(std::string_view text);

/// Decoded value of one codepoint piece returned by utf8_codepoints.
char32_t decode_codepoint(std::string_view piece);

/// CJK ideographs, kana, hangul and fullwidth forms; each is a token of
/// its own when scoring text.
bool is_cjk(char32_t cp);

/// Word tokens for overlap scoring: CJK codepoints stand alone, other
/// characters group into whitespace-separated words.
std::vector<std::string> scoring_tokens(std::string_view text);

}  // namespace uiwalk

#endif  // UIWALK_TEXT_HPP
