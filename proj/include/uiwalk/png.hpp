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

#ifndef UIWALK_PNG_HPP
#define UIWALK_PNG_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "uiwalk/raster.hpp"

namespace uiwalk {

/// 8-bit RGB PNG without ancillary chunks; byte-stable for equal rasters.
std::vector<std::uint8_t> encode_png(const Raster& raster);

/// Accepts any PNG color type/bit depth; alpha is dropped. Throws
/// MalformedImage.
Raster decode_png(std::span<const std::uint8_t> bytes);

}  // namespace uiwalk

#endif  // UIWALK_PNG_HPP
