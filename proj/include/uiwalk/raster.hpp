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

#ifndef UIWALK_RASTER_HPP
#define UIWALK_RASTER_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "uiwalk/geometry.hpp"

namespace uiwalk {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend auto operator<=>(const Rgb&, const Rgb&) = default;
};

/// Immutable RGB image.
///
/// Pixels are stored as vertical bands of identical rows, each row as
/// horizontal color runs. The encoding is canonical (maximal runs and
/// bands), so two rasters hold equal pixels iff their encodings are equal.
/// Screens made of flat widgets compress to a few kilobytes, which is what
/// lets a graph keep every node's screenshot resident. Copies share storage.
class Raster {
public:
    Raster();

    static Raster filled(int width, int height, Rgb color);

    /// `rgb` holds width*height*3 bytes, row-major.
    static Raster from_rgb(int width, int height, std::span<const std::uint8_t> rgb);

    int width() const { return width_; }
    int height() const { return height_; }
    ScreenSize size() const { return {width_, height_}; }
    bool empty() const { return width_ == 0 || height_ == 0; }

    Rgb at(int x, int y) const;
    std::vector<std::uint8_t> to_rgb() const;

    /// Nearest-neighbour resample.
    Raster resized(int width, int height) const;

    /// Number of (band, run) pairs; a rough storage measure.
    std::size_t run_count() const;

    friend bool operator==(const Raster& a, const Raster& b);

    /// Positions whose RGB triples differ in any channel. Throws
    /// DimensionMismatch when sizes differ.
    friend std::int64_t count_differing_pixels(const Raster& a, const Raster& b);

private:
    friend class RasterCanvas;

    struct Run {
        int end;  // exclusive x
        Rgb color;
        friend bool operator==(const Run&, const Run&) = default;
    };
    struct Band {
        int end;  // exclusive y
        std::vector<Run> runs;
    };
    struct Data {
        std::vector<Band> bands;
    };

    Raster(int width, int height, std::shared_ptr<const Data> data)
        : width_(width), height_(height), data_(std::move(data)) {}

    static void push_row(std::vector<Band>& bands, int row_end, std::vector<Run>&& runs);

    int width_ = 0;
    int height_ = 0;
    std::shared_ptr<const Data> data_;
};

/// Painter's-algorithm rasterizer for flat rectangles.
class RasterCanvas {
public:
    RasterCanvas(int width, int height, Rgb background);

    /// Later fills paint over earlier ones; the box is clipped to the canvas.
    void fill(const BoundingBox& box, Rgb color);

    Raster render() const;

private:
    int width_;
    int height_;
    Rgb background_;
    std::vector<std::pair<BoundingBox, Rgb>> fills_;
};

}  // namespace uiwalk

#endif  // UIWALK_RASTER_HPP
