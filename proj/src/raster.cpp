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

#include "uiwalk/raster.hpp"

#include <algorithm>
#include <set>

#include "uiwalk/errors.hpp"

namespace uiwalk {

Raster::Raster() : data_(std::make_shared<Data>()) {}

void Raster::push_row(std::vector<Band>& bands, int row_end, std::vector<Run>&& runs) {
    if (!bands.empty() && bands.back().runs == runs) {
        bands.back().end = row_end;
        return;
    }
    bands.push_back(Band{row_end, std::move(runs)});
}

Raster Raster::filled(int width, int height, Rgb color) {
    if (width <= 0 || height <= 0) {
        return Raster();
    }
    auto data = std::make_shared<Data>();
    data->bands.push_back(Band{height, {Run{width, color}}});
    return Raster(width, height, std::move(data));
}

Raster Raster::from_rgb(int width, int height, std::span<const std::uint8_t> rgb) {
    if (width <= 0 || height <= 0) {
        return Raster();
    }
    if (rgb.size() != static_cast<std::size_t>(width) * height * 3) {
        throw Error(ErrorCode::DimensionMismatch, "pixel buffer does not match raster size");
    }
    auto data = std::make_shared<Data>();
    for (int y = 0; y < height; ++y) {
        const std::uint8_t* row = rgb.data() + static_cast<std::size_t>(y) * width * 3;
        std::vector<Run> runs;
        for (int x = 0; x < width; ++x) {
            Rgb c{row[x * 3], row[x * 3 + 1], row[x * 3 + 2]};
            if (!runs.empty() && runs.back().color == c) {
                runs.back().end = x + 1;
            } else {
                runs.push_back(Run{x + 1, c});
            }
        }
        push_row(data->bands, y + 1, std::move(runs));
    }
    return Raster(width, height, std::move(data));
}

Rgb Raster::at(int x, int y) const {
    const auto& bands = data_->bands;
    auto band = std::upper_bound(bands.begin(), bands.end(), y,
                                 [](int v, const Band& b) { return v < b.end; });
    auto run = std::upper_bound(band->runs.begin(), band->runs.end(), x,
                                [](int v, const Run& r) { return v < r.end; });
    return run->color;
}

std::vector<std::uint8_t> Raster::to_rgb() const {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(width_) * height_ * 3);
    int y = 0;
    for (const auto& band : data_->bands) {
        std::vector<std::uint8_t> row(static_cast<std::size_t>(width_) * 3);
        int x = 0;
        for (const auto& run : band.runs) {
            for (; x < run.end; ++x) {
                row[x * 3] = run.color.r;
                row[x * 3 + 1] = run.color.g;
                row[x * 3 + 2] = run.color.b;
            }
        }
        for (; y < band.end; ++y) {
            std::copy(row.begin(), row.end(), out.begin() + static_cast<std::ptrdiff_t>(y) * width_ * 3);
        }
    }
    return out;
}

Raster Raster::resized(int width, int height) const {
    if (width == width_ && height == height_) {
        return *this;
    }
    if (empty() || width <= 0 || height <= 0) {
        return Raster();
    }
    auto data = std::make_shared<Data>();
    for (int y = 0; y < height; ++y) {
        int sy = static_cast<int>(static_cast<std::int64_t>(y) * height_ / height);
        std::vector<Run> runs;
        for (int x = 0; x < width; ++x) {
            int sx = static_cast<int>(static_cast<std::int64_t>(x) * width_ / width);
            Rgb c = at(sx, sy);
            if (!runs.empty() && runs.back().color == c) {
                runs.back().end = x + 1;
            } else {
                runs.push_back(Run{x + 1, c});
            }
        }
        push_row(data->bands, y + 1, std::move(runs));
    }
    return Raster(width, height, std::move(data));
}

std::size_t Raster::run_count() const {
    std::size_t n = 0;
    for (const auto& band : data_->bands) {
        n += band.runs.size();
    }
    return n;
}

bool operator==(const Raster& a, const Raster& b) {
    if (a.width_ != b.width_ || a.height_ != b.height_) {
        return false;
    }
    if (a.data_ == b.data_) {
        return true;
    }
    const auto& x = a.data_->bands;
    const auto& y = b.data_->bands;
    return std::equal(x.begin(), x.end(), y.begin(), y.end(), [](const auto& p, const auto& q) {
        return p.end == q.end && p.runs == q.runs;
    });
}

namespace {

template <typename RunT>
std::int64_t row_difference(const std::vector<RunT>& a, const std::vector<RunT>& b) {
    std::int64_t diff = 0;
    int x = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        int end = std::min(a[i].end, b[j].end);
        if (a[i].color != b[j].color) {
            diff += end - x;
        }
        x = end;
        if (a[i].end == end) ++i;
        if (b[j].end == end) ++j;
    }
    return diff;
}

}  // namespace

std::int64_t count_differing_pixels(const Raster& a, const Raster& b) {
    if (a.width_ != b.width_ || a.height_ != b.height_) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(a.width_) + "x" + std::to_string(a.height_) + " vs " +
                        std::to_string(b.width_) + "x" + std::to_string(b.height_));
    }
    if (a.data_ == b.data_) {
        return 0;
    }
    const auto& x = a.data_->bands;
    const auto& y = b.data_->bands;
    std::int64_t total = 0;
    int row = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < x.size() && j < y.size()) {
        int end = std::min(x[i].end, y[j].end);
        if (&x[i].runs != &y[j].runs) {
            total += row_difference(x[i].runs, y[j].runs) * (end - row);
        }
        row = end;
        if (x[i].end == end) ++i;
        if (y[j].end == end) ++j;
    }
    return total;
}

RasterCanvas::RasterCanvas(int width, int height, Rgb background)
    : width_(width), height_(height), background_(background) {}

void RasterCanvas::fill(const BoundingBox& box, Rgb color) {
    BoundingBox clipped{std::clamp(box.x1, 0, width_), std::clamp(box.y1, 0, height_),
                        std::clamp(box.x2, 0, width_), std::clamp(box.y2, 0, height_)};
    if (clipped.x1 < clipped.x2 && clipped.y1 < clipped.y2) {
        fills_.emplace_back(clipped, color);
    }
}

Raster RasterCanvas::render() const {
    if (width_ <= 0 || height_ <= 0) {
        return Raster();
    }
    using Run = Raster::Run;
    std::set<int> cuts{0, height_};
    for (const auto& [box, color] : fills_) {
        cuts.insert(box.y1);
        cuts.insert(box.y2);
    }
    auto data = std::make_shared<Raster::Data>();
    int top = 0;
    for (int cut : cuts) {
        if (cut == 0) {
            continue;
        }
        std::vector<Run> runs{Run{width_, background_}};
        for (const auto& [box, color] : fills_) {
            if (box.y1 > top || box.y2 < cut) {
                continue;
            }
            std::vector<Run> next;
            next.reserve(runs.size() + 2);
            int start = 0;
            bool placed = false;
            for (const auto& run : runs) {
                if (run.end <= box.x1 || start >= box.x2) {
                    if (!placed && start >= box.x2) {
                        next.push_back(Run{box.x2, color});
                        placed = true;
                    }
                    next.push_back(run);
                } else {
                    if (start < box.x1) {
                        next.push_back(Run{box.x1, run.color});
                    }
                    if (run.end > box.x2) {
                        if (!placed) {
                            next.push_back(Run{box.x2, color});
                            placed = true;
                        }
                        next.push_back(run);
                    }
                }
                start = run.end;
            }
            if (!placed) {
                next.push_back(Run{box.x2, color});
            }
            runs.clear();
            for (const auto& run : next) {
                if (!runs.empty() && runs.back().color == run.color) {
                    runs.back().end = run.end;
                } else {
                    runs.push_back(run);
                }
            }
        }
        Raster::push_row(data->bands, cut, std::move(runs));
        top = cut;
    }
    return Raster(width_, height_, std::move(data));
}

}  // namespace uiwalk
