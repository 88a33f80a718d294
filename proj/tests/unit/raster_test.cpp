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

#include <gtest/gtest.h>

#include "generators.hpp"
#include "uiwalk/errors.hpp"
#include "uiwalk/identity.hpp"
#include "uiwalk/png.hpp"
#include "uiwalk/raster.hpp"

using namespace uiwalk;

namespace {

// Plain pixel array painted the obvious way.
struct Grid {
    int w, h;
    std::vector<Rgb> px;
    Grid(int w_, int h_, Rgb bg) : w(w_), h(h_), px(static_cast<std::size_t>(w_ * h_), bg) {}
    void fill(BoundingBox b, Rgb c) {
        for (int y = std::max(0, b.y1); y < std::min(h, b.y2); ++y)
            for (int x = std::max(0, b.x1); x < std::min(w, b.x2); ++x) px[static_cast<std::size_t>(y * w + x)] = c;
    }
};

Rgb color(gen::Rng& rng) {
    // Few colors so overlapping fills often repaint with the same value.
    static const Rgb palette[] = {{255, 255, 255}, {0, 0, 0}, {200, 30, 30}, {30, 200, 30}};
    return palette[gen::uniform(rng, 0, 3)];
}

}  // namespace

TEST(Raster, FilledAndPixelAccess) {
    Raster r = Raster::filled(4, 3, Rgb{1, 2, 3});
    EXPECT_EQ(r.width(), 4);
    EXPECT_EQ(r.height(), 3);
    EXPECT_EQ(r.at(3, 2), (Rgb{1, 2, 3}));
    EXPECT_EQ(r.run_count(), 1u);
}

TEST(Raster, FromRgbRoundTrip) {
    std::vector<std::uint8_t> rgb = {1, 2, 3, 1, 2, 3, 9, 9, 9, 4, 5, 6, 4, 5, 6, 4, 5, 6};
    Raster r = Raster::from_rgb(3, 2, rgb);
    EXPECT_EQ(r.to_rgb(), rgb);
    EXPECT_EQ(r.at(2, 0), (Rgb{9, 9, 9}));
    EXPECT_EQ(r, Raster::from_rgb(3, 2, rgb));
}

TEST(Raster, DimensionMismatch) {
    EXPECT_THROW(count_differing_pixels(Raster::filled(2, 2, {}), Raster::filled(3, 2, {})), Error);
}

TEST(RasterProperty, CanvasMatchesNaivePainter) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int w = gen::uniform(rng, 1, 40), h = gen::uniform(rng, 1, 40);
        Rgb bg = color(rng);
        RasterCanvas canvas(w, h, bg);
        Grid grid(w, h, bg);
        int fills = gen::uniform(rng, 0, 8);
        for (int i = 0; i < fills; ++i) {
            BoundingBox b{gen::uniform(rng, -5, w), gen::uniform(rng, -5, h), 0, 0};
            b.x2 = b.x1 + gen::uniform(rng, 0, w);
            b.y2 = b.y1 + gen::uniform(rng, 0, h);
            Rgb c = color(rng);
            canvas.fill(b, c);
            grid.fill(b, c);
        }
        Raster r = canvas.render();
        std::vector<std::uint8_t> expect;
        for (const auto& p : grid.px) expect.insert(expect.end(), {p.r, p.g, p.b});
        ASSERT_EQ(r.to_rgb(), expect) << "trial " << trial;
        // Canonical encoding: equal pixels imply equal rasters.
        EXPECT_EQ(r, Raster::from_rgb(w, h, expect));
    }
}

TEST(RasterProperty, DiffCountMatchesPixelLoop) {
    gen::Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        int w = gen::uniform(rng, 1, 30), h = gen::uniform(rng, 1, 30);
        RasterCanvas a(w, h, color(rng)), b(w, h, color(rng));
        for (int i = 0; i < 5; ++i) {
            a.fill(gen::box(rng, w, h), color(rng));
            b.fill(gen::box(rng, w, h), color(rng));
        }
        Raster ra = a.render(), rb = b.render();
        std::int64_t naive = 0;
        for (int y = 0; y < h; ++y)
            for (int x = 0; x < w; ++x) naive += !(ra.at(x, y) == rb.at(x, y));
        EXPECT_EQ(count_differing_pixels(ra, rb), naive);
        EXPECT_DOUBLE_EQ(pixel_diff(ra, rb), static_cast<double>(naive) / (w * h));
    }
}

TEST(Raster, ResizeNearestNeighbour) {
    RasterCanvas c(4, 4, Rgb{0, 0, 0});
    c.fill({2, 0, 4, 4}, Rgb{255, 0, 0});
    Raster big = c.render().resized(8, 8);
    EXPECT_EQ(big.at(3, 5), (Rgb{0, 0, 0}));
    EXPECT_EQ(big.at(4, 5), (Rgb{255, 0, 0}));
    EXPECT_EQ(c.render().resized(4, 4), c.render());
}

TEST(Png, RoundTrip) {
    RasterCanvas c(720, 1280, Rgb{255, 255, 255});
    c.fill({40, 200, 680, 300}, Rgb{10, 120, 200});
    Raster r = c.render();
    auto bytes = encode_png(r);
    EXPECT_EQ(decode_png(bytes), r);
    EXPECT_EQ(encode_png(r), bytes);
}

TEST(Png, RejectsGarbage) {
    std::vector<std::uint8_t> junk = {1, 2, 3, 4, 5};
    try {
        decode_png(junk);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MalformedImage);
    }
}
