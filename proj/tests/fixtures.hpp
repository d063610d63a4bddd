#pragma once

#include <cmath>

#include "chromasym/image.hpp"
#include "chromasym/rng.hpp"

namespace chromasym::fixtures {

inline ImageBuffer flat(Dims d, RgbPixel color) { return ImageBuffer(d, color); }

inline ImageBuffer gradient(Dims d) {
    ImageBuffer img(d);
    for (int y = 0; y < d.height; ++y)
        for (int x = 0; x < d.width; ++x)
            img.at(x, y) = {
                static_cast<std::uint8_t>(255 * x / std::max(1, d.width - 1)),
                static_cast<std::uint8_t>(255 * y / std::max(1, d.height - 1)),
                static_cast<std::uint8_t>(
                    255 * (x + y) / std::max(1, d.width + d.height - 2))};
    return img;
}

// Deterministic stand-in for a photograph: smooth low-frequency color
// fields with seeded per-pixel grain.
inline ImageBuffer photo(Dims d, std::uint64_t seed = 2024) {
    SplitMix64 rng(seed);
    ImageBuffer img(d);
    for (int y = 0; y < d.height; ++y)
        for (int x = 0; x < d.width; ++x) {
            const double u = static_cast<double>(x) / d.width;
            const double v = static_cast<double>(y) / d.height;
            const double r = 0.5 + 0.35 * std::sin(6.2 * u + 1.7) * std::cos(4.9 * v);
            const double g = 0.45 + 0.3 * std::cos(5.3 * u) * std::sin(7.1 * v + 0.4);
            const double b = 0.55 + 0.3 * std::sin(3.7 * (u + v));
            const double grain = (rng.next_double() - 0.5) * 0.08;
            auto q = [&](double c) {
                const double t = std::clamp(c + grain, 0.0, 1.0);
                return static_cast<std::uint8_t>(std::lround(t * 255.0));
            };
            img.at(x, y) = {q(r), q(g), q(b)};
        }
    return img;
}

}  // namespace chromasym::fixtures
