#pragma once

#include <vector>

#include "chromasym/color.hpp"
#include "chromasym/symmetry.hpp"

namespace chromasym {

struct ImageBuffer {
    Dims dims;
    bool has_alpha = false;
    std::vector<RgbPixel> pixels;  // row-major, dims.width * dims.height

    ImageBuffer() = default;
    ImageBuffer(Dims d, RgbPixel fill = {}, bool alpha = false)
        : dims(d), has_alpha(alpha),
          pixels(static_cast<std::size_t>(d.width) * d.height, fill) {}

    RgbPixel& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * dims.width + x];
    }
    const RgbPixel& at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * dims.width + x];
    }

    friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;
};

}  // namespace chromasym
