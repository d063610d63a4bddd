#pragma once

#include <string>
#include <vector>

#include "chromasym/image.hpp"
#include "chromasym/partition.hpp"

namespace chromasym::io {

struct LoadOptions {
    bool crop_to_even = true;
    bool strip_alpha = false;
};

struct LoadedImage {
    ImageBuffer image;
    std::vector<std::string> warnings;
};

// Decodes a PNG into an 8-bit RGB(A) buffer. Gray and palette images are
// expanded, 16-bit channels are reduced to their high byte. Odd
// dimensions are cropped (with a warning) or rejected per the options.
LoadedImage load_image(const std::string& path, const LoadOptions& opts = {});

// Fixed encoder settings, so identical buffers give identical bytes.
void save_image(const ImageBuffer& img, const std::string& path);

// 4096-row `x,y` table of a channel map, x = i/4096, nine decimal places.
void write_map_csv(const ChannelMapSpec& map, const std::string& path);

// Each subsection id rendered as a distinct color (id mod 256) from a
// fixed palette, for visual inspection.
ImageBuffer partition_debug_image(const Partition& part);

}  // namespace chromasym::io
