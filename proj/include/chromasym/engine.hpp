#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chromasym/image.hpp"
#include "chromasym/partition.hpp"

namespace chromasym {

// Channel maps per global subsection id.
struct Assignment {
    std::vector<ChannelMaps> maps;  // one entry per subsection id
    std::optional<GroupElement> element;

    const ChannelMaps& for_id(std::uint32_t id) const {
        if (id >= maps.size()) throw std::out_of_range("subsection id out of range");
        return maps[id];
    }
};

struct Violation {
    PixelCoord pixel;
    int channel;  // 0=r 1=g 2=b
    std::uint8_t expected;
    std::uint8_t actual;
};

struct VerifyReport {
    bool ok = false;
    std::vector<Violation> violations;
    // pairs of subsection ids whose assigned maps disagree across a g-pair
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairing_violations;
    std::array<int, 3> max_abs_error = {0, 0, 0};
};

// Which pairs of a PairSet an assignment covers.
struct PairScope {
    bool all = true;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // when !all

    static PairScope all_pairs() { return {}; }
    static PairScope explicit_pairs(
        std::vector<std::pair<std::uint32_t, std::uint32_t>> p) {
        return {false, std::move(p)};
    }
};

// Thread count used by apply_distortion; 0 resolves to the value of
// CHROMASYM_THREADS or, failing that, hardware concurrency. Row-banded
// splitting, bit-identical to sequential execution.
void set_thread_count(int n);
int thread_count();

ImageBuffer apply_distortion(const ImageBuffer& img, const Partition& part,
                             const Assignment& a);

Assignment symmetric_assignment(const Partition& part, GroupElement g,
                                const ChannelMaps& upper, const ChannelMaps& lower,
                                const PairScope& scope = PairScope::all_pairs());

VerifyReport verify_symmetry(const ImageBuffer& src, const ImageBuffer& out,
                             const Partition& part, const Assignment& a,
                             GroupElement g, int tolerance);

// Two-line form of the palette permutation induced by src -> out,
// sorted by source color.
struct TransitiveResult {
    bool ok = false;  // bijective on the source palette
    std::vector<std::pair<RgbPixel, RgbPixel>> mapping;
};

TransitiveResult check_transitive(const ImageBuffer& src, const ImageBuffer& out);

// Geometric image transport by a group element (used to test color
// symmetry of a single image against itself).
ImageBuffer transform_image(const ImageBuffer& img, GroupElement g);

// Permutation on palette indices 0..3; perm[i] = j maps palette[i] to
// palette[j].
using PaletteIndexPerm = std::array<int, 4>;

ImageBuffer make_demo(const PartitionSpec& style,
                      const std::array<RgbPixel, 4>& palette,
                      const std::map<GroupElement, PaletteIndexPerm>& perms,
                      Dims dims);

}  // namespace chromasym
