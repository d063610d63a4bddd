#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "chromasym/symmetry.hpp"

namespace chromasym {

// Subsection layout recipes. Each describes the canonical NW-section
// layout; the other three sections receive mirrored copies.
struct TriangularSpec {
    int triangles = 2;  // fan triangles per section, >= 1

    friend bool operator==(const TriangularSpec&, const TriangularSpec&) = default;
};

struct GridSpec {
    int rows = 2;
    int cols = 2;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

struct BubbleSpec {
    int count = 3;
    std::uint64_t seed = 0;
    double rmin = 0.1;  // radii as fraction of min(section width, height)
    double rmax = 0.3;  // 0 < rmin <= rmax <= 0.5

    friend bool operator==(const BubbleSpec&, const BubbleSpec&) = default;
};

struct PerPixelSpec {
    friend bool operator==(const PerPixelSpec&, const PerPixelSpec&) = default;
};

using PartitionSpec =
    std::variant<TriangularSpec, GridSpec, BubbleSpec, PerPixelSpec>;

// Symmetric subsection labeling. Global id = section_index * (lambda/4) +
// canonical id, sections ordered NW, NE, SW, SE.
struct Partition {
    Dims dims;
    std::uint32_t lambda = 0;           // total subsection count, divisible by 4
    std::uint32_t canonical_count = 0;  // lambda / 4
    std::vector<std::uint32_t> labels;  // row-major, one per pixel

    std::uint32_t label(PixelCoord p) const {
        return labels[static_cast<std::size_t>(p.y) * dims.width + p.x];
    }
    static Section section_of_id(std::uint32_t id, std::uint32_t canonical) {
        return static_cast<Section>(id / canonical);
    }
    std::uint32_t canonical_id(std::uint32_t id) const {
        return id % canonical_count;
    }
};

// Perfect matching of subsections induced by a non-identity element:
// (s, k) pairs with (g(s), k).
struct PairSet {
    GroupElement element = GroupElement::Rot;
    std::vector<std::uint32_t> partner;  // partner[id], all lambda entries
    // Each unordered pair once; first member lies in NW/NE for Rot and
    // RefH, in NW/SW for RefV.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};

Partition build_partition(const PartitionSpec& spec, Dims dims);

PairSet pair_set(const Partition& part, GroupElement g);

void validate_spec(const PartitionSpec& spec);

}  // namespace chromasym
