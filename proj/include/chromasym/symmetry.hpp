#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chromasym {

// Symmetry group of the rectangle (Klein four-group): identity, 180-degree
// rotation, reflection in the horizontal midline, reflection in the
// vertical midline. Every element is its own inverse.
enum class GroupElement : std::uint8_t { E = 0, Rot = 1, RefH = 2, RefV = 3 };

// The Klein four-group is exactly xor on the two reflection bits.
constexpr GroupElement compose(GroupElement a, GroupElement b) {
    return static_cast<GroupElement>(static_cast<std::uint8_t>(a) ^
                                     static_cast<std::uint8_t>(b));
}

constexpr std::array<GroupElement, 4> all_elements() {
    return {GroupElement::E, GroupElement::Rot, GroupElement::RefH,
            GroupElement::RefV};
}

// Quadrants cut by the reflection axes. Index order is the global
// subsection layout order.
enum class Section : std::uint8_t { NW = 0, NE = 1, SW = 2, SE = 3 };

struct PixelCoord {
    int x = 0;  // column, left to right
    int y = 0;  // row, top to bottom

    friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

struct Dims {
    int width = 0;
    int height = 0;

    friend bool operator==(const Dims&, const Dims&) = default;
};

inline void require_even(Dims d) {
    if (d.width <= 0 || d.height <= 0 || d.width % 2 != 0 || d.height % 2 != 0)
        throw std::invalid_argument("image dimensions must be positive and even");
}

// Action of g on pixel coordinates. Axes pass between pixel rows/columns,
// so the action is a fixed-point-free involution off the identity.
inline PixelCoord map_coord(GroupElement g, PixelCoord p, Dims d) {
    require_even(d);
    switch (g) {
        case GroupElement::E: return p;
        case GroupElement::Rot: return {d.width - 1 - p.x, d.height - 1 - p.y};
        case GroupElement::RefH: return {p.x, d.height - 1 - p.y};
        case GroupElement::RefV: return {d.width - 1 - p.x, p.y};
    }
    return p;
}

inline Section section_of(PixelCoord p, Dims d) {
    require_even(d);
    const bool east = p.x >= d.width / 2;
    const bool south = p.y >= d.height / 2;
    return static_cast<Section>((south ? 2 : 0) | (east ? 1 : 0));
}

// Induced action on sections: Rot swaps diagonally, RefH swaps
// north/south, RefV swaps east/west.
constexpr Section section_apply(GroupElement g, Section s) {
    const auto bits = static_cast<std::uint8_t>(s);  // bit0 = east, bit1 = south
    switch (g) {
        case GroupElement::E: return s;
        case GroupElement::Rot: return static_cast<Section>(bits ^ 3);
        case GroupElement::RefH: return static_cast<Section>(bits ^ 2);
        case GroupElement::RefV: return static_cast<Section>(bits ^ 1);
    }
    return s;
}

// The involution taking the NW section onto s (and back).
constexpr GroupElement section_transport(Section s) {
    switch (s) {
        case Section::NW: return GroupElement::E;
        case Section::NE: return GroupElement::RefV;
        case Section::SW: return GroupElement::RefH;
        case Section::SE: return GroupElement::Rot;
    }
    return GroupElement::E;
}

std::optional<GroupElement> parse_element(std::string_view name);
std::string element_name(GroupElement g);

}  // namespace chromasym
