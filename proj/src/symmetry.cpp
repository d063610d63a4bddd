#include "chromasym/symmetry.hpp"

#include <algorithm>
#include <cctype>

namespace chromasym {

std::optional<GroupElement> parse_element(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == "e") return GroupElement::E;
    if (lower == "rot") return GroupElement::Rot;
    if (lower == "refh") return GroupElement::RefH;
    if (lower == "refv") return GroupElement::RefV;
    return std::nullopt;
}

std::string element_name(GroupElement g) {
    switch (g) {
        case GroupElement::E: return "e";
        case GroupElement::Rot: return "rot";
        case GroupElement::RefH: return "refh";
        case GroupElement::RefV: return "refv";
    }
    return "e";
}

}  // namespace chromasym
