#include "chromasym/config.hpp"

#include <json.hpp>

namespace chromasym {

namespace {

using nlohmann::json;

ChannelMapSpec parse_map_spec(const json& j, const std::string& where,
                              std::vector<std::string>& errors) {
    if (!j.is_object()) {
        errors.push_back(where + ": map spec must be an object");
        return {};
    }
    const std::string family = j.value("family", "");
    std::vector<double> params;
    if (j.contains("params")) {
        if (!j["params"].is_array()) {
            errors.push_back(where + ": params must be an array of numbers");
            return {};
        }
        for (const auto& v : j["params"]) {
            if (!v.is_number()) {
                errors.push_back(where + ": params must be numbers");
                return {};
            }
            params.push_back(v.get<double>());
        }
    }

    using F = ChannelMapSpec::Family;
    try {
        if (family == "identity") return ChannelMapSpec::identity();
        if (family == "f1") return ChannelMapSpec::named(F::F1);
        if (family == "f2") return ChannelMapSpec::named(F::F2);
        if (family == "f3") return ChannelMapSpec::named(F::F3);
        if (family == "f4") return ChannelMapSpec::named(F::F4);
        if (family == "f5") return ChannelMapSpec::named(F::F5);
        if (family == "modmul") {
            if (params.size() != 1 || params[0] < 1.0 ||
                params[0] != static_cast<std::uint32_t>(params[0])) {
                errors.push_back(where +
                                 ": modmul requires one positive integer param");
                return {};
            }
            return ChannelMapSpec::mod_multiply(
                static_cast<std::uint32_t>(params[0]));
        }
        if (family == "harmonic") {
            if (params.size() != 8) {
                errors.push_back(where + ": harmonic requires 8 params");
                return {};
            }
            return ChannelMapSpec::harmonic(params[0], params[1], params[2],
                                            params[3], params[4], params[5],
                                            params[6], params[7]);
        }
        if (family == "poly") {
            if (params.empty()) {
                errors.push_back(where + ": poly requires coefficients");
                return {};
            }
            return ChannelMapSpec::polynomial(params);
        }
    } catch (const std::exception& e) {
        errors.push_back(where + ": " + e.what());
        return {};
    }
    errors.push_back(where + ": unknown map family '" + family + "'");
    return {};
}

PartitionSpec parse_partition(const json& j, std::vector<std::string>& errors) {
    if (!j.is_object()) {
        errors.push_back("partition: must be an object");
        return GridSpec{};
    }
    const std::string kind = j.value("kind", "");
    PartitionSpec spec = GridSpec{};
    if (kind == "triangular") {
        spec = TriangularSpec{j.value("t", 2)};
    } else if (kind == "grid") {
        spec = GridSpec{j.value("rows", 2), j.value("cols", 2)};
    } else if (kind == "bubble") {
        spec = BubbleSpec{j.value("count", 3), j.value("seed", std::uint64_t{0}),
                          j.value("rmin", 0.1), j.value("rmax", 0.3)};
    } else if (kind == "perpixel") {
        spec = PerPixelSpec{};
    } else {
        errors.push_back("partition: unknown kind '" + kind + "'");
        return spec;
    }
    try {
        validate_spec(spec);
    } catch (const std::exception& e) {
        errors.push_back(std::string("partition: ") + e.what());
    }
    return spec;
}

json map_spec_to_json(const ChannelMapSpec& m) {
    using F = ChannelMapSpec::Family;
    static const std::map<F, std::string> names = {
        {F::Identity, "identity"}, {F::F1, "f1"},
        {F::F2, "f2"},             {F::F3, "f3"},
        {F::F4, "f4"},             {F::F5, "f5"},
        {F::ModMultiply, "modmul"}, {F::Harmonic, "harmonic"},
        {F::Polynomial, "poly"}};
    json j;
    j["family"] = names.at(m.family());
    if (!m.params().empty()) j["params"] = m.params();
    return j;
}

}  // namespace

ConfigParseResult parse_config(const std::string& text) {
    ConfigParseResult res;
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        res.errors.push_back("config is not valid JSON");
        return res;
    }
    if (!j.is_object()) {
        res.errors.push_back("config must be a JSON object");
        return res;
    }

    const std::string element = j.value("element", "");
    if (auto g = parse_element(element)) {
        res.config.element = *g;
        if (*g == GroupElement::E && j.contains("maps") && !j["maps"].empty())
            res.errors.push_back(
                "element: identity admits no map rules (no pairs)");
    } else {
        res.errors.push_back("element: unknown name '" + element +
                             "' (expected e, rot, refh or refv)");
    }

    if (j.contains("partition"))
        res.config.partition = parse_partition(j["partition"], res.errors);
    else
        res.errors.push_back("partition: missing");

    if (j.contains("maps")) {
        if (!j["maps"].is_array()) {
            res.errors.push_back("maps: must be an array");
        } else {
            int idx = 0;
            for (const auto& entry : j["maps"]) {
                const std::string where = "maps[" + std::to_string(idx++) + "]";
                MapRule rule;
                const auto& scope = entry.contains("subsections")
                                        ? entry["subsections"]
                                        : json("pairs");
                if (scope.is_string() && scope.get<std::string>() == "pairs") {
                    rule.scope = PairScope::all_pairs();
                } else if (scope.is_array()) {
                    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
                    for (const auto& pr : scope) {
                        if (!pr.is_array() || pr.size() != 2 ||
                            !pr[0].is_number_unsigned() ||
                            !pr[1].is_number_unsigned()) {
                            res.errors.push_back(
                                where + ": subsections entries must be [p,q] id "
                                        "pairs");
                            break;
                        }
                        pairs.emplace_back(pr[0].get<std::uint32_t>(),
                                           pr[1].get<std::uint32_t>());
                    }
                    rule.scope = PairScope::explicit_pairs(std::move(pairs));
                } else {
                    res.errors.push_back(
                        where + ": subsections must be \"pairs\" or a pair list");
                }
                if (entry.contains("hue"))
                    rule.maps.hue = parse_map_spec(entry["hue"], where + ".hue",
                                                   res.errors);
                if (entry.contains("sat"))
                    rule.maps.saturation =
                        parse_map_spec(entry["sat"], where + ".sat", res.errors);
                if (entry.contains("val"))
                    rule.maps.value =
                        parse_map_spec(entry["val"], where + ".val", res.errors);
                res.config.rules.push_back(std::move(rule));
            }
        }
    }

    if (j.contains("tolerance")) {
        if (!j["tolerance"].is_number_integer() ||
            j["tolerance"].get<int>() < 0)
            res.errors.push_back("tolerance: must be a non-negative integer");
        else
            res.config.tolerance = j["tolerance"].get<int>();
    }
    return res;
}

std::string serialize_config(const DistortConfig& cfg) {
    json j;
    j["element"] = element_name(cfg.element);

    json p;
    if (const auto* tri = std::get_if<TriangularSpec>(&cfg.partition)) {
        p = {{"kind", "triangular"}, {"t", tri->triangles}};
    } else if (const auto* grid = std::get_if<GridSpec>(&cfg.partition)) {
        p = {{"kind", "grid"}, {"rows", grid->rows}, {"cols", grid->cols}};
    } else if (const auto* bub = std::get_if<BubbleSpec>(&cfg.partition)) {
        p = {{"kind", "bubble"},
             {"count", bub->count},
             {"seed", bub->seed},
             {"rmin", bub->rmin},
             {"rmax", bub->rmax}};
    } else {
        p = {{"kind", "perpixel"}};
    }
    j["partition"] = p;

    j["maps"] = json::array();
    for (const auto& rule : cfg.rules) {
        json entry;
        if (rule.scope.all) {
            entry["subsections"] = "pairs";
        } else {
            json pairs = json::array();
            for (const auto& [a, b] : rule.scope.pairs)
                pairs.push_back(json::array({a, b}));
            entry["subsections"] = pairs;
        }
        entry["hue"] = map_spec_to_json(rule.maps.hue);
        entry["sat"] = map_spec_to_json(rule.maps.saturation);
        entry["val"] = map_spec_to_json(rule.maps.value);
        j["maps"].push_back(entry);
    }
    j["tolerance"] = cfg.tolerance;
    return j.dump(2);
}

Assignment assignment_from_config(const DistortConfig& cfg,
                                  const Partition& part) {
    Assignment a;
    a.element = cfg.element;
    a.maps.assign(part.lambda, ChannelMaps{});
    if (cfg.element == GroupElement::E) return a;

    const PairSet ps = pair_set(part, cfg.element);
    for (const auto& rule : cfg.rules) {
        if (rule.scope.all) {
            for (const auto& [lp, lq] : ps.pairs) a.maps[lq] = rule.maps;
        } else {
            for (const auto& [p, q] : rule.scope.pairs) {
                if (p >= part.lambda || q >= part.lambda)
                    throw std::invalid_argument(
                        "config pair id out of range for this partition");
                if (ps.partner[p] != q)
                    throw std::invalid_argument(
                        "config pair is not a pair of the configured element");
                // the second id of each listed pair takes the maps
                a.maps[q] = rule.maps;
            }
        }
    }
    return a;
}

}  // namespace chromasym
