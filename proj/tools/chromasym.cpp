#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chromasym/config.hpp"
#include "chromasym/engine.hpp"
#include "chromasym/io.hpp"

namespace cs = chromasym;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitVerification = 3;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitIo, "cannot read file: " + path};
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

cs::DistortConfig load_config(const std::string& path) {
    const auto parsed = cs::parse_config(read_file(path));
    if (!parsed.ok()) {
        std::string msg = "invalid config " + path + ":";
        for (const auto& e : parsed.errors) msg += "\n  " + e;
        throw CliError{kExitValidation, msg};
    }
    return parsed.config;
}

cs::ImageBuffer load_png(const std::string& path) {
    const auto loaded = cs::io::load_image(path);
    for (const auto& w : loaded.warnings)
        std::cerr << "warning: " << path << ": " << w << "\n";
    return loaded.image;
}

// Default demo palette: orange, blue, yellow, purple, as in the classic
// four-color rectangle demos.
const std::array<cs::RgbPixel, 4> kDemoPalette = {
    cs::RgbPixel{255, 140, 0, 255},   // o
    cs::RgbPixel{0, 90, 255, 255},    // b
    cs::RgbPixel{255, 220, 0, 255},   // y
    cs::RgbPixel{140, 0, 200, 255},   // p
};
const std::array<std::string, 4> kDemoNames = {"o", "b", "y", "p"};

cs::PaletteIndexPerm default_perm(cs::GroupElement g) {
    switch (g) {
        case cs::GroupElement::Rot: return {1, 0, 2, 3};   // o<->b, fix y, p
        case cs::GroupElement::RefH: return {3, 2, 1, 0};  // o<->p, b<->y
        case cs::GroupElement::RefV: return {2, 3, 0, 1};  // o<->y, b<->p
        case cs::GroupElement::E: return {0, 1, 2, 3};
    }
    return {0, 1, 2, 3};
}

cs::PartitionSpec style_spec(const std::string& style, std::uint64_t seed) {
    if (style == "triangular") return cs::TriangularSpec{2};
    if (style == "grid") return cs::GridSpec{2, 2};
    if (style == "bubble") return cs::BubbleSpec{3, seed, 0.1, 0.3};
    if (style == "perpixel") return cs::PerPixelSpec{};
    throw CliError{kExitValidation, "unknown demo style: " + style};
}

int name_of_color(const cs::RgbPixel& c) {
    for (int i = 0; i < 4; ++i)
        if (kDemoPalette[i].r == c.r && kDemoPalette[i].g == c.g &&
            kDemoPalette[i].b == c.b)
            return i;
    return -1;
}

int run_distort(const std::string& input, const std::string& config_path,
                const std::string& output) {
    const cs::DistortConfig cfg = load_config(config_path);
    const cs::ImageBuffer img = load_png(input);
    const cs::Partition part = cs::build_partition(cfg.partition, img.dims);
    const cs::Assignment a = cs::assignment_from_config(cfg, part);
    cs::io::save_image(cs::apply_distortion(img, part, a), output);
    std::cout << "wrote " << output << " (" << img.dims.width << "x"
              << img.dims.height << ", lambda=" << part.lambda << ")\n";
    return 0;
}

int run_verify(const std::string& source, const std::string& distorted,
               const std::string& config_path, int tol_override,
               bool json_output) {
    const cs::DistortConfig cfg = load_config(config_path);
    const int tol = tol_override >= 0 ? tol_override : cfg.tolerance;
    const cs::ImageBuffer src = load_png(source);
    const cs::ImageBuffer out = load_png(distorted);
    const cs::Partition part = cs::build_partition(cfg.partition, src.dims);
    const cs::Assignment a = cs::assignment_from_config(cfg, part);
    const cs::VerifyReport rep =
        cs::verify_symmetry(src, out, part, a, cfg.element, tol);

    if (json_output) {
        json j;
        j["ok"] = rep.ok;
        j["tolerance"] = tol;
        j["max_abs_error"] = rep.max_abs_error;
        j["violation_count"] = rep.violations.size();
        j["violations"] = json::array();
        for (const auto& v : rep.violations)
            j["violations"].push_back({{"x", v.pixel.x},
                                       {"y", v.pixel.y},
                                       {"channel", v.channel},
                                       {"expected", v.expected},
                                       {"actual", v.actual}});
        j["pairing_violations"] = json::array();
        for (const auto& [p, q] : rep.pairing_violations)
            j["pairing_violations"].push_back(json::array({p, q}));
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (rep.ok ? "OK" : "FAIL") << " tolerance=" << tol
                  << " max_abs_error=[" << rep.max_abs_error[0] << ","
                  << rep.max_abs_error[1] << "," << rep.max_abs_error[2]
                  << "] violations=" << rep.violations.size()
                  << " pairing_violations=" << rep.pairing_violations.size()
                  << "\n";
    }
    return rep.ok ? 0 : kExitVerification;
}

int run_demo(const std::string& style, const std::string& element_name,
             int size, std::uint64_t seed, const std::string& output) {
    const auto g = cs::parse_element(element_name);
    if (!g || *g == cs::GroupElement::E)
        throw CliError{kExitValidation,
                       "element must be rot, refh or refv: " + element_name};
    if (size < 2 || size % 2 != 0)
        throw CliError{kExitValidation, "size must be even and >= 2"};

    const cs::PartitionSpec spec = style_spec(style, seed);
    const cs::PaletteIndexPerm perm = default_perm(*g);
    const cs::ImageBuffer demo =
        cs::make_demo(spec, kDemoPalette, {{*g, perm}}, {size, size});
    cs::io::save_image(demo, output);

    // realized permutation, read back off the artifact itself
    const auto realized =
        cs::check_transitive(demo, cs::transform_image(demo, *g));

    json j;
    j["element"] = element_name;
    j["style"] = style;
    j["transitive"] = realized.ok;
    json pal;
    for (int i = 0; i < 4; ++i)
        pal[kDemoNames[i]] = {kDemoPalette[i].r, kDemoPalette[i].g,
                              kDemoPalette[i].b};
    j["palette"] = pal;
    json upper = json::array(), lower = json::array();
    for (const auto& [from, to] : realized.mapping) {
        const int fi = name_of_color(from), ti = name_of_color(to);
        upper.push_back(fi >= 0 ? kDemoNames[fi] : "?");
        lower.push_back(ti >= 0 ? kDemoNames[ti] : "?");
    }
    j["permutation"] = {{"two_line", json::array({upper, lower})}};

    const std::string sidecar = output + ".json";
    std::ofstream side(sidecar, std::ios::binary);
    if (!side) throw CliError{kExitIo, "cannot write sidecar: " + sidecar};
    side << j.dump(2) << "\n";
    std::cout << "wrote " << output << " and " << sidecar << "\n";
    return 0;
}

int run_maps(const std::string& family, const std::vector<double>& params,
             const std::string& output) {
    json spec;
    spec["family"] = family;
    if (!params.empty()) spec["params"] = params;
    // reuse config validation for the family names
    json cfg = {{"element", "rot"},
                {"partition", {{"kind", "grid"}, {"rows", 1}, {"cols", 1}}},
                {"maps", json::array({{{"subsections", "pairs"},
                                       {"hue", spec}}})}};
    const auto parsed = cs::parse_config(cfg.dump());
    if (!parsed.ok()) {
        std::string msg = "invalid map family:";
        for (const auto& e : parsed.errors) msg += "\n  " + e;
        throw CliError{kExitValidation, msg};
    }
    cs::io::write_map_csv(parsed.config.rules.at(0).maps.hue, output);
    std::cout << "wrote " << output << "\n";
    return 0;
}

int run_partdump(const std::string& config_path, int size,
                 const std::string& output) {
    const cs::DistortConfig cfg = load_config(config_path);
    if (size < 2 || size % 2 != 0)
        throw CliError{kExitValidation, "size must be even and >= 2"};
    const cs::Partition part = cs::build_partition(cfg.partition, {size, size});
    cs::io::save_image(cs::io::partition_debug_image(part), output);
    std::cout << "wrote " << output << " (lambda=" << part.lambda << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetry-consistent color distortion of raster images"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads,
                   "engine thread cap (0 = auto, CHROMASYM_THREADS fallback)");

    auto* distort = app.add_subcommand("distort", "apply a color distortion");
    std::string in_path, cfg_path, out_path;
    distort->add_option("-i,--input", in_path, "source PNG")->required();
    distort->add_option("-c,--config", cfg_path, "distortion config JSON")
        ->required();
    distort->add_option("-o,--output", out_path, "output PNG")->required();

    auto* verify = app.add_subcommand("verify", "verify color symmetry");
    std::string v_src, v_dst, v_cfg;
    int v_tol = -1;
    bool v_json = false;
    verify->add_option("-s,--source", v_src, "source PNG")->required();
    verify->add_option("-d,--distorted", v_dst, "distorted PNG")->required();
    verify->add_option("-c,--config", v_cfg, "distortion config JSON")
        ->required();
    verify->add_option("-t,--tolerance", v_tol,
                       "per-channel tolerance (overrides config)");
    verify->add_flag("--json", v_json, "emit the report as JSON");

    auto* demo = app.add_subcommand("demo", "render a flat color-symmetry demo");
    std::string d_style = "triangular", d_element = "rot", d_out;
    int d_size = 512;
    std::uint64_t d_seed = 42;
    demo->add_option("--style", d_style, "triangular|grid|bubble|perpixel");
    demo->add_option("--element", d_element, "rot|refh|refv");
    demo->add_option("--size", d_size, "square image side (even)");
    demo->add_option("--seed", d_seed, "seed for bubble style");
    demo->add_option("-o,--output", d_out, "output PNG")->required();

    auto* maps = app.add_subcommand("maps", "export a channel map table as CSV");
    std::string m_family, m_out;
    std::vector<double> m_params;
    maps->add_option("--family", m_family, "map family name")->required();
    maps->add_option("--params", m_params, "family parameters");
    maps->add_option("-o,--output", m_out, "output CSV")->required();

    auto* partdump =
        app.add_subcommand("partdump", "render a partition labeling as PNG");
    std::string p_cfg, p_out;
    int p_size = 512;
    partdump->add_option("-c,--config", p_cfg, "config JSON with the partition")
        ->required();
    partdump->add_option("--size", p_size, "square image side (even)");
    partdump->add_option("-o,--output", p_out, "output PNG")->required();

    CLI11_PARSE(app, argc, argv);
    cs::set_thread_count(threads);

    try {
        if (*distort) return run_distort(in_path, cfg_path, out_path);
        if (*verify) return run_verify(v_src, v_dst, v_cfg, v_tol, v_json);
        if (*demo) return run_demo(d_style, d_element, d_size, d_seed, d_out);
        if (*maps) return run_maps(m_family, m_params, m_out);
        if (*partdump) return run_partdump(p_cfg, p_size, p_out);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return 0;
}
