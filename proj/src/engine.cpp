#include "chromasym/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "chromasym/kernels.hpp"

namespace chromasym {

namespace {

std::atomic<int> g_threads{0};

int resolve_threads() {
    int n = g_threads.load();
    if (n > 0) return n;
    if (const char* env = std::getenv("CHROMASYM_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::uint32_t rgb_key(const RgbPixel& p) {
    return (static_cast<std::uint32_t>(p.r) << 16) |
           (static_cast<std::uint32_t>(p.g) << 8) | p.b;
}

void distort_rows(const ImageBuffer& img, const Partition& part,
                  const Assignment& a, ImageBuffer& out, int y0, int y1) {
    const int w = img.dims.width;
    const auto& ops = kernels::active();
    std::vector<double> h(w), s(w), v(w);
    for (int y = y0; y < y1; ++y) {
        const RgbPixel* in_row = &img.pixels[static_cast<std::size_t>(y) * w];
        RgbPixel* out_row = &out.pixels[static_cast<std::size_t>(y) * w];
        ops.rgb_to_hsv(in_row, static_cast<std::size_t>(w), h.data(), s.data(),
                       v.data());
        for (int x = 0; x < w; ++x) {
            const ChannelMaps& m = a.maps[part.label({x, y})];
            h[x] = m.hue.eval(h[x]);
            s[x] = m.saturation.eval(s[x]);
            v[x] = m.value.eval(v[x]);
        }
        ops.hsv_to_rgb(h.data(), s.data(), v.data(), out_row,
                       static_cast<std::size_t>(w));
    }
}

}  // namespace

void set_thread_count(int n) { g_threads.store(n < 0 ? 0 : n); }

int thread_count() { return resolve_threads(); }

ImageBuffer apply_distortion(const ImageBuffer& img, const Partition& part,
                             const Assignment& a) {
    if (img.dims != part.dims)
        throw std::invalid_argument("image and partition dimensions differ");
    if (a.maps.size() != part.lambda)
        throw std::invalid_argument("assignment does not cover all subsections");

    ImageBuffer out = img;  // carries alpha through unchanged
    const int h = img.dims.height;
    const int nthreads = std::min(resolve_threads(), h);
    if (nthreads <= 1) {
        distort_rows(img, part, a, out, 0, h);
        return out;
    }
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    const int band = (h + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        const int y0 = t * band;
        const int y1 = std::min(h, y0 + band);
        if (y0 >= y1) break;
        workers.emplace_back(distort_rows, std::cref(img), std::cref(part),
                             std::cref(a), std::ref(out), y0, y1);
    }
    for (auto& w : workers) w.join();
    return out;
}

Assignment symmetric_assignment(const Partition& part, GroupElement g,
                                const ChannelMaps& upper, const ChannelMaps& lower,
                                const PairScope& scope) {
    if (g == GroupElement::E)
        throw std::invalid_argument("symmetric_assignment: element must not be e");
    const PairSet ps = pair_set(part, g);

    Assignment a;
    a.element = g;
    a.maps.assign(part.lambda, ChannelMaps{});  // identity outside scope

    auto set_pair = [&](std::uint32_t lp, std::uint32_t lq) {
        a.maps[lp] = upper;
        a.maps[lq] = lower;
    };
    if (scope.all) {
        for (const auto& [lp, lq] : ps.pairs) set_pair(lp, lq);
    } else {
        for (const auto& [p, q] : scope.pairs) {
            if (p >= part.lambda || q >= part.lambda)
                throw std::invalid_argument("pair id out of range");
            if (ps.partner[p] != q)
                throw std::invalid_argument("listed pair is not a g-pair");
            // orient to the canonical upper side
            const bool p_is_upper =
                std::find(ps.pairs.begin(), ps.pairs.end(), std::pair{p, q}) !=
                ps.pairs.end();
            if (p_is_upper)
                set_pair(p, q);
            else
                set_pair(q, p);
        }
    }
    return a;
}

VerifyReport verify_symmetry(const ImageBuffer& src, const ImageBuffer& out,
                             const Partition& part, const Assignment& a,
                             GroupElement g, int tolerance) {
    if (src.dims != out.dims || src.dims != part.dims)
        throw std::invalid_argument("verify_symmetry: dimension mismatch");
    if (a.maps.size() != part.lambda)
        throw std::invalid_argument("assignment does not cover all subsections");

    VerifyReport rep;

    // (i) recoloring: out equals the per-subsection mapped src within tol
    for (int y = 0; y < src.dims.height; ++y) {
        for (int x = 0; x < src.dims.width; ++x) {
            const std::uint32_t id = part.label({x, y});
            const RgbPixel expected = map_pixel(src.at(x, y), a.maps[id]);
            const RgbPixel actual = out.at(x, y);
            const std::uint8_t exp_ch[3] = {expected.r, expected.g, expected.b};
            const std::uint8_t act_ch[3] = {actual.r, actual.g, actual.b};
            for (int c = 0; c < 3; ++c) {
                const int diff = std::abs(int(exp_ch[c]) - int(act_ch[c]));
                rep.max_abs_error[c] = std::max(rep.max_abs_error[c], diff);
                if (diff > tolerance)
                    rep.violations.push_back({{x, y}, c, exp_ch[c], act_ch[c]});
            }
        }
    }

    // (ii) pairing: the map across each g-pair is the one the pair
    // structure prescribes
    if (g != GroupElement::E) {
        const PairSet ps = pair_set(part, g);
        std::vector<bool> checked(part.lambda, false);
        for (int y = 0; y < src.dims.height; ++y) {
            for (int x = 0; x < src.dims.width; ++x) {
                const std::uint32_t lp = part.label({x, y});
                if (checked[lp]) continue;
                checked[lp] = true;
                const std::uint32_t lq =
                    part.label(map_coord(g, {x, y}, src.dims));
                if (!(a.maps[ps.partner[lp]] == a.maps[lq]))
                    rep.pairing_violations.emplace_back(lp, lq);
            }
        }
    }

    rep.ok = rep.violations.empty() && rep.pairing_violations.empty();
    return rep;
}

TransitiveResult check_transitive(const ImageBuffer& src,
                                  const ImageBuffer& out) {
    if (src.dims != out.dims)
        throw std::invalid_argument("check_transitive: dimension mismatch");

    std::unordered_map<std::uint32_t, std::uint32_t> fwd;
    for (std::size_t i = 0; i < src.pixels.size(); ++i) {
        const std::uint32_t from = rgb_key(src.pixels[i]);
        const std::uint32_t to = rgb_key(out.pixels[i]);
        auto [it, inserted] = fwd.emplace(from, to);
        if (!inserted && it->second != to)
            throw std::invalid_argument(
                "color relation is not a function: one source color maps to "
                "two output colors");
        if (fwd.size() > 256)
            throw std::invalid_argument("source palette exceeds 256 colors");
    }

    TransitiveResult res;
    res.mapping.reserve(fwd.size());
    for (const auto& [from, to] : fwd) {
        auto unkey = [](std::uint32_t k) {
            return RgbPixel{static_cast<std::uint8_t>(k >> 16),
                            static_cast<std::uint8_t>(k >> 8),
                            static_cast<std::uint8_t>(k), 255};
        };
        res.mapping.emplace_back(unkey(from), unkey(to));
    }
    std::sort(res.mapping.begin(), res.mapping.end(),
              [&](const auto& a, const auto& b) {
                  return rgb_key(a.first) < rgb_key(b.first);
              });

    std::vector<std::uint32_t> targets;
    targets.reserve(fwd.size());
    for (const auto& [from, to] : fwd) targets.push_back(to);
    std::sort(targets.begin(), targets.end());
    res.ok = std::adjacent_find(targets.begin(), targets.end()) == targets.end();
    return res;
}

ImageBuffer transform_image(const ImageBuffer& img, GroupElement g) {
    ImageBuffer out(img.dims, {}, img.has_alpha);
    for (int y = 0; y < img.dims.height; ++y)
        for (int x = 0; x < img.dims.width; ++x) {
            const PixelCoord q = map_coord(g, {x, y}, img.dims);
            out.at(x, y) = img.at(q.x, q.y);
        }
    return out;
}

ImageBuffer make_demo(const PartitionSpec& style,
                      const std::array<RgbPixel, 4>& palette,
                      const std::map<GroupElement, PaletteIndexPerm>& perms,
                      Dims dims) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (palette[i] == palette[j])
                throw std::invalid_argument("palette colors must be distinct");

    for (const auto& [g, perm] : perms) {
        if (g == GroupElement::E)
            throw std::invalid_argument("demo permutation for identity element");
        std::array<bool, 4> seen{};
        for (int i = 0; i < 4; ++i) {
            if (perm[i] < 0 || perm[i] > 3 || seen[perm[i]])
                throw std::invalid_argument("invalid palette permutation");
            seen[perm[i]] = true;
        }
        for (int i = 0; i < 4; ++i)
            if (perm[perm[i]] != i)
                throw std::invalid_argument(
                    "permutation inconsistent with group element: must be an "
                    "involution");
    }

    const Partition part = build_partition(style, dims);
    const std::uint32_t K = part.canonical_count;

    // Color index per (section, canonical id). Free sections cycle through
    // the palette; sections reachable through a declared element take the
    // permuted colors of their source. Conflicting propagation paths mean
    // the declared permutations are incompatible with the group action.
    std::vector<int> color(4 * K, -1);
    int counter = 0;
    for (std::uint32_t sec = 0; sec < 4; ++sec) {
        if (color[sec * K] != -1) continue;
        for (std::uint32_t k = 0; k < K; ++k)
            color[sec * K + k] = counter++ % 4;
        // propagate through declared elements until stable
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::uint32_t s2 = 0; s2 < 4; ++s2) {
                if (color[s2 * K] == -1) continue;
                for (const auto& [g, perm] : perms) {
                    const auto dst = static_cast<std::uint32_t>(
                        section_apply(g, static_cast<Section>(s2)));
                    for (std::uint32_t k = 0; k < K; ++k) {
                        const int want = perm[color[s2 * K + k]];
                        int& cell = color[dst * K + k];
                        if (cell == -1) {
                            cell = want;
                            changed = true;
                        } else if (cell != want) {
                            throw std::invalid_argument(
                                "permutation inconsistent with group element");
                        }
                    }
                }
            }
        }
    }

    ImageBuffer img(dims);
    for (int y = 0; y < dims.height; ++y)
        for (int x = 0; x < dims.width; ++x) {
            const std::uint32_t id = part.label({x, y});
            img.at(x, y) = palette[color[id]];
        }
    return img;
}

}  // namespace chromasym
