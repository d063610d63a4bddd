#include "chromasym/color.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chromasym/kernels.hpp"

namespace chromasym {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

ChannelMapSpec ChannelMapSpec::named(Family f) {
    if (f == Family::ModMultiply || f == Family::Harmonic || f == Family::Polynomial)
        throw std::invalid_argument("parametric family requires parameters");
    ChannelMapSpec m;
    m.family_ = f;
    return m;
}

ChannelMapSpec ChannelMapSpec::mod_multiply(std::uint32_t n) {
    if (n == 0) throw std::invalid_argument("mod_multiply: n must be >= 1");
    ChannelMapSpec m;
    m.family_ = Family::ModMultiply;
    m.params_ = {static_cast<double>(n)};
    return m;
}

ChannelMapSpec ChannelMapSpec::harmonic(double c0, double c1, double w1, double c2,
                                        double w2, double c3, double w3, double c4) {
    ChannelMapSpec m;
    m.family_ = Family::Harmonic;
    m.params_ = {c0, c1, w1, c2, w2, c3, w3, c4};
    return m;
}

ChannelMapSpec ChannelMapSpec::polynomial(std::vector<double> coefficients) {
    if (coefficients.empty())
        throw std::invalid_argument("polynomial: need at least one coefficient");
    ChannelMapSpec m;
    m.family_ = Family::Polynomial;
    m.params_ = std::move(coefficients);
    return m;
}

double ChannelMapSpec::eval(double x) const {
    switch (family_) {
        case Family::Identity:
            return x;
        case Family::F1:
            return 0.45 * std::fabs(std::sin(kSqrt2 * 20.0 * kPi * x)) +
                   0.55 * std::fabs(std::sin(20.0 * kPi * x));
        case Family::F2:
            return 0.5 * (1.0 + std::sin(40.0 * kPi * x));
        case Family::F3:
            return 4.0 * x * (1.0 - x);
        case Family::F4:
            return 4.0 * x * (x - 1.0) + 1.0;
        case Family::F5:
            return 0.15 * (1.0 + std::cos(40.0 * kPi * x)) + 0.5 * x;
        case Family::ModMultiply: {
            double y = std::fmod(params_[0] * x, 1.0);
            return y;
        }
        case Family::Harmonic: {
            const auto& c = params_;
            double y = c[0] + c[1] * std::fabs(std::sin(c[2] * kPi * x)) +
                       c[3] * std::sin(c[4] * kPi * x) +
                       c[5] * std::cos(c[6] * kPi * x) + c[7] * x;
            return clamp01(y);
        }
        case Family::Polynomial: {
            double y = 0.0;
            for (auto it = params_.rbegin(); it != params_.rend(); ++it)
                y = y * x + *it;
            return clamp01(y);
        }
    }
    return x;  // unreachable
}

HsvPixel rgb_to_hsv(const RgbPixel& p) {
    HsvPixel out;
    kernels::scalar_ops().rgb_to_hsv(&p, 1, &out.h, &out.s, &out.v);
    return out;
}

RgbPixel hsv_to_rgb(const HsvPixel& p) {
    RgbPixel out;
    kernels::scalar_ops().hsv_to_rgb(&p.h, &p.s, &p.v, &out, 1);
    return out;
}

RgbPixel map_pixel(const RgbPixel& in, const ChannelMaps& maps) {
    HsvPixel hsv = rgb_to_hsv(in);
    hsv.h = maps.hue.eval(hsv.h);
    hsv.s = maps.saturation.eval(hsv.s);
    hsv.v = maps.value.eval(hsv.v);
    RgbPixel out = hsv_to_rgb(hsv);
    out.a = in.a;
    return out;
}

}  // namespace chromasym
