#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chromasym {

// 8-bit storage pixel. Alpha defaults to opaque; buffers track whether it
// is meaningful via ImageBuffer::has_alpha.
struct RgbPixel {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    std::uint8_t a = 255;

    friend bool operator==(const RgbPixel&, const RgbPixel&) = default;
};

// Working-space pixel: each channel in [0,1], double precision.
struct HsvPixel {
    double h = 0.0;
    double s = 0.0;
    double v = 0.0;

    friend bool operator==(const HsvPixel&, const HsvPixel&) = default;
};

/// Parametric channel map: a function [0,1] -> [0,1] applied to one HSV
/// channel. The named families F1..F5 and ModMultiply stay inside [0,1]
/// by closed-form bounds; Harmonic and Polynomial are clamped after
/// evaluation.
class ChannelMapSpec {
public:
    enum class Family : std::uint8_t {
        Identity,
        F1,
        F2,
        F3,
        F4,
        F5,
        ModMultiply,
        Harmonic,
        Polynomial,
    };

    ChannelMapSpec() = default;  // Identity

    static ChannelMapSpec identity() { return ChannelMapSpec{}; }
    static ChannelMapSpec named(Family f);
    static ChannelMapSpec mod_multiply(std::uint32_t n);
    // c0 + c1*|sin(w1*pi*x)| + c2*sin(w2*pi*x) + c3*cos(w3*pi*x) + c4*x, clamped
    static ChannelMapSpec harmonic(double c0, double c1, double w1, double c2,
                                   double w2, double c3, double w3, double c4);
    // Horner evaluation of coefficients (constant term first), clamped
    static ChannelMapSpec polynomial(std::vector<double> coefficients);

    Family family() const { return family_; }
    const std::vector<double>& params() const { return params_; }

    bool is_identity() const { return family_ == Family::Identity; }

    double eval(double x) const;

    friend bool operator==(const ChannelMapSpec&, const ChannelMapSpec&) = default;

private:
    Family family_ = Family::Identity;
    std::vector<double> params_;
};

// One map per HSV channel; saturation and value default to Identity.
struct ChannelMaps {
    ChannelMapSpec hue;
    ChannelMapSpec saturation;
    ChannelMapSpec value;

    bool all_identity() const {
        return hue.is_identity() && saturation.is_identity() && value.is_identity();
    }

    friend bool operator==(const ChannelMaps&, const ChannelMaps&) = default;
};

HsvPixel rgb_to_hsv(const RgbPixel& p);
RgbPixel hsv_to_rgb(const HsvPixel& p);

inline double eval_map(const ChannelMapSpec& m, double x) { return m.eval(x); }

// Applies the three channel maps to one pixel, keeping alpha.
RgbPixel map_pixel(const RgbPixel& in, const ChannelMaps& maps);

}  // namespace chromasym
