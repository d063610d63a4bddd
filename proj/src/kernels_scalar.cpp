#include <cmath>

#include "chromasym/kernels.hpp"

namespace chromasym::kernels {

// Reference hexcone conversions. The vector kernels mirror this exact
// operation sequence; any change here must be replicated there to keep
// the backends bit-identical.

void rgb_to_hsv_scalar(const RgbPixel* px, std::size_t n, double* h, double* s,
                       double* v) {
    for (std::size_t i = 0; i < n; ++i) {
        const double r = px[i].r;
        const double g = px[i].g;
        const double b = px[i].b;
        const double mx = std::fmax(r, std::fmax(g, b));
        const double mn = std::fmin(r, std::fmin(g, b));
        const double delta = mx - mn;
        v[i] = mx / 255.0;
        s[i] = (mx == 0.0) ? 0.0 : delta / mx;
        double hue = 0.0;
        if (delta != 0.0) {
            double sector;
            if (mx == r)
                sector = (g - b) / delta;
            else if (mx == g)
                sector = 2.0 + (b - r) / delta;
            else
                sector = 4.0 + (r - g) / delta;
            hue = sector / 6.0;
            if (hue < 0.0) hue += 1.0;
        }
        h[i] = hue;
    }
}

void hsv_to_rgb_scalar(const double* h, const double* s, const double* v,
                       RgbPixel* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double x = h[i] * 6.0;
        if (x >= 6.0) x -= 6.0;  // hue 1.0 wraps to 0
        const double fi = std::floor(x);
        const double f = x - fi;
        const double vv = v[i];
        const double ss = s[i];
        const double p = vv * (1.0 - ss);
        const double q = vv * (1.0 - ss * f);
        const double t = vv * (1.0 - ss * (1.0 - f));
        double r, g, b;
        switch (static_cast<int>(fi)) {
            case 0: r = vv; g = t; b = p; break;
            case 1: r = q; g = vv; b = p; break;
            case 2: r = p; g = vv; b = t; break;
            case 3: r = p; g = q; b = vv; break;
            case 4: r = t; g = p; b = vv; break;
            default: r = vv; g = p; b = q; break;
        }
        out[i].r = static_cast<std::uint8_t>(std::floor(r * 255.0 + 0.5));
        out[i].g = static_cast<std::uint8_t>(std::floor(g * 255.0 + 0.5));
        out[i].b = static_cast<std::uint8_t>(std::floor(b * 255.0 + 0.5));
    }
}

const Ops& scalar_ops() {
    static const Ops ops{&rgb_to_hsv_scalar, &hsv_to_rgb_scalar};
    return ops;
}

}  // namespace chromasym::kernels
