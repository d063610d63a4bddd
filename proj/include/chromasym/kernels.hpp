#pragma once

#include <cstddef>
#include <string>

#include "chromasym/color.hpp"

namespace chromasym::kernels {

// Batch color-space conversion kernels. The scalar versions are the
// reference; vector variants must produce bit-identical doubles and
// bytes, which the equivalence tests assert. Map evaluation is not
// vectorized: F1/F2/F5 depend on libm transcendentals whose vector
// counterparts are not bit-compatible.
struct Ops {
    // Planar output, one double per channel per pixel.
    void (*rgb_to_hsv)(const RgbPixel* px, std::size_t n, double* h, double* s,
                       double* v);
    // Writes r,g,b of out[i]; alpha bytes are left untouched.
    void (*hsv_to_rgb)(const double* h, const double* s, const double* v,
                       RgbPixel* out, std::size_t n);
};

enum class Backend { Scalar, Avx2 };

const Ops& scalar_ops();

// Best backend the CPU supports; resolved once at first use.
const Ops& active();
Backend active_backend();

// Force a backend (used by tests and the CLI). Returns false if the CPU
// lacks support, leaving the previous selection in place.
bool select(Backend b);

bool cpu_has_avx2();
std::string backend_name(Backend b);

}  // namespace chromasym::kernels
