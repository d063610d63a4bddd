#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "chromasym/kernels.hpp"

namespace chromasym::kernels {

// AVX2 variants of the hexcone conversions, four pixels per iteration.
// Every arithmetic step (max/min, subtract, divide, floor) is IEEE
// correctly rounded and mirrors the scalar reference op for op, so the
// results are bit-identical to kernels_scalar.cpp.

namespace {

inline __m256d blend(__m256d a, __m256d b, __m256d mask) {
    return _mm256_blendv_pd(a, b, mask);
}

inline void rgb_to_hsv4(const RgbPixel* px, double* h, double* s, double* v) {
    const __m256d r = _mm256_set_pd(px[3].r, px[2].r, px[1].r, px[0].r);
    const __m256d g = _mm256_set_pd(px[3].g, px[2].g, px[1].g, px[0].g);
    const __m256d b = _mm256_set_pd(px[3].b, px[2].b, px[1].b, px[0].b);

    const __m256d mx = _mm256_max_pd(r, _mm256_max_pd(g, b));
    const __m256d mn = _mm256_min_pd(r, _mm256_min_pd(g, b));
    const __m256d delta = _mm256_sub_pd(mx, mn);
    const __m256d zero = _mm256_setzero_pd();

    _mm256_storeu_pd(v, _mm256_div_pd(mx, _mm256_set1_pd(255.0)));

    const __m256d mx_zero = _mm256_cmp_pd(mx, zero, _CMP_EQ_OQ);
    _mm256_storeu_pd(s, blend(_mm256_div_pd(delta, mx), zero, mx_zero));

    // sector selection mirrors the scalar if/else-if chain: r first, then g
    const __m256d sec_r = _mm256_div_pd(_mm256_sub_pd(g, b), delta);
    const __m256d sec_g = _mm256_add_pd(_mm256_set1_pd(2.0),
                                        _mm256_div_pd(_mm256_sub_pd(b, r), delta));
    const __m256d sec_b = _mm256_add_pd(_mm256_set1_pd(4.0),
                                        _mm256_div_pd(_mm256_sub_pd(r, g), delta));
    const __m256d is_r = _mm256_cmp_pd(mx, r, _CMP_EQ_OQ);
    const __m256d is_g = _mm256_cmp_pd(mx, g, _CMP_EQ_OQ);
    __m256d sector = blend(blend(sec_b, sec_g, is_g), sec_r, is_r);

    __m256d hue = _mm256_div_pd(sector, _mm256_set1_pd(6.0));
    const __m256d neg = _mm256_cmp_pd(hue, zero, _CMP_LT_OQ);
    hue = _mm256_add_pd(hue, _mm256_and_pd(neg, _mm256_set1_pd(1.0)));
    const __m256d achroma = _mm256_cmp_pd(delta, zero, _CMP_EQ_OQ);
    _mm256_storeu_pd(h, blend(hue, zero, achroma));
}

inline void hsv_to_rgb4(const double* h, const double* s, const double* v,
                        RgbPixel* out) {
    __m256d x = _mm256_mul_pd(_mm256_loadu_pd(h), _mm256_set1_pd(6.0));
    const __m256d wrap = _mm256_cmp_pd(x, _mm256_set1_pd(6.0), _CMP_GE_OQ);
    x = _mm256_sub_pd(x, _mm256_and_pd(wrap, _mm256_set1_pd(6.0)));

    const __m256d fi = _mm256_floor_pd(x);
    const __m256d f = _mm256_sub_pd(x, fi);
    const __m256d vv = _mm256_loadu_pd(v);
    const __m256d ss = _mm256_loadu_pd(s);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d p = _mm256_mul_pd(vv, _mm256_sub_pd(one, ss));
    const __m256d q = _mm256_mul_pd(vv, _mm256_sub_pd(one, _mm256_mul_pd(ss, f)));
    const __m256d t = _mm256_mul_pd(
        vv, _mm256_sub_pd(one, _mm256_mul_pd(ss, _mm256_sub_pd(one, f))));

    auto sector_is = [&](double k) {
        return _mm256_cmp_pd(fi, _mm256_set1_pd(k), _CMP_EQ_OQ);
    };
    // default lanes are sector 5: (v, p, q)
    __m256d r = vv, g = p, b = q;
    __m256d m = sector_is(4.0);
    r = blend(r, t, m); g = blend(g, p, m); b = blend(b, vv, m);
    m = sector_is(3.0);
    r = blend(r, p, m); g = blend(g, q, m); b = blend(b, vv, m);
    m = sector_is(2.0);
    r = blend(r, p, m); g = blend(g, vv, m); b = blend(b, t, m);
    m = sector_is(1.0);
    r = blend(r, q, m); g = blend(g, vv, m); b = blend(b, p, m);
    m = sector_is(0.0);
    r = blend(r, vv, m); g = blend(g, t, m); b = blend(b, p, m);

    auto quantize = [](__m256d c) {
        const __m256d y = _mm256_floor_pd(_mm256_add_pd(
            _mm256_mul_pd(c, _mm256_set1_pd(255.0)), _mm256_set1_pd(0.5)));
        return _mm256_cvttpd_epi32(y);
    };
    alignas(16) std::int32_t ri[4], gi[4], bi[4];
    _mm_store_si128(reinterpret_cast<__m128i*>(ri), quantize(r));
    _mm_store_si128(reinterpret_cast<__m128i*>(gi), quantize(g));
    _mm_store_si128(reinterpret_cast<__m128i*>(bi), quantize(b));
    for (int i = 0; i < 4; ++i) {
        out[i].r = static_cast<std::uint8_t>(ri[i]);
        out[i].g = static_cast<std::uint8_t>(gi[i]);
        out[i].b = static_cast<std::uint8_t>(bi[i]);
    }
}

void rgb_to_hsv_avx2(const RgbPixel* px, std::size_t n, double* h, double* s,
                     double* v) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) rgb_to_hsv4(px + i, h + i, s + i, v + i);
    if (i < n) scalar_ops().rgb_to_hsv(px + i, n - i, h + i, s + i, v + i);
}

void hsv_to_rgb_avx2(const double* h, const double* s, const double* v,
                     RgbPixel* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) hsv_to_rgb4(h + i, s + i, v + i, out + i);
    if (i < n) scalar_ops().hsv_to_rgb(h + i, s + i, v + i, out + i, n - i);
}

}  // namespace

const Ops& avx2_ops() {
    static const Ops ops{&rgb_to_hsv_avx2, &hsv_to_rgb_avx2};
    return ops;
}

}  // namespace chromasym::kernels

#endif  // x86_64
