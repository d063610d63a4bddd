#include "chromasym/io.hpp"

#include <png.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <memory>
#include <stdexcept>

namespace chromasym::io {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

}  // namespace

LoadedImage load_image(const std::string& path, const LoadOptions& opts) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) fail("cannot open image file: " + path);

    png_byte header[8];
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8))
        fail("not a PNG file: " + path);

    png_structp png =
        png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail("libpng initialization failed");
    }
    std::vector<png_byte> raw;
    std::vector<png_bytep> rows;
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail("PNG decode error: " + path);
    }
    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    const png_uint_32 w = png_get_image_width(png, info);
    const png_uint_32 h = png_get_image_height(png, info);
    const int color_type = png_get_color_type(png, info);
    const int bit_depth = png_get_bit_depth(png, info);

    const bool src_has_alpha =
        (color_type & PNG_COLOR_MASK_ALPHA) != 0 ||
        png_get_valid(png, info, PNG_INFO_tRNS);

    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
        png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (bit_depth == 16) png_set_strip_16(png);  // keep the high byte
    if (color_type == PNG_COLOR_TYPE_GRAY ||
        color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    if (!src_has_alpha) png_set_add_alpha(png, 0xFF, PNG_FILLER_AFTER);
    png_read_update_info(png, info);

    if (png_get_rowbytes(png, info) != static_cast<std::size_t>(w) * 4) {
        png_destroy_read_struct(&png, &info, nullptr);
        fail("unsupported PNG layout: " + path);
    }

    raw.resize(static_cast<std::size_t>(w) * h * 4);
    rows.resize(h);
    for (png_uint_32 y = 0; y < h; ++y)
        rows[y] = raw.data() + static_cast<std::size_t>(y) * w * 4;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    LoadedImage result;
    int out_w = static_cast<int>(w);
    int out_h = static_cast<int>(h);
    if (out_w % 2 != 0 || out_h % 2 != 0) {
        if (!opts.crop_to_even)
            fail("image has odd dimensions and cropping is disabled: " + path);
        const int new_w = out_w - out_w % 2;
        const int new_h = out_h - out_h % 2;
        result.warnings.push_back("cropped " + std::to_string(out_w) + "x" +
                                  std::to_string(out_h) + " to " +
                                  std::to_string(new_w) + "x" +
                                  std::to_string(new_h));
        out_w = new_w;
        out_h = new_h;
    }
    if (out_w == 0 || out_h == 0) fail("image too small after cropping: " + path);

    ImageBuffer img({out_w, out_h});
    img.has_alpha = src_has_alpha && !opts.strip_alpha;
    for (int y = 0; y < out_h; ++y)
        for (int x = 0; x < out_w; ++x) {
            const png_byte* px = raw.data() + (static_cast<std::size_t>(y) * w + x) * 4;
            img.at(x, y) = {px[0], px[1], px[2],
                            opts.strip_alpha ? std::uint8_t{255} : px[3]};
        }
    result.image = std::move(img);
    return result;
}

void save_image(const ImageBuffer& img, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) fail("cannot open output file: " + path);

    png_structp png =
        png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        fail("libpng initialization failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        fail("PNG encode error: " + path);
    }
    png_init_io(png, fp.get());
    png_set_compression_level(png, 6);
    png_set_filter(png, 0, PNG_ALL_FILTERS);

    const int channels = img.has_alpha ? 4 : 3;
    png_set_IHDR(png, info, img.dims.width, img.dims.height, 8,
                 img.has_alpha ? PNG_COLOR_TYPE_RGBA : PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    std::vector<png_byte> row(static_cast<std::size_t>(img.dims.width) * channels);
    for (int y = 0; y < img.dims.height; ++y) {
        for (int x = 0; x < img.dims.width; ++x) {
            const RgbPixel& p = img.at(x, y);
            png_byte* dst = row.data() + static_cast<std::size_t>(x) * channels;
            dst[0] = p.r;
            dst[1] = p.g;
            dst[2] = p.b;
            if (channels == 4) dst[3] = p.a;
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

void write_map_csv(const ChannelMapSpec& map, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "w"));
    if (!fp) fail("cannot open output file: " + path);
    std::fputs("x,y\n", fp.get());
    for (int i = 0; i < 4096; ++i) {
        const double x = i / 4096.0;
        std::fprintf(fp.get(), "%.9f,%.9f\n", x, map.eval(x));
    }
}

ImageBuffer partition_debug_image(const Partition& part) {
    // fixed 256-entry palette: golden-ratio hue stepping over two
    // saturation/value tiers
    std::array<RgbPixel, 256> palette;
    for (int i = 0; i < 256; ++i) {
        const double hue = std::fmod(i * 0.6180339887498949, 1.0);
        const double sat = (i % 2 == 0) ? 0.85 : 0.55;
        const double val = (i % 4 < 2) ? 0.95 : 0.65;
        palette[i] = hsv_to_rgb({hue, sat, val});
    }
    ImageBuffer img(part.dims);
    for (int y = 0; y < part.dims.height; ++y)
        for (int x = 0; x < part.dims.width; ++x)
            img.at(x, y) = palette[part.label({x, y}) % 256];
    return img;
}

}  // namespace chromasym::io
