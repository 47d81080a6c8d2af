#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stereorig/errors.hpp"

namespace stereorig {

/// Interleaved 8-bit RGB raster.
struct Rgb8Image {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // width * height * 3 bytes, row-major

    static Rgb8Image filled(int width, int height, std::uint8_t r, std::uint8_t g,
                            std::uint8_t b);

    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    }
    const std::uint8_t* pixel(int x, int y) const {
        return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
    std::uint8_t* pixel(int x, int y) {
        return data.data() + (static_cast<std::size_t>(y) * width + x) * 3;
    }
};

struct LoadedImage {
    Rgb8Image image;
    std::string format;    // "png", "jpeg", "ppm"
    bool lossless = true;  // false for formats whose compression alters pixels
};

/// Reads a PNG, JPEG, or binary PPM file into 8-bit RGB. Grayscale and
/// palette inputs are expanded, alpha is dropped; 16-bit inputs are rejected
/// with FormatError. Unknown magic bytes raise FormatError, filesystem
/// problems IoError.
LoadedImage load_rgb8(const std::filesystem::path& path);

void save_ppm(const std::filesystem::path& path, const Rgb8Image& image);
void save_png(const std::filesystem::path& path, const Rgb8Image& image);

}  // namespace stereorig
