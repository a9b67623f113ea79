#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace plunge {

/// 8-bit RGB raster, row-major.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  ///< 3 * width * height bytes

    RgbImage() = default;
    RgbImage(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(3 * w * h), 0) {}
};

/// Binary PPM (P6, maxval 255).
std::string encode_ppm(const RgbImage& image);
RgbImage decode_ppm(const std::string& bytes);
void write_ppm(const RgbImage& image, const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace plunge
