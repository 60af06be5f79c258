#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boneage/core/types.hpp"

namespace boneage::core {

/// Reads an 8- or 16-bit grayscale PNG (color inputs are converted) and
/// normalizes intensities to [0,1] by the format maximum.
Image read_png_gray(const std::string& path);
Image decode_png_gray(const uint8_t* bytes, size_t len);

/// Writes intensities (clamped to [0,1]) as 8-bit grayscale.
void write_png_gray(const std::string& path, const Image& img);
std::vector<uint8_t> encode_png_gray(const Image& img);

}  // namespace boneage::core
