#pragma once

#include <string>
#include <vector>

#include "synthseg/image.hpp"

namespace synthseg {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 8-bit I/O. Images are RGB PNGs (gray and alpha inputs are widened/flattened);
// masks are single-channel PNGs with 0 = background, 255 = foreground.
// JPEG files are accepted on load.
ImageF load_image(const std::string& path);
void save_image(const std::string& path, const ImageF& img);

BinaryMask load_mask(const std::string& path);
void save_mask(const std::string& path, const BinaryMask& mask);

// probability maps encoded as 8-bit grayscale / 255
SoftMask load_soft_mask(const std::string& path);
void save_soft_mask(const std::string& path, const SoftMask& mask);

// In-memory JPEG round trip at the given quality (1..100); dims preserved.
ImageF jpeg_roundtrip(const ImageF& img, int quality);

} // namespace synthseg
