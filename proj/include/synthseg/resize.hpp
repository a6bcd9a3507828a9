#pragma once

#include "synthseg/image.hpp"

namespace synthseg {

// Bilinear resize to an exact target size.
ImageF resize_bilinear(const ImageF& img, int target_height, int target_width);
SoftMask resize_bilinear(const SoftMask& mask, int target_height, int target_width);

// Nearest-neighbor resize; keeps masks binary.
BinaryMask resize_nearest(const BinaryMask& mask, int target_height, int target_width);

// Output width = target_width, height = round(target_width * H / W).
ImageF resize_keep_aspect(const ImageF& img, int target_width);
BinaryMask resize_keep_aspect(const BinaryMask& mask, int target_width);

int aspect_height(int height, int width, int target_width);

} // namespace synthseg
