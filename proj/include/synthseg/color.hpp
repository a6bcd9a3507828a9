#pragma once

#include "synthseg/image.hpp"

namespace synthseg {

// Hexcone HSV. Hue is stored in [0,1) (scaled from [0,360) degrees).
void rgb_to_hsv_pixel(float r, float g, float b, float& h, float& s, float& v);
void hsv_to_rgb_pixel(float h, float s, float v, float& r, float& g, float& b);

ImageF rgb_to_hsv(const ImageF& img);
ImageF hsv_to_rgb(const ImageF& img);

} // namespace synthseg
