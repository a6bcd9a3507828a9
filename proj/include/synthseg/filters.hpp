#pragma once

#include "synthseg/image.hpp"

namespace synthseg {

// k x k square structuring element, k odd. Pixels whose window leaves the
// image are treated as failing the erosion test (outside = 0).
BinaryMask erode(const BinaryMask& mask, int k);
BinaryMask dilate(const BinaryMask& mask, int k);

// Window-to-sigma rule: sigma = 0.3 * ((k - 1) / 2 - 1) + 0.8.
double gaussian_sigma_for_kernel(int k);
std::vector<float> gaussian_kernel(int k, double sigma = 0.0);

// Separable Gaussian blur with edge replication, k odd.
SoftMask gaussian_blur(const SoftMask& mask, int k, double sigma = 0.0);
ImageF gaussian_blur(const ImageF& img, int k, double sigma = 0.0);

ImageF median_blur(const ImageF& img, int k);

// 1D box kernel rotated by angle_deg, normalized.
ImageF motion_blur(const ImageF& img, int k, double angle_deg);

} // namespace synthseg
