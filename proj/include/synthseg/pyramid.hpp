#pragma once

#include <vector>

#include "synthseg/image.hpp"

namespace synthseg {

// Burt-Adelson pyramids with the 5-tap binomial kernel [1,4,6,4,1]/16 and
// edge replication. Level k has dims ceil(dims(k-1)/2).
struct GaussianPyramid {
    std::vector<ImageF> levels;
};

struct LaplacianPyramid {
    std::vector<ImageF> levels; // band-pass except the coarsest, which is low-pass
};

struct MaskPyramid {
    std::vector<SoftMask> levels;
};

int max_pyramid_levels(int height, int width);

ImageF pyr_reduce(const ImageF& img);
ImageF pyr_expand(const ImageF& img, int target_height, int target_width);
SoftMask pyr_reduce(const SoftMask& mask);

GaussianPyramid build_gaussian_pyramid(const ImageF& img, int levels);
MaskPyramid build_gaussian_pyramid(const SoftMask& mask, int levels);
LaplacianPyramid build_laplacian_pyramid(const ImageF& img, int levels);
ImageF collapse_laplacian(const LaplacianPyramid& pyr);

} // namespace synthseg
