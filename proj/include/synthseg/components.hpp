#pragma once

#include <cstdint>
#include <vector>

#include "synthseg/image.hpp"

namespace synthseg {

// 8-connected components of the foreground. Labels run 1..count in
// decreasing size order (ties keep first-encounter order); 0 is background.
struct Components {
    std::vector<int32_t> labels;
    std::vector<size_t> sizes; // sizes[i] = pixel count of label i+1
    int height = 0;
    int width = 0;

    int count() const { return static_cast<int>(sizes.size()); }
    int32_t label_at(int y, int x) const { return labels[static_cast<size_t>(y) * width + x]; }
};

Components connected_components(const BinaryMask& mask);

} // namespace synthseg
