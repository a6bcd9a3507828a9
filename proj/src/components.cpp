#include "synthseg/components.hpp"

#include <algorithm>
#include <numeric>

namespace synthseg {

Components connected_components(const BinaryMask& mask) {
    int h = mask.height(), w = mask.width();
    Components out;
    out.height = h;
    out.width = w;
    out.labels.assign(static_cast<size_t>(h) * w, 0);

    std::vector<size_t> raw_sizes; // indexed by provisional label - 1
    std::vector<int32_t> stack;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            size_t idx = static_cast<size_t>(y) * w + x;
            if (!mask.data()[idx] || out.labels[idx]) continue;
            int32_t label = static_cast<int32_t>(raw_sizes.size()) + 1;
            size_t size = 0;
            stack.push_back(static_cast<int32_t>(idx));
            out.labels[idx] = label;
            while (!stack.empty()) {
                int32_t cur = stack.back();
                stack.pop_back();
                ++size;
                int cy = cur / w, cx = cur % w;
                for (int dy = -1; dy <= 1; ++dy) {
                    int ny = cy + dy;
                    if (ny < 0 || ny >= h) continue;
                    for (int dx = -1; dx <= 1; ++dx) {
                        int nx = cx + dx;
                        if (nx < 0 || nx >= w) continue;
                        size_t nidx = static_cast<size_t>(ny) * w + nx;
                        if (mask.data()[nidx] && !out.labels[nidx]) {
                            out.labels[nidx] = label;
                            stack.push_back(static_cast<int32_t>(nidx));
                        }
                    }
                }
            }
            raw_sizes.push_back(size);
        }
    }

    // relabel in decreasing size order, stable
    std::vector<int32_t> order(raw_sizes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int32_t a, int32_t b) { return raw_sizes[a] > raw_sizes[b]; });

    std::vector<int32_t> remap(raw_sizes.size() + 1, 0);
    out.sizes.resize(raw_sizes.size());
    for (size_t rank = 0; rank < order.size(); ++rank) {
        remap[order[rank] + 1] = static_cast<int32_t>(rank) + 1;
        out.sizes[rank] = raw_sizes[order[rank]];
    }
    for (int32_t& l : out.labels) l = remap[l];
    return out;
}

} // namespace synthseg
