#pragma once

#include <functional>
#include <string>
#include <vector>

#include "synthseg/image.hpp"
#include "synthseg/rng.hpp"

namespace synthseg {

// Simplex weights drawn from Dir(alpha). Components live on the open simplex:
// each lambda_m >= 1e-9 and the vector sums to 1.
struct BlendWeights {
    std::vector<double> lambda;
    std::vector<double> alpha;

    size_t size() const { return lambda.size(); }
};

BlendWeights sample_weights(const std::vector<double>& alpha, Rng& rng);

// Copy-paste: out = mask * fg + (1 - mask) * bg.
ImageF blend_trivial(const ImageF& fg, const BinaryMask& mask, const ImageF& bg);

// Gaussian feathering: the mask is eroded (k=3) and blurred (k=5) before the
// convex combination.
ImageF blend_feather(const ImageF& fg, const BinaryMask& mask, const ImageF& bg);

// Laplacian pyramid blending: bands combined with the Gaussian pyramid of the
// mask as weights, then collapsed.
ImageF blend_laplacian(const ImageF& fg, const BinaryMask& mask, const ImageF& bg, int levels = 4);

using BlendFn = std::function<ImageF(const ImageF&, const BinaryMask&, const ImageF&)>;

struct BlendBasis {
    std::vector<std::string> names;
    std::vector<BlendFn> fns;

    size_t size() const { return fns.size(); }

    // [trivial, gaussian_feather, laplacian]
    static BlendBasis standard(int laplacian_levels = 4);
};

// One image per basis member, in basis order.
std::vector<ImageF> multi_blend(const ImageF& fg, const BinaryMask& mask, const ImageF& bg,
                                const BlendBasis& basis);

// Pixel-wise sum(lambda_m * images[m]), clamped to [0,1].
ImageF weighted_sum(const std::vector<ImageF>& images, const std::vector<double>& lambda);

ImageF mix_blend(const ImageF& fg, const BinaryMask& mask, const ImageF& bg,
                 const BlendWeights& weights, const BlendBasis& basis);

// The composited label is the (transformed) foreground mask, independent of
// the blending function.
BinaryMask label_of(const BinaryMask& fg_mask);
BinaryMask label_of(const BinaryMask& fg_mask,
                    const std::function<BinaryMask(const BinaryMask&)>& geometric_transform);

} // namespace synthseg
