#include "synthseg/blend.hpp"

#include <cmath>

#include "synthseg/filters.hpp"
#include "synthseg/pyramid.hpp"

namespace synthseg {

BlendWeights sample_weights(const std::vector<double>& alpha, Rng& rng) {
    if (alpha.empty()) throw std::invalid_argument("dirichlet: alpha must be nonempty");
    for (double a : alpha)
        if (!(a > 0.0)) throw std::invalid_argument("dirichlet: alpha components must be > 0");

    // Gamma-ratio construction, normalized in log space so tiny alphas survive.
    std::vector<double> logs(alpha.size());
    double log_max = -std::numeric_limits<double>::infinity();
    for (size_t m = 0; m < alpha.size(); ++m) {
        logs[m] = sample_log_gamma(rng, alpha[m]);
        log_max = std::max(log_max, logs[m]);
    }
    double denom = 0.0;
    for (double l : logs) denom += std::exp(l - log_max);

    BlendWeights w;
    w.alpha = alpha;
    w.lambda.resize(alpha.size());
    constexpr double kFloor = 1e-9; // open simplex
    double sum = 0.0;
    for (size_t m = 0; m < alpha.size(); ++m) {
        w.lambda[m] = std::max(std::exp(logs[m] - log_max) / denom, kFloor);
        sum += w.lambda[m];
    }
    for (double& l : w.lambda) l /= sum;
    return w;
}

ImageF blend_trivial(const ImageF& fg, const BinaryMask& mask, const ImageF& bg) {
    require_same_size(fg, bg, "blend_trivial");
    require_same_size(mask, fg, "blend_trivial");
    ImageF out = bg;
    for (int y = 0; y < fg.height(); ++y)
        for (int x = 0; x < fg.width(); ++x)
            if (mask.at(y, x)) {
                const float* s = fg.pixel(y, x);
                float* d = out.pixel(y, x);
                d[0] = s[0];
                d[1] = s[1];
                d[2] = s[2];
            }
    return out;
}

ImageF blend_feather(const ImageF& fg, const BinaryMask& mask, const ImageF& bg) {
    require_same_size(fg, bg, "blend_feather");
    require_same_size(mask, fg, "blend_feather");
    SoftMask soft = gaussian_blur(erode(mask, 3).to_soft(), 5);
    ImageF out(fg.height(), fg.width());
    for (int y = 0; y < fg.height(); ++y)
        for (int x = 0; x < fg.width(); ++x) {
            float m = soft.at(y, x);
            const float* f = fg.pixel(y, x);
            const float* b = bg.pixel(y, x);
            float* d = out.pixel(y, x);
            for (int c = 0; c < 3; ++c)
                d[c] = std::clamp(m * f[c] + (1.0f - m) * b[c], 0.0f, 1.0f);
        }
    return out;
}

ImageF blend_laplacian(const ImageF& fg, const BinaryMask& mask, const ImageF& bg, int levels) {
    require_same_size(fg, bg, "blend_laplacian");
    require_same_size(mask, fg, "blend_laplacian");
    LaplacianPyramid lp_fg = build_laplacian_pyramid(fg, levels);
    LaplacianPyramid lp_bg = build_laplacian_pyramid(bg, levels);
    MaskPyramid gp_mask = build_gaussian_pyramid(mask.to_soft(), levels);

    LaplacianPyramid blended;
    blended.levels.reserve(levels);
    for (int k = 0; k < levels; ++k) {
        const ImageF& lf = lp_fg.levels[k];
        const ImageF& lb = lp_bg.levels[k];
        const SoftMask& gm = gp_mask.levels[k];
        ImageF level(lf.height(), lf.width());
        for (int y = 0; y < lf.height(); ++y)
            for (int x = 0; x < lf.width(); ++x) {
                float m = gm.at(y, x);
                const float* f = lf.pixel(y, x);
                const float* b = lb.pixel(y, x);
                float* d = level.pixel(y, x);
                for (int c = 0; c < 3; ++c)
                    d[c] = m * f[c] + (1.0f - m) * b[c];
            }
        blended.levels.push_back(std::move(level));
    }
    ImageF out = collapse_laplacian(blended);
    out.clamp01();
    return out;
}

BlendBasis BlendBasis::standard(int laplacian_levels) {
    BlendBasis basis;
    basis.names = {"trivial", "gaussian_feather", "laplacian"};
    basis.fns = {
        [](const ImageF& f, const BinaryMask& m, const ImageF& b) { return blend_trivial(f, m, b); },
        [](const ImageF& f, const BinaryMask& m, const ImageF& b) { return blend_feather(f, m, b); },
        [laplacian_levels](const ImageF& f, const BinaryMask& m, const ImageF& b) {
            return blend_laplacian(f, m, b, laplacian_levels);
        },
    };
    return basis;
}

std::vector<ImageF> multi_blend(const ImageF& fg, const BinaryMask& mask, const ImageF& bg,
                                const BlendBasis& basis) {
    std::vector<ImageF> out;
    out.reserve(basis.size());
    for (const BlendFn& fn : basis.fns) out.push_back(fn(fg, mask, bg));
    return out;
}

ImageF weighted_sum(const std::vector<ImageF>& images, const std::vector<double>& lambda) {
    if (images.empty() || images.size() != lambda.size())
        throw std::invalid_argument("weighted_sum: weights/images length mismatch");
    for (const ImageF& im : images) require_same_size(im, images.front(), "weighted_sum");
    ImageF out(images.front().height(), images.front().width());
    for (size_t i = 0; i < out.data().size(); ++i) {
        double acc = 0.0;
        for (size_t m = 0; m < images.size(); ++m) acc += lambda[m] * images[m].data()[i];
        out.data()[i] = static_cast<float>(std::clamp(acc, 0.0, 1.0));
    }
    return out;
}

ImageF mix_blend(const ImageF& fg, const BinaryMask& mask, const ImageF& bg,
                 const BlendWeights& weights, const BlendBasis& basis) {
    if (weights.size() != basis.size())
        throw std::invalid_argument("mix_blend: weights/basis length mismatch");
    return weighted_sum(multi_blend(fg, mask, bg, basis), weights.lambda);
}

BinaryMask label_of(const BinaryMask& fg_mask) {
    return fg_mask;
}

BinaryMask label_of(const BinaryMask& fg_mask,
                    const std::function<BinaryMask(const BinaryMask&)>& geometric_transform) {
    return geometric_transform ? geometric_transform(fg_mask) : fg_mask;
}

} // namespace synthseg
