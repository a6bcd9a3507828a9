#include "synthseg/pyramid.hpp"

namespace synthseg {

namespace {

constexpr float kTap[5] = {1.0f / 16, 4.0f / 16, 6.0f / 16, 4.0f / 16, 1.0f / 16};

inline int clampi(int v, int hi) { return v < 0 ? 0 : (v > hi ? hi : v); }

// Separable reduce: vertical convolve + decimate, then horizontal.
void reduce_planes(const float* src, int h, int w, int ch, float* dst, int oh, int ow) {
    std::vector<float> tmp(static_cast<size_t>(oh) * w * ch);
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                float acc = 0.0f;
                for (int i = 0; i < 5; ++i) {
                    int ys = clampi(2 * y + i - 2, h - 1);
                    acc += kTap[i] * src[(static_cast<size_t>(ys) * w + x) * ch + c];
                }
                tmp[(static_cast<size_t>(y) * w + x) * ch + c] = acc;
            }
        }
    }
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < ow; ++x) {
            for (int c = 0; c < ch; ++c) {
                float acc = 0.0f;
                for (int i = 0; i < 5; ++i) {
                    int xs = clampi(2 * x + i - 2, w - 1);
                    acc += kTap[i] * tmp[(static_cast<size_t>(y) * w + xs) * ch + c];
                }
                dst[(static_cast<size_t>(y) * ow + x) * ch + c] = acc;
            }
        }
    }
}

// Separable expand; per-axis weights sum to 1 after the factor-2 scaling.
void expand_planes(const float* src, int h, int w, int ch, float* dst, int oh, int ow) {
    std::vector<float> tmp(static_cast<size_t>(oh) * w * ch);
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                float acc = 0.0f;
                for (int i = 0; i < 5; ++i) {
                    int d = y - i + 2;
                    if (d & 1) continue;
                    int ys = clampi(d / 2, h - 1);
                    acc += kTap[i] * src[(static_cast<size_t>(ys) * w + x) * ch + c];
                }
                tmp[(static_cast<size_t>(y) * w + x) * ch + c] = 2.0f * acc;
            }
        }
    }
    for (int y = 0; y < oh; ++y) {
        for (int x = 0; x < ow; ++x) {
            for (int c = 0; c < ch; ++c) {
                float acc = 0.0f;
                for (int i = 0; i < 5; ++i) {
                    int d = x - i + 2;
                    if (d & 1) continue;
                    int xs = clampi(d / 2, w - 1);
                    acc += kTap[i] * tmp[(static_cast<size_t>(y) * w + xs) * ch + c];
                }
                dst[(static_cast<size_t>(y) * ow + x) * ch + c] = 2.0f * acc;
            }
        }
    }
}

void check_levels(int height, int width, int levels) {
    if (levels < 1) throw std::invalid_argument("pyramid: levels must be >= 1");
    if (std::min(height, width) < (1 << (levels - 1)))
        throw std::invalid_argument("pyramid: too many levels for image size");
}

inline int half_up(int v) { return (v + 1) / 2; }

} // namespace

int max_pyramid_levels(int height, int width) {
    int m = std::min(height, width);
    int levels = 1;
    while ((1 << levels) <= m) ++levels;
    return levels;
}

ImageF pyr_reduce(const ImageF& img) {
    ImageF out(half_up(img.height()), half_up(img.width()));
    reduce_planes(img.data().data(), img.height(), img.width(), 3,
                  out.data().data(), out.height(), out.width());
    return out;
}

SoftMask pyr_reduce(const SoftMask& mask) {
    SoftMask out(half_up(mask.height()), half_up(mask.width()));
    reduce_planes(mask.data().data(), mask.height(), mask.width(), 1,
                  out.data().data(), out.height(), out.width());
    return out;
}

ImageF pyr_expand(const ImageF& img, int th, int tw) {
    ImageF out(th, tw);
    expand_planes(img.data().data(), img.height(), img.width(), 3,
                  out.data().data(), th, tw);
    return out;
}

GaussianPyramid build_gaussian_pyramid(const ImageF& img, int levels) {
    check_levels(img.height(), img.width(), levels);
    GaussianPyramid pyr;
    pyr.levels.reserve(levels);
    pyr.levels.push_back(img);
    for (int k = 1; k < levels; ++k) pyr.levels.push_back(pyr_reduce(pyr.levels.back()));
    return pyr;
}

MaskPyramid build_gaussian_pyramid(const SoftMask& mask, int levels) {
    check_levels(mask.height(), mask.width(), levels);
    MaskPyramid pyr;
    pyr.levels.reserve(levels);
    pyr.levels.push_back(mask);
    for (int k = 1; k < levels; ++k) pyr.levels.push_back(pyr_reduce(pyr.levels.back()));
    return pyr;
}

LaplacianPyramid build_laplacian_pyramid(const ImageF& img, int levels) {
    GaussianPyramid gauss = build_gaussian_pyramid(img, levels);
    LaplacianPyramid pyr;
    pyr.levels.reserve(levels);
    for (int k = 0; k + 1 < levels; ++k) {
        const ImageF& fine = gauss.levels[k];
        ImageF up = pyr_expand(gauss.levels[k + 1], fine.height(), fine.width());
        ImageF band(fine.height(), fine.width());
        for (size_t i = 0; i < band.data().size(); ++i)
            band.data()[i] = fine.data()[i] - up.data()[i];
        pyr.levels.push_back(std::move(band));
    }
    pyr.levels.push_back(std::move(gauss.levels.back()));
    return pyr;
}

ImageF collapse_laplacian(const LaplacianPyramid& pyr) {
    if (pyr.levels.empty()) throw std::invalid_argument("pyramid: empty");
    ImageF acc = pyr.levels.back();
    for (int k = static_cast<int>(pyr.levels.size()) - 2; k >= 0; --k) {
        const ImageF& band = pyr.levels[k];
        ImageF up = pyr_expand(acc, band.height(), band.width());
        for (size_t i = 0; i < up.data().size(); ++i)
            up.data()[i] += band.data()[i];
        acc = std::move(up);
    }
    return acc;
}

} // namespace synthseg
