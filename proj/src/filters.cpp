#include "synthseg/filters.hpp"

#include <algorithm>
#include <cmath>

namespace synthseg {

namespace {

void check_kernel(int k) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("kernel size must be odd and >= 1");
}

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

// Separable blur over an interleaved buffer with `ch` channels, edge replication.
void blur_planes(const float* src, float* dst, int h, int w, int ch, const std::vector<float>& kernel) {
    int r = static_cast<int>(kernel.size()) / 2;
    std::vector<float> tmp(static_cast<size_t>(h) * w * ch);
    // horizontal
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int j = -r; j <= r; ++j) {
                    int xs = clampi(x + j, 0, w - 1);
                    acc += kernel[j + r] * src[(static_cast<size_t>(y) * w + xs) * ch + c];
                }
                tmp[(static_cast<size_t>(y) * w + x) * ch + c] = static_cast<float>(acc);
            }
        }
    }
    // vertical
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                double acc = 0.0;
                for (int j = -r; j <= r; ++j) {
                    int ys = clampi(y + j, 0, h - 1);
                    acc += kernel[j + r] * tmp[(static_cast<size_t>(ys) * w + x) * ch + c];
                }
                dst[(static_cast<size_t>(y) * w + x) * ch + c] = static_cast<float>(acc);
            }
        }
    }
}

} // namespace

BinaryMask erode(const BinaryMask& mask, int k) {
    check_kernel(k);
    if (k == 1) return mask;
    int r = k / 2;
    int h = mask.height(), w = mask.width();
    BinaryMask out(h, w);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.at(y, x)) continue;
            bool keep = (y >= r && y + r < h && x >= r && x + r < w);
            for (int dy = -r; keep && dy <= r; ++dy)
                for (int dx = -r; dx <= r; ++dx)
                    if (!mask.at(y + dy, x + dx)) { keep = false; break; }
            out.at(y, x) = keep ? 1 : 0;
        }
    }
    return out;
}

BinaryMask dilate(const BinaryMask& mask, int k) {
    check_kernel(k);
    if (k == 1) return mask;
    int r = k / 2;
    int h = mask.height(), w = mask.width();
    BinaryMask out(h, w);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            bool hit = false;
            for (int dy = -r; !hit && dy <= r; ++dy) {
                int ys = y + dy;
                if (ys < 0 || ys >= h) continue;
                for (int dx = -r; dx <= r; ++dx) {
                    int xs = x + dx;
                    if (xs < 0 || xs >= w) continue;
                    if (mask.at(ys, xs)) { hit = true; break; }
                }
            }
            out.at(y, x) = hit ? 1 : 0;
        }
    }
    return out;
}

double gaussian_sigma_for_kernel(int k) {
    return 0.3 * ((k - 1) / 2.0 - 1.0) + 0.8;
}

std::vector<float> gaussian_kernel(int k, double sigma) {
    check_kernel(k);
    if (sigma <= 0.0) sigma = gaussian_sigma_for_kernel(k);
    int r = k / 2;
    std::vector<float> kern(k);
    double sum = 0.0;
    for (int i = -r; i <= r; ++i) {
        double v = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
        kern[i + r] = static_cast<float>(v);
        sum += v;
    }
    for (float& v : kern) v = static_cast<float>(v / sum);
    return kern;
}

SoftMask gaussian_blur(const SoftMask& mask, int k, double sigma) {
    auto kern = gaussian_kernel(k, sigma);
    if (k == 1) return mask;
    SoftMask out(mask.height(), mask.width());
    blur_planes(mask.data().data(), out.data().data(), mask.height(), mask.width(), 1, kern);
    return out;
}

ImageF gaussian_blur(const ImageF& img, int k, double sigma) {
    auto kern = gaussian_kernel(k, sigma);
    if (k == 1) return img;
    ImageF out(img.height(), img.width());
    blur_planes(img.data().data(), out.data().data(), img.height(), img.width(), 3, kern);
    return out;
}

ImageF median_blur(const ImageF& img, int k) {
    check_kernel(k);
    if (k == 1) return img;
    int r = k / 2;
    int h = img.height(), w = img.width();
    ImageF out(h, w);
    std::vector<float> window;
    window.reserve(static_cast<size_t>(k) * k);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < 3; ++c) {
                window.clear();
                for (int dy = -r; dy <= r; ++dy)
                    for (int dx = -r; dx <= r; ++dx)
                        window.push_back(img.at(clampi(y + dy, 0, h - 1), clampi(x + dx, 0, w - 1), c));
                auto mid = window.begin() + window.size() / 2;
                std::nth_element(window.begin(), mid, window.end());
                out.at(y, x, c) = *mid;
            }
        }
    }
    return out;
}

ImageF motion_blur(const ImageF& img, int k, double angle_deg) {
    check_kernel(k);
    if (k == 1) return img;
    int r = k / 2;
    int h = img.height(), w = img.width();
    double a = angle_deg * M_PI / 180.0;
    double cx = std::cos(a), cy = std::sin(a);
    ImageF out(h, w);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc[3] = {0, 0, 0};
            for (int t = -r; t <= r; ++t) {
                int ys = clampi(y + static_cast<int>(std::lround(t * cy)), 0, h - 1);
                int xs = clampi(x + static_cast<int>(std::lround(t * cx)), 0, w - 1);
                const float* p = img.pixel(ys, xs);
                acc[0] += p[0];
                acc[1] += p[1];
                acc[2] += p[2];
            }
            float* q = out.pixel(y, x);
            q[0] = static_cast<float>(acc[0] / k);
            q[1] = static_cast<float>(acc[1] / k);
            q[2] = static_cast<float>(acc[2] / k);
        }
    }
    return out;
}

} // namespace synthseg
