#include "synthseg/resize.hpp"

#include <cmath>

namespace synthseg {

namespace {

// Maps output pixel centers onto input pixel centers.
inline void src_coord(int i, double scale, int src_size, int& i0, int& i1, double& frac) {
    double s = (i + 0.5) * scale - 0.5;
    if (s < 0.0) s = 0.0;
    double lim = src_size - 1;
    if (s > lim) s = lim;
    i0 = static_cast<int>(s);
    i1 = std::min(i0 + 1, src_size - 1);
    frac = s - i0;
}

void check_target(int th, int tw) {
    if (th < 1 || tw < 1) throw std::invalid_argument("resize: target dimensions must be >= 1");
}

} // namespace

ImageF resize_bilinear(const ImageF& img, int th, int tw) {
    check_target(th, tw);
    if (th == img.height() && tw == img.width()) return img;
    ImageF out(th, tw);
    double sy = static_cast<double>(img.height()) / th;
    double sx = static_cast<double>(img.width()) / tw;
    for (int y = 0; y < th; ++y) {
        int y0, y1;
        double fy;
        src_coord(y, sy, img.height(), y0, y1, fy);
        for (int x = 0; x < tw; ++x) {
            int x0, x1;
            double fx;
            src_coord(x, sx, img.width(), x0, x1, fx);
            for (int c = 0; c < 3; ++c) {
                double top = img.at(y0, x0, c) * (1.0 - fx) + img.at(y0, x1, c) * fx;
                double bot = img.at(y1, x0, c) * (1.0 - fx) + img.at(y1, x1, c) * fx;
                out.at(y, x, c) = static_cast<float>(top * (1.0 - fy) + bot * fy);
            }
        }
    }
    return out;
}

SoftMask resize_bilinear(const SoftMask& mask, int th, int tw) {
    check_target(th, tw);
    if (th == mask.height() && tw == mask.width()) return mask;
    SoftMask out(th, tw);
    double sy = static_cast<double>(mask.height()) / th;
    double sx = static_cast<double>(mask.width()) / tw;
    for (int y = 0; y < th; ++y) {
        int y0, y1;
        double fy;
        src_coord(y, sy, mask.height(), y0, y1, fy);
        for (int x = 0; x < tw; ++x) {
            int x0, x1;
            double fx;
            src_coord(x, sx, mask.width(), x0, x1, fx);
            double top = mask.at(y0, x0) * (1.0 - fx) + mask.at(y0, x1) * fx;
            double bot = mask.at(y1, x0) * (1.0 - fx) + mask.at(y1, x1) * fx;
            out.at(y, x) = static_cast<float>(top * (1.0 - fy) + bot * fy);
        }
    }
    return out;
}

BinaryMask resize_nearest(const BinaryMask& mask, int th, int tw) {
    check_target(th, tw);
    if (th == mask.height() && tw == mask.width()) return mask;
    BinaryMask out(th, tw);
    double sy = static_cast<double>(mask.height()) / th;
    double sx = static_cast<double>(mask.width()) / tw;
    for (int y = 0; y < th; ++y) {
        int ys = std::min(static_cast<int>((y + 0.5) * sy), mask.height() - 1);
        for (int x = 0; x < tw; ++x) {
            int xs = std::min(static_cast<int>((x + 0.5) * sx), mask.width() - 1);
            out.at(y, x) = mask.at(ys, xs);
        }
    }
    return out;
}

int aspect_height(int height, int width, int target_width) {
    if (target_width < 1) throw std::invalid_argument("resize: target width must be >= 1");
    long h = std::lround(static_cast<double>(target_width) * height / width);
    return static_cast<int>(std::max(1L, h));
}

ImageF resize_keep_aspect(const ImageF& img, int target_width) {
    return resize_bilinear(img, aspect_height(img.height(), img.width(), target_width), target_width);
}

BinaryMask resize_keep_aspect(const BinaryMask& mask, int target_width) {
    return resize_nearest(mask, aspect_height(mask.height(), mask.width(), target_width), target_width);
}

} // namespace synthseg
