#include "synthseg/color.hpp"

#include <cmath>

namespace synthseg {

void rgb_to_hsv_pixel(float r, float g, float b, float& h, float& s, float& v) {
    double rd = r, gd = g, bd = b;
    double maxc = std::max(rd, std::max(gd, bd));
    double minc = std::min(rd, std::min(gd, bd));
    double delta = maxc - minc;

    v = static_cast<float>(maxc);
    s = maxc > 0.0 ? static_cast<float>(delta / maxc) : 0.0f;

    if (delta <= 0.0) {
        h = 0.0f;
        return;
    }
    double hue;
    if (maxc == rd)
        hue = (gd - bd) / delta;
    else if (maxc == gd)
        hue = 2.0 + (bd - rd) / delta;
    else
        hue = 4.0 + (rd - gd) / delta;
    hue /= 6.0;
    if (hue < 0.0) hue += 1.0;
    if (hue >= 1.0) hue -= 1.0;
    h = static_cast<float>(hue);
}

void hsv_to_rgb_pixel(float h, float s, float v, float& r, float& g, float& b) {
    if (s <= 0.0f) {
        r = g = b = v;
        return;
    }
    double hue = h * 6.0;
    if (hue >= 6.0) hue -= 6.0;
    int sector = static_cast<int>(hue);
    double f = hue - sector;
    double p = v * (1.0 - s);
    double q = v * (1.0 - s * f);
    double t = v * (1.0 - s * (1.0 - f));
    double rd, gd, bd;
    switch (sector) {
        case 0: rd = v; gd = t; bd = p; break;
        case 1: rd = q; gd = v; bd = p; break;
        case 2: rd = p; gd = v; bd = t; break;
        case 3: rd = p; gd = q; bd = v; break;
        case 4: rd = t; gd = p; bd = v; break;
        default: rd = v; gd = p; bd = q; break;
    }
    r = static_cast<float>(rd);
    g = static_cast<float>(gd);
    b = static_cast<float>(bd);
}

ImageF rgb_to_hsv(const ImageF& img) {
    ImageF out(img.height(), img.width());
    const float* src = img.data().data();
    float* dst = out.data().data();
    size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) {
        rgb_to_hsv_pixel(src[3 * i], src[3 * i + 1], src[3 * i + 2],
                         dst[3 * i], dst[3 * i + 1], dst[3 * i + 2]);
    }
    return out;
}

ImageF hsv_to_rgb(const ImageF& img) {
    ImageF out(img.height(), img.width());
    const float* src = img.data().data();
    float* dst = out.data().data();
    size_t n = img.pixel_count();
    for (size_t i = 0; i < n; ++i) {
        hsv_to_rgb_pixel(src[3 * i], src[3 * i + 1], src[3 * i + 2],
                         dst[3 * i], dst[3 * i + 1], dst[3 * i + 2]);
    }
    return out;
}

} // namespace synthseg
