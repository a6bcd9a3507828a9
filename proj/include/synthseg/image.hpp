#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace synthseg {

// RGB image with float channels. Public pipeline operations keep values in
// [0,1]; intermediates (Laplacian bands, unclamped sums) may leave that range
// until the owning operation clamps.
class ImageF {
public:
    ImageF() = default;

    ImageF(int height, int width)
        : height_(height), width_(width), data_(static_cast<size_t>(check_dims(height, width)) * 3, 0.0f) {}

    ImageF(int height, int width, float r, float g, float b)
        : ImageF(height, width) {
        for (size_t i = 0; i < data_.size(); i += 3) {
            data_[i] = r;
            data_[i + 1] = g;
            data_[i + 2] = b;
        }
    }

    int height() const { return height_; }
    int width() const { return width_; }
    bool empty() const { return data_.empty(); }
    size_t pixel_count() const { return static_cast<size_t>(height_) * width_; }

    float& at(int y, int x, int c) { return data_[(static_cast<size_t>(y) * width_ + x) * 3 + c]; }
    float at(int y, int x, int c) const { return data_[(static_cast<size_t>(y) * width_ + x) * 3 + c]; }

    float* pixel(int y, int x) { return data_.data() + (static_cast<size_t>(y) * width_ + x) * 3; }
    const float* pixel(int y, int x) const { return data_.data() + (static_cast<size_t>(y) * width_ + x) * 3; }

    std::vector<float>& data() { return data_; }
    const std::vector<float>& data() const { return data_; }

    bool same_size(const ImageF& o) const { return height_ == o.height_ && width_ == o.width_; }

    void clamp01() {
        for (float& v : data_) v = std::clamp(v, 0.0f, 1.0f);
    }

private:
    static long check_dims(int height, int width) {
        if (height < 1 || width < 1)
            throw std::invalid_argument("image dimensions must be >= 1");
        return static_cast<long>(height) * width;
    }

    int height_ = 0;
    int width_ = 0;
    std::vector<float> data_;
};

// Single-channel map with values in [0,1].
class SoftMask {
public:
    SoftMask() = default;

    SoftMask(int height, int width, float fill = 0.0f)
        : height_(height), width_(width), data_(check(height, width), fill) {}

    int height() const { return height_; }
    int width() const { return width_; }
    bool empty() const { return data_.empty(); }

    float& at(int y, int x) { return data_[static_cast<size_t>(y) * width_ + x]; }
    float at(int y, int x) const { return data_[static_cast<size_t>(y) * width_ + x]; }

    std::vector<float>& data() { return data_; }
    const std::vector<float>& data() const { return data_; }

    bool same_size(const SoftMask& o) const { return height_ == o.height_ && width_ == o.width_; }

    void clamp01() {
        for (float& v : data_) v = std::clamp(v, 0.0f, 1.0f);
    }

private:
    static size_t check(int height, int width) {
        if (height < 1 || width < 1)
            throw std::invalid_argument("mask dimensions must be >= 1");
        return static_cast<size_t>(height) * width;
    }

    int height_ = 0;
    int width_ = 0;
    std::vector<float> data_;
};

// Single-channel map restricted to {0,1}.
class BinaryMask {
public:
    BinaryMask() = default;

    BinaryMask(int height, int width, uint8_t fill = 0)
        : height_(height), width_(width), data_(check(height, width), fill ? 1 : 0) {}

    int height() const { return height_; }
    int width() const { return width_; }
    bool empty() const { return data_.empty(); }

    uint8_t& at(int y, int x) { return data_[static_cast<size_t>(y) * width_ + x]; }
    uint8_t at(int y, int x) const { return data_[static_cast<size_t>(y) * width_ + x]; }

    std::vector<uint8_t>& data() { return data_; }
    const std::vector<uint8_t>& data() const { return data_; }

    bool same_size(const BinaryMask& o) const { return height_ == o.height_ && width_ == o.width_; }
    bool same_size(const ImageF& o) const { return height_ == o.height() && width_ == o.width(); }

    size_t count() const {
        size_t n = 0;
        for (uint8_t v : data_) n += v;
        return n;
    }

    bool operator==(const BinaryMask& o) const {
        return height_ == o.height_ && width_ == o.width_ && data_ == o.data_;
    }

    SoftMask to_soft() const {
        SoftMask m(height_, width_);
        for (size_t i = 0; i < data_.size(); ++i) m.data()[i] = data_[i] ? 1.0f : 0.0f;
        return m;
    }

    bool touches_border() const {
        for (int x = 0; x < width_; ++x)
            if (at(0, x) || at(height_ - 1, x)) return true;
        for (int y = 0; y < height_; ++y)
            if (at(y, 0) || at(y, width_ - 1)) return true;
        return false;
    }

private:
    static size_t check(int height, int width) {
        if (height < 1 || width < 1)
            throw std::invalid_argument("mask dimensions must be >= 1");
        return static_cast<size_t>(height) * width;
    }

    int height_ = 0;
    int width_ = 0;
    std::vector<uint8_t> data_;
};

inline void require_same_size(const ImageF& a, const ImageF& b, const char* what) {
    if (!a.same_size(b)) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

inline void require_same_size(const BinaryMask& m, const ImageF& img, const char* what) {
    if (!m.same_size(img)) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

} // namespace synthseg
