#include "synthseg/io.hpp"

#include <png.h>

#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>

#include <jpeglib.h>

namespace synthseg {

namespace {

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    return std::vector<uint8_t>(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool is_png(const std::vector<uint8_t>& buf) {
    static const uint8_t sig[4] = {0x89, 'P', 'N', 'G'};
    return buf.size() >= 4 && std::memcmp(buf.data(), sig, 4) == 0;
}

bool is_jpeg(const std::vector<uint8_t>& buf) {
    return buf.size() >= 2 && buf[0] == 0xFF && buf[1] == 0xD8;
}

std::vector<uint8_t> png_read(const std::vector<uint8_t>& buf, const std::string& path,
                              bool gray, unsigned& w, unsigned& h) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_memory(&image, buf.data(), buf.size()))
        throw IoError("png read failed: " + path + ": " + image.message);
    image.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
    std::vector<uint8_t> pixels(PNG_IMAGE_SIZE(image));
    if (!png_image_finish_read(&image, nullptr, pixels.data(), 0, nullptr)) {
        png_image_free(&image);
        throw IoError("png decode failed: " + path + ": " + image.message);
    }
    w = image.width;
    h = image.height;
    return pixels;
}

void png_write(const std::string& path, const uint8_t* pixels, unsigned h, unsigned w, bool gray) {
    png_image image;
    std::memset(&image, 0, sizeof(image));
    image.version = PNG_IMAGE_VERSION;
    image.width = w;
    image.height = h;
    image.format = gray ? PNG_FORMAT_GRAY : PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&image, path.c_str(), 0, pixels, 0, nullptr))
        throw IoError("png write failed: " + path + ": " + image.message);
}

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    std::longjmp(mgr->jump, 1);
}

std::vector<uint8_t> jpeg_decode(const uint8_t* data, size_t size, unsigned& w, unsigned& h) {
    jpeg_decompress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;
    std::vector<uint8_t> pixels;
    if (setjmp(err.jump)) {
        jpeg_destroy_decompress(&cinfo);
        throw IoError("jpeg decode failed");
    }
    jpeg_create_decompress(&cinfo);
    jpeg_mem_src(&cinfo, const_cast<uint8_t*>(data), static_cast<unsigned long>(size));
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);
    w = cinfo.output_width;
    h = cinfo.output_height;
    pixels.resize(static_cast<size_t>(w) * h * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        uint8_t* row = pixels.data() + static_cast<size_t>(cinfo.output_scanline) * w * 3;
        jpeg_read_scanlines(&cinfo, &row, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return pixels;
}

std::vector<uint8_t> jpeg_encode(const uint8_t* pixels, unsigned h, unsigned w, int quality) {
    jpeg_compress_struct cinfo;
    JpegErrorMgr err;
    cinfo.err = jpeg_std_error(&err.pub);
    err.pub.error_exit = jpeg_error_exit;
    uint8_t* out_buf = nullptr;
    unsigned long out_size = 0;
    if (setjmp(err.jump)) {
        jpeg_destroy_compress(&cinfo);
        if (out_buf) free(out_buf);
        throw IoError("jpeg encode failed");
    }
    jpeg_create_compress(&cinfo);
    jpeg_mem_dest(&cinfo, &out_buf, &out_size);
    cinfo.image_width = w;
    cinfo.image_height = h;
    cinfo.input_components = 3;
    cinfo.in_color_space = JCS_RGB;
    jpeg_set_defaults(&cinfo);
    jpeg_set_quality(&cinfo, quality, TRUE);
    jpeg_start_compress(&cinfo, TRUE);
    while (cinfo.next_scanline < cinfo.image_height) {
        const uint8_t* row = pixels + static_cast<size_t>(cinfo.next_scanline) * w * 3;
        JSAMPROW rows[1] = {const_cast<uint8_t*>(row)};
        jpeg_write_scanlines(&cinfo, rows, 1);
    }
    jpeg_finish_compress(&cinfo);
    jpeg_destroy_compress(&cinfo);
    std::vector<uint8_t> out(out_buf, out_buf + out_size);
    free(out_buf);
    return out;
}

inline float to_unit(uint8_t v) { return v / 255.0f; }

inline uint8_t to_byte(float v) {
    float s = std::clamp(v, 0.0f, 1.0f) * 255.0f;
    return static_cast<uint8_t>(s + 0.5f);
}

} // namespace

ImageF load_image(const std::string& path) {
    auto buf = read_file(path);
    unsigned w = 0, h = 0;
    std::vector<uint8_t> pixels;
    if (is_png(buf)) {
        pixels = png_read(buf, path, false, w, h);
    } else if (is_jpeg(buf)) {
        pixels = jpeg_decode(buf.data(), buf.size(), w, h);
    } else {
        throw IoError("unsupported image format: " + path);
    }
    ImageF img(static_cast<int>(h), static_cast<int>(w));
    for (size_t i = 0; i < img.data().size(); ++i) img.data()[i] = to_unit(pixels[i]);
    return img;
}

void save_image(const std::string& path, const ImageF& img) {
    std::vector<uint8_t> pixels(img.data().size());
    for (size_t i = 0; i < pixels.size(); ++i) pixels[i] = to_byte(img.data()[i]);
    png_write(path, pixels.data(), img.height(), img.width(), false);
}

BinaryMask load_mask(const std::string& path) {
    auto buf = read_file(path);
    if (!is_png(buf)) throw IoError("mask must be a PNG: " + path);
    unsigned w = 0, h = 0;
    auto pixels = png_read(buf, path, true, w, h);
    BinaryMask mask(static_cast<int>(h), static_cast<int>(w));
    for (size_t i = 0; i < pixels.size(); ++i) mask.data()[i] = pixels[i] >= 128 ? 1 : 0;
    return mask;
}

void save_mask(const std::string& path, const BinaryMask& mask) {
    std::vector<uint8_t> pixels(mask.data().size());
    for (size_t i = 0; i < pixels.size(); ++i) pixels[i] = mask.data()[i] ? 255 : 0;
    png_write(path, pixels.data(), mask.height(), mask.width(), true);
}

SoftMask load_soft_mask(const std::string& path) {
    auto buf = read_file(path);
    if (!is_png(buf)) throw IoError("probability map must be a PNG: " + path);
    unsigned w = 0, h = 0;
    auto pixels = png_read(buf, path, true, w, h);
    SoftMask mask(static_cast<int>(h), static_cast<int>(w));
    for (size_t i = 0; i < pixels.size(); ++i) mask.data()[i] = to_unit(pixels[i]);
    return mask;
}

void save_soft_mask(const std::string& path, const SoftMask& mask) {
    std::vector<uint8_t> pixels(mask.data().size());
    for (size_t i = 0; i < pixels.size(); ++i) pixels[i] = to_byte(mask.data()[i]);
    png_write(path, pixels.data(), mask.height(), mask.width(), true);
}

ImageF jpeg_roundtrip(const ImageF& img, int quality) {
    if (quality < 1 || quality > 100) throw std::invalid_argument("jpeg quality must be in [1,100]");
    std::vector<uint8_t> pixels(img.data().size());
    for (size_t i = 0; i < pixels.size(); ++i) pixels[i] = to_byte(img.data()[i]);
    auto encoded = jpeg_encode(pixels.data(), img.height(), img.width(), quality);
    unsigned w = 0, h = 0;
    auto decoded = jpeg_decode(encoded.data(), encoded.size(), w, h);
    ImageF out(static_cast<int>(h), static_cast<int>(w));
    for (size_t i = 0; i < out.data().size(); ++i) out.data()[i] = to_unit(decoded[i]);
    return out;
}

} // namespace synthseg
