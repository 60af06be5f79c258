#include "boneage/core/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>

namespace boneage::core {

namespace {

struct MemReader {
  const uint8_t* bytes;
  size_t len;
  size_t pos;
};

void mem_read_fn(png_structp png, png_bytep out, png_size_t n) {
  auto* r = static_cast<MemReader*>(png_get_io_ptr(png));
  if (r->pos + n > r->len) {
    png_error(png, "truncated png stream");
  }
  std::memcpy(out, r->bytes + r->pos, n);
  r->pos += n;
}

void mem_write_fn(png_structp png, png_bytep data, png_size_t n) {
  auto* v = static_cast<std::vector<uint8_t>*>(png_get_io_ptr(png));
  v->insert(v->end(), data, data + n);
}

void mem_flush_fn(png_structp) {}

Image decode_common(png_structp png, png_infop info) {
  png_read_info(png, info);
  png_uint_32 w = png_get_image_width(png, info);
  png_uint_32 h = png_get_image_height(png, info);
  int bit_depth = png_get_bit_depth(png, info);
  int color_type = png_get_color_type(png, info);

  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type & PNG_COLOR_MASK_COLOR) png_set_rgb_to_gray(png, 1, -1, -1);
  if (color_type & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  if (bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
  if (bit_depth == 16) png_set_swap(png);  // little-endian reads below
  png_read_update_info(png, info);
  bit_depth = png_get_bit_depth(png, info);

  Image img(static_cast<int>(h), static_cast<int>(w));
  const size_t rowbytes = png_get_rowbytes(png, info);
  std::vector<uint8_t> row(rowbytes);
  const float denom = bit_depth == 16 ? 65535.0f : 255.0f;
  for (png_uint_32 y = 0; y < h; ++y) {
    png_read_row(png, row.data(), nullptr);
    for (png_uint_32 x = 0; x < w; ++x) {
      uint32_t v = bit_depth == 16
                       ? (static_cast<uint32_t>(row[2 * x]) | (static_cast<uint32_t>(row[2 * x + 1]) << 8))
                       : row[x];
      img.at(static_cast<int>(y), static_cast<int>(x)) = static_cast<float>(v) / denom;
    }
  }
  png_read_end(png, nullptr);
  return img;
}

}  // namespace

Image read_png_gray(const std::string& path) {
  FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw Error(Err::kIoError, "cannot open '" + path + "'");
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw Error(Err::kIoError, "failed to decode png '" + path + "'");
  }
  png_init_io(png, fp);
  Image img = decode_common(png, info);
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);
  return img;
}

Image decode_png_gray(const uint8_t* bytes, size_t len) {
  if (len < 8 || png_sig_cmp(bytes, 0, 8) != 0) {
    throw Error(Err::kIoError, "buffer is not a png stream");
  }
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  MemReader reader{bytes, len, 0};
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error(Err::kIoError, "failed to decode png buffer");
  }
  png_set_read_fn(png, &reader, mem_read_fn);
  Image img = decode_common(png, info);
  png_destroy_read_struct(&png, &info, nullptr);
  return img;
}

namespace {

void encode_common(png_structp png, png_infop info, const Image& img) {
  png_set_IHDR(png, info, img.width, img.height, 8, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  std::vector<uint8_t> row(static_cast<size_t>(img.width));
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const float v = std::clamp(img.at(y, x), 0.0f, 1.0f);
      row[static_cast<size_t>(x)] = static_cast<uint8_t>(std::lround(v * 255.0));
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
}

}  // namespace

void write_png_gray(const std::string& path, const Image& img) {
  FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw Error(Err::kIoError, "cannot write '" + path + "'");
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw Error(Err::kIoError, "failed to encode png '" + path + "'");
  }
  png_init_io(png, fp);
  encode_common(png, info, img);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

std::vector<uint8_t> encode_png_gray(const Image& img) {
  std::vector<uint8_t> out;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png_create_info_struct(png);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(Err::kIoError, "failed to encode png buffer");
  }
  png_set_write_fn(png, &out, mem_write_fn, mem_flush_fn);
  encode_common(png, info, img);
  png_destroy_write_struct(&png, &info);
  return out;
}

}  // namespace boneage::core
