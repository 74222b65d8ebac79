// Copyright 2026 The lesionsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lesionsym/mask_io.hpp"

#include <png.h>

#include <cctype>
#include <csetjmp>
#include <cstring>

#include "lesionsym/error.hpp"
#include "lesionsym/fsio.hpp"

namespace lesionsym {

namespace {

// ---------------------------------------------------------------------------
// PNM (P2/P4/P5) tokenizer. Whitespace-separated header tokens, '#' comments.
// ---------------------------------------------------------------------------

struct PnmCursor {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;

  bool eof() const { return pos >= data.size(); }
  std::uint8_t peek() const { return data[pos]; }

  void skip_space_and_comments() {
    while (!eof()) {
      std::uint8_t c = data[pos];
      if (c == '#') {
        while (!eof() && data[pos] != '\n') ++pos;
      } else if (std::isspace(c)) {
        ++pos;
      } else {
        break;
      }
    }
  }

  // Nonnegative decimal header token.
  std::uint64_t next_int() {
    skip_space_and_comments();
    if (eof() || !std::isdigit(peek())) fail(Errc::MalformedImage, "expected integer in PNM header");
    std::uint64_t v = 0;
    while (!eof() && std::isdigit(peek())) {
      v = v * 10 + (data[pos] - '0');
      if (v > 0xFFFFFFFFull) fail(Errc::MalformedImage, "PNM header value out of range");
      ++pos;
    }
    return v;
  }

  // The header is terminated by exactly one whitespace byte before raster data.
  void expect_single_space() {
    if (eof() || !std::isspace(peek())) fail(Errc::MalformedImage, "missing separator before PNM raster");
    ++pos;
  }
};

std::pair<int, int> read_pnm_dims(PnmCursor& cur) {
  std::uint64_t w = cur.next_int();
  std::uint64_t h = cur.next_int();
  if (w == 0 || h == 0) fail(Errc::MalformedImage, "PNM dimensions must be positive");
  if (w > (1u << 20) || h > (1u << 20)) fail(Errc::MalformedImage, "PNM dimensions exceed supported size");
  return {static_cast<int>(w), static_cast<int>(h)};
}

LoadResult load_pbm(std::span<const std::uint8_t> bytes) {
  PnmCursor cur{bytes, 2};
  auto [w, h] = read_pnm_dims(cur);
  cur.expect_single_space();
  const std::size_t row_bytes = (static_cast<std::size_t>(w) + 7) / 8;
  if (bytes.size() - cur.pos < row_bytes * h) fail(Errc::MalformedImage, "truncated PBM raster");
  BinaryMask mask(w, h);
  for (int r = 0; r < h; ++r) {
    const std::uint8_t* row = bytes.data() + cur.pos + static_cast<std::size_t>(r) * row_bytes;
    for (int c = 0; c < w; ++c) {
      // PBM stores 1 = black; the lesion is white.
      bool black = (row[c / 8] >> (7 - (c % 8))) & 1;
      mask.set(r, c, !black);
    }
  }
  return {std::move(mask), false};
}

LoadResult load_pgm(std::span<const std::uint8_t> bytes, bool ascii) {
  PnmCursor cur{bytes, 2};
  auto [w, h] = read_pnm_dims(cur);
  std::uint64_t maxval = cur.next_int();
  if (maxval == 0 || maxval > 65535) fail(Errc::MalformedImage, "PGM maxval out of range");
  BinaryMask mask(w, h);
  bool non_binary = false;
  if (ascii) {
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        std::uint64_t v = cur.next_int();
        if (v > maxval) fail(Errc::MalformedImage, "PGM sample exceeds maxval");
        if (v != 0 && v != maxval) non_binary = true;
        mask.set(r, c, v != 0);
      }
    }
  } else {
    cur.expect_single_space();
    const int bytes_per = maxval > 255 ? 2 : 1;
    const std::size_t need = static_cast<std::size_t>(w) * h * bytes_per;
    if (bytes.size() - cur.pos < need) fail(Errc::MalformedImage, "truncated PGM raster");
    const std::uint8_t* p = bytes.data() + cur.pos;
    for (int r = 0; r < h; ++r) {
      for (int c = 0; c < w; ++c) {
        std::uint64_t v = (bytes_per == 2) ? (static_cast<std::uint64_t>(p[0]) << 8 | p[1]) : *p;
        p += bytes_per;
        if (v > maxval) fail(Errc::MalformedImage, "PGM sample exceeds maxval");
        if (v != 0 && v != maxval) non_binary = true;
        mask.set(r, c, v != 0);
      }
    }
  }
  return {std::move(mask), non_binary};
}

// ---------------------------------------------------------------------------
// PNG via libpng. libpng reports errors through longjmp, so all decode state
// lives in heap-backed structures owned by a cleanup guard.
// ---------------------------------------------------------------------------

struct PngReadGuard {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngReadGuard() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
  }
};

struct PngReadState {
  std::span<const std::uint8_t> data;
  std::size_t pos = 0;
};

void png_read_from_span(png_structp png, png_bytep out, png_size_t count) {
  auto* st = static_cast<PngReadState*>(png_get_io_ptr(png));
  if (st->pos + count > st->data.size()) {
    png_error(png, "unexpected end of PNG stream");
    return;
  }
  std::memcpy(out, st->data.data() + st->pos, count);
  st->pos += count;
}

void png_silent_warning(png_structp, png_const_charp) {}

LoadResult load_png(std::span<const std::uint8_t> bytes) {
  PngReadGuard guard;
  guard.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, png_silent_warning);
  if (!guard.png) fail(Errc::MalformedImage, "libpng init failed");
  guard.info = png_create_info_struct(guard.png);
  if (!guard.info) fail(Errc::MalformedImage, "libpng init failed");

  PngReadState state{bytes, 0};
  auto rows = std::make_unique<std::vector<std::vector<std::uint8_t>>>();
  int width = 0, height = 0, channels = 0;

  if (setjmp(png_jmpbuf(guard.png))) fail(Errc::MalformedImage, "undecodable PNG");

  png_set_read_fn(guard.png, &state, png_read_from_span);
  png_read_info(guard.png, guard.info);

  png_uint_32 w = png_get_image_width(guard.png, guard.info);
  png_uint_32 h = png_get_image_height(guard.png, guard.info);
  if (w == 0 || h == 0 || w > (1u << 20) || h > (1u << 20)) fail(Errc::MalformedImage, "PNG dimensions out of range");

  // Normalize everything to 8-bit gray or RGB samples.
  png_byte color = png_get_color_type(guard.png, guard.info);
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(guard.png);
  if (color == PNG_COLOR_TYPE_GRAY && png_get_bit_depth(guard.png, guard.info) < 8)
    png_set_expand_gray_1_2_4_to_8(guard.png);
  if (png_get_valid(guard.png, guard.info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(guard.png);
  if (png_get_bit_depth(guard.png, guard.info) == 16) png_set_strip_16(guard.png);
  png_set_strip_alpha(guard.png);
  png_set_interlace_handling(guard.png);
  png_read_update_info(guard.png, guard.info);

  channels = png_get_channels(guard.png, guard.info);
  if (channels != 1 && channels != 3) fail(Errc::MalformedImage, "unexpected PNG channel layout");
  width = static_cast<int>(w);
  height = static_cast<int>(h);

  rows->assign(h, std::vector<std::uint8_t>(png_get_rowbytes(guard.png, guard.info)));
  std::vector<png_bytep> row_ptrs(h);
  for (png_uint_32 r = 0; r < h; ++r) row_ptrs[r] = (*rows)[r].data();
  png_read_image(guard.png, row_ptrs.data());
  png_read_end(guard.png, nullptr);

  BinaryMask mask(width, height);
  bool non_binary = false;
  for (int r = 0; r < height; ++r) {
    const std::uint8_t* p = (*rows)[r].data();
    for (int c = 0; c < width; ++c) {
      if (channels == 1) {
        std::uint8_t v = p[c];
        if (v != 0 && v != 255) non_binary = true;
        mask.set(r, c, v != 0);
      } else {
        std::uint8_t rr = p[3 * c], gg = p[3 * c + 1], bb = p[3 * c + 2];
        bool white = rr == 255 && gg == 255 && bb == 255;
        bool black = rr == 0 && gg == 0 && bb == 0;
        if (!white && !black) non_binary = true;
        // BT.601 integer luma; weights sum to 256.
        std::uint32_t luma = (77u * rr + 150u * gg + 29u * bb) >> 8;
        mask.set(r, c, luma != 0);
      }
    }
  }
  return {std::move(mask), non_binary};
}

struct PngWriteGuard {
  png_structp png = nullptr;
  png_infop info = nullptr;
  ~PngWriteGuard() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
  }
};

void png_write_to_vector(png_structp png, png_bytep data, png_size_t count) {
  auto* out = static_cast<std::vector<std::uint8_t>*>(png_get_io_ptr(png));
  out->insert(out->end(), data, data + count);
}

void png_flush_noop(png_structp) {}

std::vector<std::uint8_t> save_png(const BinaryMask& mask) {
  PngWriteGuard guard;
  guard.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, png_silent_warning);
  if (!guard.png) fail(Errc::EncodeFailure, "libpng init failed");
  guard.info = png_create_info_struct(guard.png);
  if (!guard.info) fail(Errc::EncodeFailure, "libpng init failed");

  std::vector<std::uint8_t> out;
  auto row = std::make_unique<std::vector<std::uint8_t>>(static_cast<std::size_t>(mask.width()));

  if (setjmp(png_jmpbuf(guard.png))) fail(Errc::EncodeFailure, "PNG encode failed");

  png_set_write_fn(guard.png, &out, png_write_to_vector, png_flush_noop);
  png_set_IHDR(guard.png, guard.info, static_cast<png_uint_32>(mask.width()),
               static_cast<png_uint_32>(mask.height()), 8, PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(guard.png, guard.info);
  for (int r = 0; r < mask.height(); ++r) {
    const std::uint8_t* src = mask.row(r);
    for (int c = 0; c < mask.width(); ++c) (*row)[c] = src[c] ? 255 : 0;
    png_write_row(guard.png, row->data());
  }
  png_write_end(guard.png, nullptr);
  return out;
}

std::vector<std::uint8_t> save_pbm(const BinaryMask& mask) {
  std::string header = "P4\n" + std::to_string(mask.width()) + " " + std::to_string(mask.height()) + "\n";
  const std::size_t row_bytes = (static_cast<std::size_t>(mask.width()) + 7) / 8;
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (int r = 0; r < mask.height(); ++r) {
    std::vector<std::uint8_t> row(row_bytes, 0);
    for (int c = 0; c < mask.width(); ++c) {
      if (!mask.at(r, c)) row[c / 8] |= static_cast<std::uint8_t>(1u << (7 - c % 8));  // 1 = black
    }
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

std::vector<std::uint8_t> save_pgm(const BinaryMask& mask) {
  std::string header = "P5\n" + std::to_string(mask.width()) + " " + std::to_string(mask.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  for (int r = 0; r < mask.height(); ++r) {
    const std::uint8_t* src = mask.row(r);
    for (int c = 0; c < mask.width(); ++c) out.push_back(src[c] ? 255 : 0);
  }
  return out;
}

std::optional<MaskFormat> sniff(std::span<const std::uint8_t> bytes, bool& ascii_pgm, std::string& detail) {
  static const std::uint8_t kPngMagic[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngMagic, 8) == 0) return MaskFormat::png;
  if (bytes.size() >= 2 && bytes[0] == 'P') {
    switch (bytes[1]) {
      case '4': return MaskFormat::pbm;
      case '2': ascii_pgm = true; return MaskFormat::pgm;
      case '5': ascii_pgm = false; return MaskFormat::pgm;
      case '1':
      case '3':
      case '6':
        detail = "netpbm variant P" + std::string(1, static_cast<char>(bytes[1])) + " is not supported";
        return std::nullopt;
      default: break;
    }
  }
  detail = "unrecognized image magic";
  return std::nullopt;
}

}  // namespace

std::optional<MaskFormat> format_from_extension(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  for (char& ch : ext) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (ext == ".png") return MaskFormat::png;
  if (ext == ".pbm") return MaskFormat::pbm;
  if (ext == ".pgm") return MaskFormat::pgm;
  return std::nullopt;
}

LoadResult load_mask(std::span<const std::uint8_t> bytes, std::optional<MaskFormat> expected) {
  bool ascii_pgm = false;
  std::string detail;
  auto format = sniff(bytes, ascii_pgm, detail);
  if (!format) fail(Errc::UnsupportedFormat, detail);
  if (expected && *expected != *format) fail(Errc::UnsupportedFormat, "file content does not match expected format");
  switch (*format) {
    case MaskFormat::png: return load_png(bytes);
    case MaskFormat::pbm: return load_pbm(bytes);
    case MaskFormat::pgm: return load_pgm(bytes, ascii_pgm);
  }
  fail(Errc::UnsupportedFormat, "unreachable");
}

std::vector<std::uint8_t> save_mask(const BinaryMask& mask, MaskFormat format) {
  switch (format) {
    case MaskFormat::png: return save_png(mask);
    case MaskFormat::pbm: return save_pbm(mask);
    case MaskFormat::pgm: return save_pgm(mask);
  }
  fail(Errc::EncodeFailure, "unreachable");
}

LoadResult load_mask_file(const std::filesystem::path& path) {
  auto bytes = read_file_bytes(path);
  LoadResult result = load_mask(bytes, format_from_extension(path));
  result.mask.set_source_id(path.stem().string());
  return result;
}

void save_mask_file(const std::filesystem::path& path, const BinaryMask& mask) {
  auto format = format_from_extension(path);
  if (!format) fail(Errc::UnsupportedFormat, "cannot infer mask format from " + path.string());
  auto bytes = save_mask(mask, *format);
  write_file_bytes(path, bytes.data(), bytes.size());
}

}  // namespace lesionsym
