// Copyright 2026 The quip developers
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

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace quip {

/// Raw pixel grid: row-major, channel-interleaved integer samples.
/// Every sample lies in [0, 2^bit_depth - 1].
struct ImageBuffer {
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned channels = 1;   // 1 = grayscale, 3 = RGB, 4 = RGBA
  unsigned bit_depth = 8;  // bits per channel sample
  std::vector<std::uint32_t> samples;

  std::size_t pixel_count() const { return width * height; }
  std::uint32_t max_intensity() const { return (1u << bit_depth) - 1u; }

  std::uint32_t sample(std::size_t row, std::size_t col, unsigned channel = 0) const {
    return samples[(row * width + col) * channels + channel];
  }
};

/// Raised on malformed netpbm input; carries the offending byte offset.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " at byte " + std::to_string(byte_offset)),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

private:
  std::size_t byte_offset_;
};

namespace detail {

// Header tokenizer over the raw file bytes. '#' starts a comment that runs
// to end of line; comments are only legal in the header section.
struct PnmCursor {
  const std::string& data;
  std::size_t pos = 0;

  void skip_space_and_comments() {
    while (pos < data.size()) {
      const unsigned char c = static_cast<unsigned char>(data[pos]);
      if (std::isspace(c)) {
        ++pos;
      } else if (c == '#') {
        while (pos < data.size() && data[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  std::uint64_t read_uint(const char* what) {
    skip_space_and_comments();
    const std::size_t start = pos;
    if (pos >= data.size() || !std::isdigit(static_cast<unsigned char>(data[pos]))) {
      throw parse_error(std::string("malformed header: expected ") + what, pos);
    }
    std::uint64_t value = 0;
    while (pos < data.size() && std::isdigit(static_cast<unsigned char>(data[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(data[pos] - '0');
      if (value > 0xFFFFFFFFull) throw parse_error(std::string(what) + " out of range", start);
      ++pos;
    }
    return value;
  }
};

inline unsigned bit_depth_from_maxval(std::uint64_t maxval, std::size_t offset) {
  for (unsigned depth = 1; depth <= 16; ++depth) {
    if (maxval == (1ull << depth) - 1) return depth;
  }
  throw parse_error("malformed header: maxval must be 2^depth - 1", offset);
}

}  // namespace detail

/// Parses PGM (P2/P5) and PPM (P3/P6) data. The bit depth is inferred from
/// the maxval field; maxval must equal 2^depth - 1 for some depth <= 16.
inline ImageBuffer parse_pnm(const std::string& data) {
  detail::PnmCursor cur{data};
  if (data.size() < 2 || data[0] != 'P') {
    throw parse_error("malformed header: missing PNM magic", 0);
  }
  const char kind = data[1];
  if (kind != '2' && kind != '3' && kind != '5' && kind != '6') {
    throw parse_error("malformed header: unsupported PNM magic", 1);
  }
  cur.pos = 2;

  ImageBuffer img;
  img.channels = (kind == '3' || kind == '6') ? 3u : 1u;
  img.width = static_cast<std::size_t>(cur.read_uint("width"));
  img.height = static_cast<std::size_t>(cur.read_uint("height"));
  if (img.width == 0 || img.height == 0) {
    throw parse_error("malformed header: zero image dimension", cur.pos);
  }
  const std::size_t maxval_offset = cur.pos;
  const std::uint64_t maxval = cur.read_uint("maxval");
  img.bit_depth = detail::bit_depth_from_maxval(maxval, maxval_offset);

  const std::size_t count = img.width * img.height * img.channels;
  // every sample needs at least one input byte, so this caps hostile headers
  img.samples.reserve(std::min(count, data.size()));

  const bool binary = (kind == '5' || kind == '6');
  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (cur.pos >= data.size() || !std::isspace(static_cast<unsigned char>(data[cur.pos]))) {
      throw parse_error("malformed header: expected whitespace before raster", cur.pos);
    }
    ++cur.pos;
    const unsigned bytes_per_sample = maxval > 255 ? 2u : 1u;
    for (std::size_t i = 0; i < count; ++i) {
      if (cur.pos + bytes_per_sample > data.size()) {
        throw parse_error("truncated payload", cur.pos);
      }
      std::uint32_t value = static_cast<unsigned char>(data[cur.pos]);
      if (bytes_per_sample == 2) {
        value = (value << 8) | static_cast<unsigned char>(data[cur.pos + 1]);
      }
      if (value > maxval) throw parse_error("sample out of range", cur.pos);
      cur.pos += bytes_per_sample;
      img.samples.push_back(value);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      cur.skip_space_and_comments();
      const std::size_t offset = cur.pos;
      if (cur.pos >= data.size()) throw parse_error("truncated payload", offset);
      const std::uint64_t value = cur.read_uint("sample");
      if (value > maxval) throw parse_error("sample out of range", offset);
      img.samples.push_back(static_cast<std::uint32_t>(value));
    }
  }
  return img;
}

inline ImageBuffer load_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pnm(buffer.str());
}

/// Serializes as binary PGM (1 channel) or PPM (3 channels); samples wider
/// than 8 bits are written as big-endian 16-bit pairs per netpbm convention.
inline std::string pnm_string(const ImageBuffer& img) {
  if (img.channels != 1 && img.channels != 3) {
    throw std::invalid_argument("pnm output supports 1 or 3 channels");
  }
  const std::uint32_t maxval = img.max_intensity();
  std::string out;
  out += img.channels == 1 ? "P5\n" : "P6\n";
  out += std::to_string(img.width) + " " + std::to_string(img.height) + "\n";
  out += std::to_string(maxval) + "\n";
  for (const std::uint32_t s : img.samples) {
    if (maxval > 255) out += static_cast<char>((s >> 8) & 0xFF);
    out += static_cast<char>(s & 0xFF);
  }
  return out;
}

inline void store_pnm(const ImageBuffer& img, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open " + path.string());
  const std::string data = pnm_string(img);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

/// Interleaves an RGB image with a same-dimension grayscale alpha mask.
inline ImageBuffer with_alpha(const ImageBuffer& rgb, const ImageBuffer& alpha) {
  if (rgb.channels != 3 || alpha.channels != 1) {
    throw std::invalid_argument("alpha merge expects an RGB image and a grayscale mask");
  }
  if (rgb.width != alpha.width || rgb.height != alpha.height ||
      rgb.bit_depth != alpha.bit_depth) {
    throw std::invalid_argument("alpha mask must match image dimensions and bit depth");
  }
  ImageBuffer out;
  out.width = rgb.width;
  out.height = rgb.height;
  out.channels = 4;
  out.bit_depth = rgb.bit_depth;
  out.samples.reserve(rgb.pixel_count() * 4);
  for (std::size_t k = 0; k < rgb.pixel_count(); ++k) {
    out.samples.push_back(rgb.samples[3 * k]);
    out.samples.push_back(rgb.samples[3 * k + 1]);
    out.samples.push_back(rgb.samples[3 * k + 2]);
    out.samples.push_back(alpha.samples[k]);
  }
  return out;
}

/// Splits an RGBA image into its RGB part and the alpha plane.
inline std::pair<ImageBuffer, ImageBuffer> split_alpha(const ImageBuffer& rgba) {
  if (rgba.channels != 4) throw std::invalid_argument("split_alpha expects 4 channels");
  ImageBuffer rgb{rgba.width, rgba.height, 3, rgba.bit_depth, {}};
  ImageBuffer alpha{rgba.width, rgba.height, 1, rgba.bit_depth, {}};
  rgb.samples.reserve(rgba.pixel_count() * 3);
  alpha.samples.reserve(rgba.pixel_count());
  for (std::size_t k = 0; k < rgba.pixel_count(); ++k) {
    rgb.samples.push_back(rgba.samples[4 * k]);
    rgb.samples.push_back(rgba.samples[4 * k + 1]);
    rgb.samples.push_back(rgba.samples[4 * k + 2]);
    alpha.samples.push_back(rgba.samples[4 * k + 3]);
  }
  return {std::move(rgb), std::move(alpha)};
}

}  // namespace quip
