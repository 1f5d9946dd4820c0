// Core bit store for the triplet grid index: per triplet (c1,c2,c3) an l-bit
// position vector and an l-bit mark vector, 2*k^3*l bits in total.  Positions
// are the paper-style 1-based offsets of a triplet's first character.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace trigrid {

// Raised when a key contains a character outside the configured alphabet.
class EncodingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a key length is outside the configured capacity.
class LengthError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Alphabet of k distinct characters mapped to codes 0..k-1, plus the maximum
// key length l the grid can address.
class IndexConfig {
 public:
  IndexConfig(std::string alphabet, std::uint32_t max_key_length);

  std::uint32_t k() const { return static_cast<std::uint32_t>(alphabet_.size()); }
  std::uint32_t l() const { return l_; }
  const std::string& alphabet() const { return alphabet_; }

  // Character to code; throws EncodingError for characters outside the alphabet.
  std::uint32_t code(char c) const;
  bool has_symbol(char c) const { return codes_[static_cast<unsigned char>(c)] >= 0; }
  char symbol(std::uint32_t code) const;

  bool operator==(const IndexConfig& other) const {
    return alphabet_ == other.alphabet_ && l_ == other.l_;
  }

 private:
  std::string alphabet_;
  std::uint32_t l_;
  std::array<std::int16_t, 256> codes_;
};

// Three consecutive symbol codes.
struct TripletId {
  std::uint32_t c1 = 0;
  std::uint32_t c2 = 0;
  std::uint32_t c3 = 0;

  bool operator==(const TripletId&) const = default;
};

// Flat cell index of a triplet, in 0..k^3-1.
inline std::uint64_t triplet_code(const TripletId& t, std::uint32_t k) {
  return (static_cast<std::uint64_t>(t.c1) * k + t.c2) * k + t.c3;
}
TripletId triplet_from_code(std::uint64_t code, std::uint32_t k);

// Fixed-width bit vector over paper positions 1..width; bit index w-1 stores
// position w.  Copies are independent of their source.
class PositionVector {
 public:
  explicit PositionVector(std::uint32_t width);

  std::uint32_t width() const { return width_; }
  bool test(std::uint32_t w) const;
  void set(std::uint32_t w);
  void reset(std::uint32_t w);
  bool any() const;
  std::uint32_t count() const;
  // Set positions in ascending order.
  std::vector<std::uint32_t> positions() const;

  bool operator==(const PositionVector&) const = default;

  friend PositionVector operator&(const PositionVector& a, const PositionVector& b);
  friend PositionVector shift_toward_end(const PositionVector& v, std::uint32_t amount);
  friend PositionVector shift_toward_start(const PositionVector& v, std::uint32_t amount);

 private:
  void check(std::uint32_t w) const;

  std::uint32_t width_;
  std::vector<std::uint64_t> words_;
};

// Moves every set position p to p+amount; positions past the width drop off.
PositionVector shift_toward_end(const PositionVector& v, std::uint32_t amount);
// Moves every set position p to p-amount; positions below 1 drop off.
PositionVector shift_toward_start(const PositionVector& v, std::uint32_t amount);

// Eagerly allocated position and mark planes, k^3 vectors of l bits each.
// Invariant: a set mark bit implies the matching position bit is set.
class BitGrid {
 public:
  explicit BitGrid(IndexConfig config);

  const IndexConfig& config() const { return config_; }

  void set_position(const TripletId& t, std::uint32_t w);
  bool test_position(const TripletId& t, std::uint32_t w) const;
  // Sets the mark bit and, to keep the invariant, the position bit.
  void set_mark(const TripletId& t, std::uint32_t w);
  // Clears only the mark bit; position bits are never cleared.
  void clear_mark(const TripletId& t, std::uint32_t w);
  bool test_mark(const TripletId& t, std::uint32_t w) const;

  PositionVector position_vector(const TripletId& t) const;
  PositionVector mark_vector(const TripletId& t) const;

 private:
  std::uint64_t bit_index(const TripletId& t, std::uint32_t w) const;
  PositionVector extract(const std::vector<std::uint64_t>& plane, const TripletId& t) const;

  IndexConfig config_;
  std::uint32_t words_per_vector_;
  std::vector<std::uint64_t> position_bits_;
  std::vector<std::uint64_t> mark_bits_;
};

// Total addressable bits of a grid with this config: 2*k^3*l.
std::uint64_t footprint_bits(const IndexConfig& config);

}  // namespace trigrid
