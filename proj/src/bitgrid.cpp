#include "trigrid/bitgrid.hpp"

#include <bit>

namespace trigrid {

IndexConfig::IndexConfig(std::string alphabet, std::uint32_t max_key_length)
    : alphabet_(std::move(alphabet)), l_(max_key_length) {
  if (alphabet_.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
  if (l_ < 3) throw std::invalid_argument("max key length must be at least 3");
  codes_.fill(-1);
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    auto c = static_cast<unsigned char>(alphabet_[i]);
    if (codes_[c] >= 0) throw std::invalid_argument("alphabet symbols must be distinct");
    codes_[c] = static_cast<std::int16_t>(i);
  }
}

std::uint32_t IndexConfig::code(char c) const {
  std::int16_t code = codes_[static_cast<unsigned char>(c)];
  if (code < 0)
    throw EncodingError(std::string("character '") + c + "' is outside the alphabet");
  return static_cast<std::uint32_t>(code);
}

char IndexConfig::symbol(std::uint32_t code) const {
  if (code >= alphabet_.size()) throw std::out_of_range("symbol code out of range");
  return alphabet_[code];
}

TripletId triplet_from_code(std::uint64_t code, std::uint32_t k) {
  TripletId t;
  t.c3 = static_cast<std::uint32_t>(code % k);
  code /= k;
  t.c2 = static_cast<std::uint32_t>(code % k);
  t.c1 = static_cast<std::uint32_t>(code / k);
  return t;
}

PositionVector::PositionVector(std::uint32_t width)
    : width_(width), words_((width + 63) / 64, 0) {}

void PositionVector::check(std::uint32_t w) const {
  if (w < 1 || w > width_) throw std::out_of_range("position out of range");
}

bool PositionVector::test(std::uint32_t w) const {
  check(w);
  return (words_[(w - 1) >> 6] >> ((w - 1) & 63)) & 1u;
}

void PositionVector::set(std::uint32_t w) {
  check(w);
  words_[(w - 1) >> 6] |= std::uint64_t{1} << ((w - 1) & 63);
}

void PositionVector::reset(std::uint32_t w) {
  check(w);
  words_[(w - 1) >> 6] &= ~(std::uint64_t{1} << ((w - 1) & 63));
}

bool PositionVector::any() const {
  for (std::uint64_t word : words_)
    if (word) return true;
  return false;
}

std::uint32_t PositionVector::count() const {
  std::uint32_t total = 0;
  for (std::uint64_t word : words_) total += static_cast<std::uint32_t>(std::popcount(word));
  return total;
}

std::vector<std::uint32_t> PositionVector::positions() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t word = words_[i];
    while (word) {
      auto bit = static_cast<std::uint32_t>(std::countr_zero(word));
      out.push_back(static_cast<std::uint32_t>(i * 64 + bit + 1));
      word &= word - 1;
    }
  }
  return out;
}

PositionVector operator&(const PositionVector& a, const PositionVector& b) {
  if (a.width_ != b.width_) throw std::invalid_argument("vector width mismatch");
  PositionVector out(a.width_);
  for (std::size_t i = 0; i < out.words_.size(); ++i) out.words_[i] = a.words_[i] & b.words_[i];
  return out;
}

namespace {

// Mask covering the valid bits of the last word.
std::uint64_t tail_mask(std::uint32_t width) {
  std::uint32_t used = width & 63;
  return used == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
}

}  // namespace

PositionVector shift_toward_end(const PositionVector& v, std::uint32_t amount) {
  PositionVector out(v.width_);
  if (amount >= v.width_) return out;
  const std::uint32_t word_shift = amount >> 6;
  const std::uint32_t bit_shift = amount & 63;
  const std::size_t n = out.words_.size();
  for (std::size_t i = n; i-- > 0;) {
    if (i < word_shift) break;
    std::uint64_t word = v.words_[i - word_shift] << bit_shift;
    if (bit_shift != 0 && i > word_shift) word |= v.words_[i - word_shift - 1] >> (64 - bit_shift);
    out.words_[i] = word;
  }
  out.words_[n - 1] &= tail_mask(v.width_);
  return out;
}

PositionVector shift_toward_start(const PositionVector& v, std::uint32_t amount) {
  PositionVector out(v.width_);
  if (amount >= v.width_) return out;
  const std::uint32_t word_shift = amount >> 6;
  const std::uint32_t bit_shift = amount & 63;
  const std::size_t n = out.words_.size();
  for (std::size_t i = 0; i + word_shift < n; ++i) {
    std::uint64_t word = v.words_[i + word_shift] >> bit_shift;
    if (bit_shift != 0 && i + word_shift + 1 < n)
      word |= v.words_[i + word_shift + 1] << (64 - bit_shift);
    out.words_[i] = word;
  }
  return out;
}

BitGrid::BitGrid(IndexConfig config)
    : config_(std::move(config)), words_per_vector_((config_.l() + 63) / 64) {
  const std::uint64_t k = config_.k();
  const std::uint64_t cells = k * k * k;
  position_bits_.assign(cells * words_per_vector_, 0);
  mark_bits_.assign(cells * words_per_vector_, 0);
}

std::uint64_t BitGrid::bit_index(const TripletId& t, std::uint32_t w) const {
  const std::uint32_t k = config_.k();
  if (t.c1 >= k || t.c2 >= k || t.c3 >= k) throw std::out_of_range("symbol code out of range");
  if (w < 1 || w > config_.l()) throw std::out_of_range("position out of range");
  return triplet_code(t, k) * words_per_vector_ * 64 + (w - 1);
}

void BitGrid::set_position(const TripletId& t, std::uint32_t w) {
  std::uint64_t bit = bit_index(t, w);
  position_bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
}

bool BitGrid::test_position(const TripletId& t, std::uint32_t w) const {
  std::uint64_t bit = bit_index(t, w);
  return (position_bits_[bit >> 6] >> (bit & 63)) & 1u;
}

void BitGrid::set_mark(const TripletId& t, std::uint32_t w) {
  std::uint64_t bit = bit_index(t, w);
  mark_bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
  position_bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
}

void BitGrid::clear_mark(const TripletId& t, std::uint32_t w) {
  std::uint64_t bit = bit_index(t, w);
  mark_bits_[bit >> 6] &= ~(std::uint64_t{1} << (bit & 63));
}

bool BitGrid::test_mark(const TripletId& t, std::uint32_t w) const {
  std::uint64_t bit = bit_index(t, w);
  return (mark_bits_[bit >> 6] >> (bit & 63)) & 1u;
}

PositionVector BitGrid::extract(const std::vector<std::uint64_t>& plane, const TripletId& t) const {
  const std::uint32_t k = config_.k();
  if (t.c1 >= k || t.c2 >= k || t.c3 >= k) throw std::out_of_range("symbol code out of range");
  PositionVector out(config_.l());
  const std::uint64_t base = triplet_code(t, k) * words_per_vector_;
  for (std::uint32_t w = 1; w <= config_.l(); ++w) {
    std::uint64_t bit = (base * 64) + (w - 1);
    if ((plane[bit >> 6] >> (bit & 63)) & 1u) out.set(w);
  }
  return out;
}

PositionVector BitGrid::position_vector(const TripletId& t) const {
  return extract(position_bits_, t);
}

PositionVector BitGrid::mark_vector(const TripletId& t) const {
  return extract(mark_bits_, t);
}

std::uint64_t footprint_bits(const IndexConfig& config) {
  const std::uint64_t k = config.k();
  return 2 * k * k * k * config.l();
}

}  // namespace trigrid
