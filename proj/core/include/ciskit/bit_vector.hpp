#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ciskit {

/// Dense vector over GF(2). Coordinates are packed into 64-bit words,
/// coordinate i living in bit (i % 64) of word (i / 64). Bits past size()
/// are always zero.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length) : size_(length), words_(word_count(length), 0) {}

  /// Parses a string of '0'/'1' characters; character i is coordinate i.
  static BitVector from_string(std::string_view bits);
  /// Low `length` bits of `word`, bit i being coordinate i.
  static BitVector from_word(word_type word, std::size_t length);
  static BitVector ones(std::size_t length);
  static BitVector unit(std::size_t length, std::size_t index);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool get(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
  bool operator[](std::size_t i) const noexcept { return get(i); }
  void set(std::size_t i, bool value = true) noexcept {
    const word_type mask = word_type{1} << (i % word_bits);
    if (value) {
      words_[i / word_bits] |= mask;
    } else {
      words_[i / word_bits] &= ~mask;
    }
  }
  void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }

  std::size_t weight() const noexcept;
  bool is_zero() const noexcept;
  /// Index of the lowest set coordinate, or size() when zero.
  std::size_t first_set() const noexcept;

  /// Standard inner product over GF(2).
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }

  std::span<const word_type> words() const noexcept { return words_; }
  std::span<word_type> words() noexcept { return words_; }
  /// Packs into a single word; requires size() <= 64.
  word_type to_word() const;

  /// Sub-vector of coordinates [begin, begin + length).
  BitVector slice(std::size_t begin, std::size_t length) const;
  /// Concatenation (this, other).
  BitVector concat(const BitVector& other) const;

  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  /// Orders by length, then by the coordinate sequence read from index 0.
  friend std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs);

  static constexpr std::size_t word_count(std::size_t length) noexcept {
    return (length + word_bits - 1) / word_bits;
  }

 private:
  void check_same_size(const BitVector& other) const;

  std::size_t size_ = 0;
  std::vector<word_type> words_;
};

}  // namespace ciskit
