#include "ciskit/bit_vector.hpp"

#include <algorithm>

#include "ciskit/error.hpp"

namespace ciskit {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      raise(Errc::Parse, "bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::from_word(word_type word, std::size_t length) {
  if (length > word_bits) {
    raise(Errc::InvalidArgument, "from_word: length exceeds 64");
  }
  BitVector v(length);
  if (length > 0) {
    v.words_[0] = length == word_bits ? word : word & ((word_type{1} << length) - 1);
  }
  return v;
}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  for (std::size_t i = 0; i < length; ++i) {
    v.set(i);
  }
  return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
  BitVector v(length);
  v.set(index);
  return v;
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (word_type word : words_) {
    w += static_cast<std::size_t>(std::popcount(word));
  }
  return w;
}

bool BitVector::is_zero() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
  }
  return size_;
}

void BitVector::check_same_size(const BitVector& other) const {
  if (size_ != other.size_) {
    raise(Errc::DimensionMismatch, "bit vectors of lengths " + std::to_string(size_) + " and " +
                                       std::to_string(other.size_));
  }
}

bool BitVector::dot(const BitVector& other) const {
  check_same_size(other);
  word_type acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    acc ^= words_[i] & other.words_[i];
  }
  return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] ^= other.words_[i];
  }
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= other.words_[i];
  }
  return *this;
}

BitVector::word_type BitVector::to_word() const {
  if (size_ > word_bits) {
    raise(Errc::TooLarge, "to_word: vector longer than 64");
  }
  return words_.empty() ? 0 : words_[0];
}

BitVector BitVector::slice(std::size_t begin, std::size_t length) const {
  if (begin + length > size_) {
    raise(Errc::BadIndex, "slice out of range");
  }
  BitVector out(length);
  for (std::size_t i = 0; i < length; ++i) {
    if (get(begin + i)) {
      out.set(i);
    }
  }
  return out;
}

BitVector BitVector::concat(const BitVector& other) const {
  BitVector out(size_ + other.size_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  for (std::size_t i = 0; i < other.size_; ++i) {
    if (other.get(i)) {
      out.set(size_ + i);
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) {
      s[i] = '1';
    }
  }
  return s;
}

std::strong_ordering operator<=>(const BitVector& lhs, const BitVector& rhs) {
  if (auto c = lhs.size_ <=> rhs.size_; c != 0) {
    return c;
  }
  // Lexicographic on coordinates 0,1,2,...: the first differing coordinate
  // decides, and a 0 there sorts first.
  for (std::size_t i = 0; i < lhs.words_.size(); ++i) {
    const auto a = lhs.words_[i];
    const auto b = rhs.words_[i];
    if (a != b) {
      const auto low = std::countr_zero(a ^ b);
      return ((a >> low) & 1u) ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace ciskit
