#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace amoebius {

using ElementIndex = std::uint32_t;

/// Fixed-width bitset over the element indices of one group.
class ElementSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t nbits)
      : nbits_(nbits), words_((nbits + kWordBits - 1) / kWordBits, 0) {}

  std::size_t size_bits() const noexcept { return nbits_; }
  std::vector<Word> const &words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i) noexcept {
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
  }
  void reset(std::size_t i) noexcept {
    words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_)
      c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (Word w : words_)
      if (w)
        return false;
    return true;
  }

  ElementSet &operator&=(ElementSet const &o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet &operator|=(ElementSet const &o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, ElementSet const &b) {
    a &= b;
    return a;
  }
  friend ElementSet operator|(ElementSet a, ElementSet const &b) {
    a |= b;
    return a;
  }

  bool is_subset_of(ElementSet const &o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i])
        return false;
    return true;
  }

  std::size_t intersection_count(ElementSet const &o) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  template <typename F> void for_each(F &&f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<ElementIndex>(wi * kWordBits + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
  }

  std::vector<ElementIndex> to_indices() const {
    std::vector<ElementIndex> out;
    out.reserve(count());
    for_each([&](ElementIndex i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(ElementSet const &, ElementSet const &) = default;

  /// Lexicographic order on sorted member lists: the set holding the
  /// smallest differing index comes first.
  bool lex_less(ElementSet const &o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word diff = words_[i] ^ o.words_[i];
      if (diff) {
        Word low = diff & (~diff + 1);
        return (words_[i] & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
    for (Word w : words_) {
      h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  /// Lowercase hex, little-endian words, each word as 16 hex digits.
  std::string to_hex() const;
  static ElementSet from_hex(std::string const &hex, std::size_t nbits);

private:
  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet const &s) const noexcept { return s.hash(); }
};

} // namespace amoebius
