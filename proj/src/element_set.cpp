#include "amoebius/element_set.hpp"

#include <cstdio>

#include "amoebius/errors.hpp"

namespace amoebius {

std::string ElementSet::to_hex() const {
  std::string out;
  out.reserve(words_.size() * 16);
  char buf[17];
  for (Word w : words_) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(w));
    out += buf;
  }
  return out;
}

ElementSet ElementSet::from_hex(std::string const &hex, std::size_t nbits) {
  ElementSet s(nbits);
  if (hex.size() != s.words_.size() * 16)
    throw InvalidArgument("hex bitset has wrong length");
  for (std::size_t i = 0; i < s.words_.size(); ++i) {
    Word w = 0;
    for (std::size_t j = 0; j < 16; ++j) {
      char c = hex[i * 16 + j];
      unsigned v;
      if (c >= '0' && c <= '9')
        v = static_cast<unsigned>(c - '0');
      else if (c >= 'a' && c <= 'f')
        v = static_cast<unsigned>(c - 'a' + 10);
      else
        throw InvalidArgument("invalid hex digit in bitset");
      w = (w << 4) | v;
    }
    s.words_[i] = w;
  }
  if (nbits % kWordBits != 0 && !s.words_.empty() &&
      (s.words_.back() >> (nbits % kWordBits)) != 0)
    throw InvalidArgument("hex bitset has bits past its width");
  return s;
}

} // namespace amoebius
