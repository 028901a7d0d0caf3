#include "amoebius/permutation.hpp"

#include <cctype>
#include <numeric>

#include "amoebius/errors.hpp"

namespace amoebius {

Permutation::Permutation(std::size_t degree) : images_(degree == 0 ? 1 : degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty())
    images_.push_back(0);
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InvalidArgument("image list is not a bijection");
    seen[p] = true;
  }
}

namespace {

std::size_t parse_number(std::string_view text, std::size_t &pos) {
  std::size_t start = pos;
  std::size_t value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
    ++pos;
  }
  if (pos == start)
    throw ParseError("expected a point number", pos);
  return value;
}

void skip_space(std::string_view text, std::size_t &pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
    ++pos;
}

} // namespace

std::size_t max_point_in_cycles(std::string_view text) {
  std::size_t best = 0, pos = 0;
  while (pos < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t v = parse_number(text, pos);
      best = std::max(best, v);
    } else {
      ++pos;
    }
  }
  return best;
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos == text.size())
    throw ParseError("empty permutation", pos);
  while (pos < text.size()) {
    skip_space(text, pos);
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      throw ParseError("expected '('", pos);
    ++pos;
    skip_space(text, pos);
    std::vector<Point> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      continue;
    }
    while (true) {
      skip_space(text, pos);
      std::size_t at = pos;
      std::size_t v = parse_number(text, pos);
      if (v == 0 || v > degree)
        throw ParseError("point out of range", at);
      cycle.push_back(static_cast<Point>(v - 1));
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')'", pos);
    }
    // Apply the cycle after what has been read so far.
    Permutation c(degree);
    std::vector<bool> used(degree, false);
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (used[cycle[i]])
        throw ParseError("repeated point in cycle", pos);
      used[cycle[i]] = true;
      c.images_[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    result = result * c;
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::embedded(std::size_t offset, std::size_t new_degree) const {
  Permutation r(new_degree);
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[i + offset] = static_cast<Point>(images_[i] + offset);
  return r;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(Permutation const &p, Permutation const &q) {
  if (p.degree() != q.degree())
    throw InvalidArgument("degree mismatch in permutation product");
  Permutation r(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    r.images_[i] = q.images_[p.images_[i]];
  return r;
}

std::size_t PermutationHash::operator()(Permutation const &p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace amoebius
