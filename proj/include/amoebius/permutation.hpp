#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace amoebius {

using Point = std::uint32_t;

/// A permutation of {0..degree-1}. Products compose left to right:
/// (p * q)(x) = q(p(x)), so H^g = g^-1 H g.
class Permutation {
public:
  Permutation() : images_{0} {}
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Parses 1-based cycle notation such as "(1,2)(3,4)" or "()".
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::vector<Point> const &images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Same permutation on a larger point set, shifted by `offset` points.
  Permutation embedded(std::size_t offset, std::size_t new_degree) const;

  /// 1-based cycle notation; identity prints as "()".
  std::string to_cycles() const;

  friend Permutation operator*(Permutation const &p, Permutation const &q);
  friend bool operator==(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(Permutation const &p) const noexcept;
};

/// Largest point mentioned in 1-based cycle text, 0 if none.
std::size_t max_point_in_cycles(std::string_view text);

} // namespace amoebius
