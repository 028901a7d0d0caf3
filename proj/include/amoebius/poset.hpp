#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "amoebius/element_set.hpp"

namespace amoebius {

/// Möbius values are exact: every addition is overflow-checked and throws
/// rather than wrap.
using MobiusValue = std::int64_t;

/// A finite poset on {0..n-1} whose index order is a linear extension
/// (x <= y implies x <= y as integers). Stored as down-set and up-set rows.
class Poset {
public:
  Poset() = default;
  /// down[y] = { x : x <= y }.
  explicit Poset(std::vector<ElementSet> down);

  Poset(Poset const &o) : down_(o.down_), up_(o.up_) {}
  Poset(Poset &&o) noexcept : down_(std::move(o.down_)), up_(std::move(o.up_)) {}
  Poset &operator=(Poset &&o) noexcept {
    down_ = std::move(o.down_);
    up_ = std::move(o.up_);
    rows_.clear();
    cols_.clear();
    return *this;
  }
  Poset &operator=(Poset const &o) {
    if (this != &o) {
      down_ = o.down_;
      up_ = o.up_;
      std::scoped_lock lock(memo_mutex_);
      rows_.clear();
      cols_.clear();
    }
    return *this;
  }

  std::size_t size() const noexcept { return down_.size(); }
  bool leq(std::size_t x, std::size_t y) const noexcept { return down_[y].test(x); }
  bool less(std::size_t x, std::size_t y) const noexcept { return x != y && leq(x, y); }
  ElementSet const &down(std::size_t y) const { return down_[y]; }
  ElementSet const &up(std::size_t x) const { return up_[x]; }

  /// Reflexivity, antisymmetry and transitivity, checked exhaustively.
  bool satisfies_axioms() const;

  MobiusValue moebius(std::size_t x, std::size_t y) const;
  /// mu(x, y) for all x, memoized per y.
  std::vector<MobiusValue> const &moebius_column(std::size_t y) const;
  /// mu(x, y) for all y, memoized per x.
  std::vector<MobiusValue> const &moebius_row(std::size_t x) const;

  /// Sub-poset on the given (increasing) element list, re-indexed 0..k-1.
  Poset induced(std::vector<std::size_t> const &elements) const;

private:
  std::vector<ElementSet> down_;
  std::vector<ElementSet> up_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::size_t, std::vector<MobiusValue>> rows_;
  mutable std::map<std::size_t, std::vector<MobiusValue>> cols_;
};

MobiusValue checked_add(MobiusValue a, MobiusValue b);
MobiusValue checked_mul(MobiusValue a, MobiusValue b);

struct CrapoReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Throws NotAClosureMap naming the violated axiom.
void validate_closure(Poset const &p, std::vector<std::size_t> const &closure);

/// For every x and every closed y: sum over { z : cl(z) = y } of mu(x, z)
/// equals mu of the closed sub-poset at (x, y) when x is closed, else 0.
CrapoReport crapo_check(Poset const &p, std::vector<std::size_t> const &closure);

/// Same identity for one pair (x, y); y must be closed.
bool crapo_check_pair(Poset const &p, std::vector<std::size_t> const &closure,
                      std::size_t x, std::size_t y);

} // namespace amoebius
