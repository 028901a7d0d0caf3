#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "amoebius/element_set.hpp"
#include "amoebius/permutation.hpp"

namespace amoebius {

inline constexpr std::size_t kDefaultOrderCap = 10000;

/// A subgroup of a fully enumerated group: the member bitset is the
/// identity of the subgroup, `gens` is only a witness.
struct Subgroup {
  ElementSet members;
  std::size_t order = 0;
  std::vector<ElementIndex> gens;

  bool contains(ElementIndex x) const noexcept { return members.test(x); }
  bool is_subgroup_of(Subgroup const &o) const noexcept {
    return order <= o.order && members.is_subset_of(o.members);
  }
  friend bool operator==(Subgroup const &a, Subgroup const &b) {
    return a.members == b.members;
  }
};

/// A permutation group with every element listed. Element 0 is the
/// identity; the remaining order is breadth first over the generators.
class FiniteGroup {
public:
  FiniteGroup() = default;

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  ElementIndex identity() const noexcept { return 0; }

  Permutation const &element(ElementIndex i) const { return elements_[i]; }
  std::vector<Permutation> const &elements() const noexcept { return elements_; }
  std::vector<ElementIndex> const &generators() const noexcept { return gens_; }

  /// Index of a permutation, or order() if it is not in the group.
  ElementIndex find(Permutation const &p) const;
  ElementIndex index_of(Permutation const &p) const;

  ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept {
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  }
  ElementIndex inv(ElementIndex a) const noexcept { return inverse_[a]; }
  /// g^-1 x g
  ElementIndex conj(ElementIndex x, ElementIndex g) const noexcept {
    return mul(mul(inverse_[g], x), g);
  }
  ElementIndex pow(ElementIndex x, std::size_t e) const noexcept;
  std::size_t element_order(ElementIndex x) const noexcept { return elem_order_[x]; }

  /// Subgroup generated by `gens`.
  Subgroup generate(std::span<ElementIndex const> gens) const;
  /// Subgroup generated by `base` and one more element.
  Subgroup extend(Subgroup const &base, ElementIndex g) const;
  /// Subgroup generated by the union of two subgroups.
  Subgroup join(Subgroup const &a, Subgroup const &b) const;

  Subgroup whole() const;
  Subgroup trivial() const;
  Subgroup from_members(ElementSet members) const;

  Subgroup conjugate(Subgroup const &h, ElementIndex g) const;
  bool is_normal(Subgroup const &n) const;
  bool is_abelian() const;

  /// 1-based cycle notation of an element.
  std::string name(ElementIndex i) const { return elements_[i].to_cycles(); }

  friend FiniteGroup generate_group(std::vector<Permutation> const &gens,
                                    std::size_t cap, std::size_t degree);

private:
  std::size_t degree_ = 1;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index_;
  std::vector<ElementIndex> gens_;
  std::vector<ElementIndex> inverse_;
  std::vector<ElementIndex> table_;
  std::vector<std::size_t> elem_order_;
};

/// Closure of `gens` under multiplication. An empty list yields the trivial
/// group on `degree` points (taken from the generators when non-empty).
FiniteGroup generate_group(std::vector<Permutation> const &gens,
                           std::size_t cap = kDefaultOrderCap,
                           std::size_t degree = 1);

/// Builds a group from the external spec syntax, e.g. "S:4", "D:7xC:2",
/// "perm:[(1,2)(3,4);(1,3)]".
FiniteGroup build_from_spec(std::string const &spec,
                            std::size_t cap = kDefaultOrderCap);

/// Generator permutations for a spec string, without closing them.
std::vector<Permutation> spec_generators(std::string const &spec,
                                         std::size_t &degree);

Subgroup commutator_subgroup(FiniteGroup const &g);
Subgroup center(FiniteGroup const &g);
bool is_solvable(FiniteGroup const &g);

struct Quotient {
  FiniteGroup group;
  /// Element of G -> element of G/N.
  std::vector<ElementIndex> projection;
};

Quotient quotient_group(FiniteGroup const &g, Subgroup const &n);

} // namespace amoebius
