#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amoebius/group.hpp"
#include "amoebius/lattice.hpp"

namespace amoebius {

/// A multiplication-respecting permutation of element indices.
class Automorphism {
public:
  Automorphism() = default;
  explicit Automorphism(std::vector<ElementIndex> map) : map_(std::move(map)) {}

  static Automorphism identity(std::size_t order);
  static Automorphism conjugation(FiniteGroup const &g, ElementIndex k);

  ElementIndex operator()(ElementIndex x) const noexcept { return map_[x]; }
  std::vector<ElementIndex> const &map() const noexcept { return map_; }
  std::size_t size() const noexcept { return map_.size(); }

  /// this first, then o.
  Automorphism then(Automorphism const &o) const;
  Automorphism inverse() const;
  bool is_identity() const noexcept;

  ElementSet image(ElementSet const &s) const;
  Subgroup image(Subgroup const &h) const;

  /// Bijective and multiplicative, checked on every pair of elements.
  bool is_valid(FiniteGroup const &g) const;

  friend bool operator==(Automorphism const &, Automorphism const &) = default;

private:
  std::vector<ElementIndex> map_;
};

enum class AutOrigin { Trivial, InnerByK, ExplicitGenerated, FullAut };

std::string to_string(AutOrigin o);

/// A subgroup A of Aut(G), given by generators. The element list is
/// enumerated on first use; the order is known at construction.
class AutomorphismGroup {
public:
  AutomorphismGroup(std::shared_ptr<FiniteGroup const> group,
                    std::vector<Automorphism> generators, AutOrigin origin,
                    std::optional<Subgroup> inner_by = std::nullopt);

  FiniteGroup const &group() const noexcept { return *group_; }
  std::shared_ptr<FiniteGroup const> const &group_ptr() const noexcept { return group_; }

  std::size_t size() const noexcept { return order_; }
  std::vector<Automorphism> const &generators() const noexcept { return gens_; }
  AutOrigin origin() const noexcept { return origin_; }
  std::optional<Subgroup> const &inner_by() const noexcept { return inner_by_; }

  std::vector<Automorphism> const &elements() const;

  /// True when every generator fixes the subgroup setwise.
  bool leaves_invariant(Subgroup const &n) const;

private:
  friend AutomorphismGroup full_automorphism_group(std::shared_ptr<FiniteGroup const>,
                                                   std::size_t, std::size_t);
  std::shared_ptr<FiniteGroup const> group_;
  std::vector<Automorphism> gens_;
  AutOrigin origin_;
  std::optional<Subgroup> inner_by_;
  std::size_t order_ = 1;
  mutable std::shared_ptr<std::vector<Automorphism>> elements_;
};

inline constexpr std::size_t kDefaultAutBruteForceBound = 64;
inline constexpr std::size_t kDefaultAutCountBound = 1000000;

AutomorphismGroup trivial_automorphisms(std::shared_ptr<FiniteGroup const> g);

/// Conjugation by the elements of K.
AutomorphismGroup inner_automorphisms(std::shared_ptr<FiniteGroup const> g,
                                      Subgroup const &k);

/// The unique automorphism sending gens[i] to images[i]. Throws
/// NotAHomomorphism or NotBijective.
Automorphism automorphism_from_images(FiniteGroup const &g,
                                      std::span<ElementIndex const> gens,
                                      std::span<ElementIndex const> images);

AutomorphismGroup generated_automorphisms(std::shared_ptr<FiniteGroup const> g,
                                          std::vector<Automorphism> gens);

/// All of Aut(G) by backtracking over generator images. Throws
/// BoundExceeded when |G| exceeds `order_bound` or |Aut(G)| exceeds
/// `count_bound`.
AutomorphismGroup full_automorphism_group(std::shared_ptr<FiniteGroup const> g,
                                          std::size_t order_bound = kDefaultAutBruteForceBound,
                                          std::size_t count_bound = kDefaultAutCountBound);

/// Lattice ids of { H^a : a in A }, sorted.
std::vector<SubgroupId> subgroup_orbit(AutomorphismGroup const &a, SubgroupId h,
                                       SubgroupLattice const &lattice);

/// The group of automorphisms of G/N induced by A. Throws NotInvariant.
AutomorphismGroup induced_quotient_action(AutomorphismGroup const &a, Subgroup const &n,
                                          std::shared_ptr<FiniteGroup const> quotient,
                                          std::vector<ElementIndex> const &projection);

} // namespace amoebius
