#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "amoebius/automorphism.hpp"
#include "amoebius/lattice.hpp"
#include "amoebius/poset.hpp"

namespace amoebius {

using ClassId = std::uint32_t;

struct SubgroupClass {
  SubgroupId representative;
  std::vector<SubgroupId> members; // sorted; members.front() == representative
};

/// The poset C_A(G) of A-orbits of subgroups, ordered by
/// [H] <= [K] iff H^a <= K for some a in A. Classes are listed by
/// representative id, so class order is a linear extension.
class ClassPoset {
public:
  ClassPoset(std::shared_ptr<SubgroupLattice const> lattice, AutomorphismGroup a);

  SubgroupLattice const &lattice() const noexcept { return *lattice_; }
  std::shared_ptr<SubgroupLattice const> const &lattice_ptr() const noexcept { return lattice_; }
  AutomorphismGroup const &automorphisms() const noexcept { return aut_; }
  FiniteGroup const &group() const noexcept { return lattice_->group(); }

  std::size_t size() const noexcept { return classes_.size(); }
  SubgroupClass const &cls(ClassId c) const { return classes_[c]; }
  std::vector<SubgroupClass> const &classes() const noexcept { return classes_; }
  ClassId class_of(SubgroupId h) const { return class_of_[h]; }
  ClassId top() const noexcept { return static_cast<ClassId>(classes_.size() - 1); }
  ClassId bottom() const noexcept { return 0; }
  Subgroup const &representative(ClassId c) const {
    return lattice_->subgroup(classes_[c].representative);
  }

  bool leq(ClassId x, ClassId y) const noexcept { return poset_.leq(x, y); }
  Poset const &poset() const noexcept { return poset_; }

  MobiusValue moebius(ClassId x, ClassId y) const { return poset_.moebius(x, y); }
  /// mu_A(H, G) for the class of H.
  MobiusValue mu_to_top(ClassId x) const { return poset_.moebius_column(top())[x]; }

  /// The subgroup ids lying below some orbit member of class c.
  ElementSet subgroups_below(ClassId c) const;

private:
  std::shared_ptr<SubgroupLattice const> lattice_;
  AutomorphismGroup aut_;
  std::vector<SubgroupClass> classes_;
  std::vector<ClassId> class_of_;
  Poset poset_;
};

ClassPoset build_class_poset(std::shared_ptr<SubgroupLattice const> lattice,
                             AutomorphismGroup a);

/// C(G): the poset of conjugacy classes, whose Möbius function is lambda.
ClassPoset conjugacy_class_poset(std::shared_ptr<SubgroupLattice const> lattice);

/// lambda(H, G) for every subgroup id.
std::vector<MobiusValue> lambda_of(std::shared_ptr<SubgroupLattice const> lattice);

/// Number of conjugates of H: |G : N_G(H)|.
std::size_t kappa(FiniteGroup const &g, Subgroup const &h);

/// Closure [H] -> [intersection of maximals over H], on class ids.
std::vector<std::size_t> class_closure(ClassPoset const &poset);

CrapoReport crapo_check(ClassPoset const &poset);

struct ClosednessReport {
  std::vector<ClassId> counterexamples; // mu_A != 0 but not an intersection of maximals
  std::size_t nonzero_classes = 0;
  bool ok() const noexcept { return counterexamples.empty(); }
};

/// mu_A(H, G) != 0 implies H is an intersection of maximal subgroups.
ClosednessReport nonzero_implies_closed(ClassPoset const &poset);

struct IdentityCheck {
  MobiusValue lhs = 0;
  MobiusValue rhs = 0;
  bool applicable = false;
  bool holds() const noexcept { return !applicable || lhs == rhs; }
};

/// For N normal and A-invariant with H < HN < G:
/// mu_A(H, G) = -sum { mu_A(H, Y) : [H] <= [Y] < [G], YN = G }.
IdentityCheck conjunctive_identity(ClassPoset const &poset, SubgroupId n, SubgroupId h);

/// Number of A-classes met by the complements of N containing H.
std::size_t gamma_complement_classes(ClassPoset const &poset, SubgroupId n, SubgroupId h);

/// For A induced by K, N an abelian minimal normal subgroup inside K and
/// H < HN: mu_A(H, G) = -mu_A(HN, G) * gamma_complement_classes(N, H).
IdentityCheck complement_class_identity(ClassPoset const &poset, SubgroupId n, SubgroupId h);

bool is_minimal_normal(SubgroupLattice const &lattice, SubgroupId n);

/// mu_A(HN, G) = mu_Abar(HN/N, G/N) for N normal and A-invariant;
/// evaluated for every H at once. Entry i refers to subgroup id i.
std::vector<IdentityCheck> quotient_identity(ClassPoset const &poset, SubgroupId n);

/// lambda(H, G) = mu_{inner-by-K}(H, G) for all H, for one K >= G'.
bool lambda_equals_inner_by(std::shared_ptr<SubgroupLattice const> lattice, SubgroupId k);

struct DivisibilityFailure {
  SubgroupId n;
  SubgroupId h;
  MobiusValue mu_hn;
  MobiusValue mu_h;
};

/// Experimental scan: does mu_A(HN, G) divide mu_A(H, G) for every A-invariant
/// normal N and every H? Lists the pairs where it does not.
std::vector<DivisibilityFailure> divisibility_scan(ClassPoset const &poset);

/// Human-readable generator word for a subgroup, e.g. "<(1,2,3),(1,2)>".
std::string subgroup_name(FiniteGroup const &g, Subgroup const &h);

} // namespace amoebius
