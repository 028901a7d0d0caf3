#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "amoebius/class_poset.hpp"
#include "amoebius/exact.hpp"
#include "amoebius/lattice.hpp"

namespace amoebius {

inline constexpr std::size_t kDefaultTupleBudget = 100000000;

/// Per-lattice memo of exact-generation counts, shared by every formula:
///  - exact_generation(t)[K]: t-tuples of elements generating exactly K
///  - gamma_tuples(t)[K]: t-tuples of subgroups whose join is exactly K
class TupleCounts {
public:
  explicit TupleCounts(std::shared_ptr<SubgroupLattice const> lattice)
      : lattice_(std::move(lattice)) {}

  SubgroupLattice const &lattice() const noexcept { return *lattice_; }

  std::vector<ExactInt> const &exact_generation(unsigned t);
  std::vector<ExactInt> const &gamma_tuples(unsigned t);

private:
  std::vector<ExactInt> invert_below(std::vector<ExactInt> totals) const;

  std::shared_ptr<SubgroupLattice const> lattice_;
  std::mutex mutex_;
  std::map<unsigned, std::vector<ExactInt>> exact_;
  std::map<unsigned, std::vector<ExactInt>> gamma_;
};

/// Sum over H <= G of mu(H, G) |H|^t.
ExactInt phi_hall(SubgroupLattice const &lattice, unsigned t);

/// Literal scan of all |G|^t tuples. Throws BudgetExceeded.
ExactInt phi_bruteforce(FiniteGroup const &g, unsigned t,
                        std::size_t budget = kDefaultTupleBudget);

/// |union over a in A of (H^a)^t|, by summing exact-generation counts
/// over every subgroup lying below some orbit member.
ExactInt omega_A(ClassPoset const &poset, ClassId c, unsigned t, TupleCounts &counts);
ExactInt omega_A(ClassPoset const &poset, ClassId c, unsigned t);

/// Same value by inclusion-exclusion over the distinct orbit members.
/// Throws BudgetExceeded for orbits larger than `max_orbit`.
ExactInt omega_A_inclusion_exclusion(ClassPoset const &poset, ClassId c, unsigned t,
                                     std::size_t max_orbit = 12);

/// Tuples generating some member of the orbit of H.
ExactInt psi_A(ClassPoset const &poset, ClassId c, unsigned t, TupleCounts &counts);

/// Sum over classes of mu_A(H, G) * omega_A(H, t).
ExactInt phi_via_classes(ClassPoset const &poset, unsigned t, TupleCounts &counts);
ExactInt phi_via_classes(ClassPoset const &poset, unsigned t);

struct RelativeCount {
  ExactInt value;
  /// False when G/N needs more than t generators; value is then 0.
  bool quotient_generable = true;
  std::string warning;
};

/// Sum over H with HN = G of mu(H, G) |H meet N|^t. Throws NotNormal.
RelativeCount phi_relative(SubgroupLattice const &lattice, SubgroupId n, unsigned t);

/// First t-tuple (in element order) with <g> N = G, if any.
std::optional<std::vector<ElementIndex>> find_generating_lift(SubgroupLattice const &lattice,
                                                              SubgroupId n, unsigned t);

/// Sum over classes with HN = G of mu_A(H, G) * omega_A(H, N, t), where
/// omega_A(H, N, t) counts n in N^t with <g_i n_i> inside some H^a.
ExactInt phi_relative_via_classes(ClassPoset const &poset, SubgroupId n,
                                  std::vector<ElementIndex> const &lift,
                                  std::size_t budget = kDefaultTupleBudget);

/// Number of subgroups of H.
std::size_t sigma(SubgroupLattice const &lattice, SubgroupId h);

/// t-tuples of subgroups whose join lies in some orbit member of H.
ExactInt sigma_A(ClassPoset const &poset, ClassId c, unsigned t, TupleCounts &counts);

/// Subgroup t-tuples generating G, via sum of mu_A(H, G) sigma_A(H, t).
ExactInt phi_star(ClassPoset const &poset, unsigned t, TupleCounts &counts);
ExactInt phi_star(ClassPoset const &poset, unsigned t);

/// Literal scan over all t-tuples of subgroups.
ExactInt phi_star_bruteforce(SubgroupLattice const &lattice, unsigned t,
                             std::size_t budget = kDefaultTupleBudget);

struct GenerationProbabilities {
  ExactRational p;      // phi(G, t) / |G|^t
  ExactRational p_star; // phi*(G, t) / sigma(G)^t
};

GenerationProbabilities gen_probabilities(SubgroupLattice const &lattice, unsigned t);

/// Sum over H of mu(H, G) sigma(H); equals 1 for every finite group.
ExactInt mu_sigma_sum(SubgroupLattice const &lattice);

} // namespace amoebius
