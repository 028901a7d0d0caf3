#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "amoebius/class_poset.hpp"
#include "amoebius/eulerian.hpp"
#include "amoebius/exact.hpp"

namespace amoebius {

struct MuLambdaRow {
  ClassId cls;
  SubgroupId representative;
  std::string name;
  std::size_t order;
  std::size_t normalizer_order;
  std::size_t kappa;
  MobiusValue mu;
  MobiusValue lambda;
  /// |N_{G'}(H) : G' meet H|
  std::size_t index_factor;
  MobiusValue mu_star;
  bool ok() const noexcept { return mu == mu_star; }
};

struct MuLambdaReport {
  std::string group;
  std::vector<MuLambdaRow> rows; // one per conjugacy class, by class id
  std::vector<ClassId> violations;
  bool passes() const noexcept { return violations.empty(); }
};

struct BetaVector {
  unsigned t = 1;
  std::vector<ClassId> classes; // C*(G) in its fixed order
  std::vector<ExactInt> entries;
};

struct StranaResult {
  unsigned t = 1;
  /// sum over C(G) of lambda(H, G) (alpha(H, t) - omega(H, t))
  ExactRational lhs;
  /// sum over T of (mu - mu*) |H|^t / |N_G(H)|
  ExactRational restricted;
  bool zero() const { return lhs == 0; }
  /// lhs == -|G| * restricted, the two forms being equivalent
  bool forms_agree = false;
};

struct FrobeniusVerdict {
  unsigned t_max = 6;
  bool constant = false;
  bool nilpotent = false;
  bool frobenius_cyclic_complement = false;
  /// constant iff (nilpotent or primitive Frobenius with cyclic complement)
  bool consistent() const noexcept {
    return constant == (nilpotent || frobenius_cyclic_complement);
  }
};

/// Everything about the (mu, lambda)-property of one group: the lattice,
/// C(G), the derived subgroup and per-class normalizer data.
class MuLambdaAnalysis {
public:
  explicit MuLambdaAnalysis(std::shared_ptr<SubgroupLattice const> lattice);

  SubgroupLattice const &lattice() const noexcept { return *lattice_; }
  ClassPoset const &classes() const noexcept { return poset_; }
  Subgroup const &derived() const noexcept { return derived_; }

  MobiusValue mu(ClassId c) const;
  MobiusValue lambda(ClassId c) const { return poset_.mu_to_top(c); }
  MobiusValue mu_star(ClassId c) const;
  std::size_t normalizer_order(ClassId c) const { return data_[c].normalizer_order; }

  MuLambdaReport check() const;

  /// Classes with mu != mu*.
  std::vector<ClassId> t_set() const;
  /// tau(n) = sum over T with |H| = n of (mu - mu*) / |N_G(H)|.
  ExactRational tau(std::size_t n) const;
  std::map<std::size_t, ExactRational> tau_spectrum() const;

  ExactRational alpha(ClassId c, unsigned t) const;
  ExactInt omega(ClassId c, unsigned t) const;
  ExactInt beta(ClassId c, unsigned t) const;

  /// [H] < [G] with lambda(H, G) != 0, by order descending then member set.
  std::vector<ClassId> c_star() const;
  BetaVector beta_vector(unsigned t) const;
  std::size_t beta_span_rank(unsigned t_max) const;

  StranaResult strana_check(unsigned t) const;
  FrobeniusVerdict frobenius_beta_classifier(unsigned t_max = 6) const;

private:
  struct ClassData {
    std::size_t normalizer_order;
    std::size_t normalizer_meet_derived; // |N_G(H) meet G'|
    std::size_t meet_derived;            // |H meet G'|
  };

  std::shared_ptr<SubgroupLattice const> lattice_;
  ClassPoset poset_;
  Subgroup derived_;
  std::vector<ClassData> data_;
  mutable TupleCounts counts_;
};

MuLambdaReport check_mu_lambda(std::shared_ptr<SubgroupLattice const> lattice);

/// Rank over the rationals, by exact Gaussian elimination.
std::size_t rational_rank(std::vector<std::vector<ExactInt>> const &rows);

} // namespace amoebius
