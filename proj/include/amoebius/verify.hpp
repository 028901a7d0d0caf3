#pragma once

#include <memory>
#include <string>
#include <vector>

#include "amoebius/lattice.hpp"

namespace amoebius {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  unsigned t_max = 2;
  /// Brute-force scans run only when their tuple count stays below this.
  std::size_t tuple_budget = 2000000;
  std::size_t aut_bound = 64;
};

struct VerifyReport {
  std::string group;
  unsigned t_max = 0;
  std::vector<VerifyCheck> checks;
  bool passed() const noexcept;
  std::string to_json() const;
};

/// Every identity the engine knows, evaluated on one group.
VerifyReport verify_group(std::string const &spec,
                          std::shared_ptr<SubgroupLattice const> const &lattice,
                          VerifyOptions const &options = {});

} // namespace amoebius
