#pragma once

#include <memory>
#include <string>

#include "amoebius/automorphism.hpp"
#include "amoebius/lattice.hpp"

namespace amoebius {

/// derived | center | frattini | whole | trivial | #<id> | perm:[c;c;...]
/// The perm form names the subgroup generated by the listed elements.
SubgroupId select_subgroup(SubgroupLattice const &lattice, std::string const &selector);

/// 1 | inn | inn:<selector> | aut | maps:<file>, optionally prefixed "A=".
/// A maps file holds one automorphism per line as "src -> dst" pairs of
/// cycle words separated by ';'. Blank lines and '#' comments are skipped.
AutomorphismGroup parse_aut_spec(std::shared_ptr<SubgroupLattice const> const &lattice,
                                 std::string const &spec);

/// The maps-file body on its own, for callers that already hold the text.
AutomorphismGroup automorphisms_from_text(std::shared_ptr<FiniteGroup const> const &group,
                                          std::string const &text);

} // namespace amoebius
